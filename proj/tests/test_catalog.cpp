#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hopfrb/catalog.hpp"

using namespace hopfrb;
using Q = Rational;
using json = nlohmann::json;

namespace {

const Catalog<Q>& cat() {
  static const Catalog<Q> c = standard_catalog();
  return c;
}

// a*a = b, a*b = a, everything else zero: (aa)b = 0 but a(ab) = b
json broken_algebra() {
  return json::parse(R"({"kind":"algebra","name":"broken","field":{"kind":"rational"},"dim":2,"basis":["a","b"],
    "mult":[{"i":0,"j":0,"k":1,"c":"1"},{"i":0,"j":1,"k":0,"c":"1"}]})");
}

}  // namespace

TEST_CASE("required entries exist with the right kinds") {
  const std::vector<std::pair<std::string, EntryKind>> required{
      {"mat2-rational", EntryKind::algebra},
      {"mat3-rational", EntryKind::algebra},
      {"group-algebra-c2", EntryKind::hopf},
      {"group-algebra-c3", EntryKind::hopf},
      {"group-algebra-s3", EntryKind::hopf},
      {"dual-group-algebra-c2", EntryKind::hopf},
      {"sweedler-h4", EntryKind::hopf},
      {"weak-two-point", EntryKind::weak_hopf},
      {"weak-pair-groupoid", EntryKind::weak_hopf},
      {"c2-triangular-R", EntryKind::rmatrix},
      {"c2-bicharacter-sigma", EntryKind::pairing},
      {"kx-mod-x2-with-c2-action", EntryKind::module},
      {"group-algebra-c2-regular-hopf-module", EntryKind::hopf_module},
      {"group-algebra-c2-double-hopf-module", EntryKind::hopf_module},
      {"c2-bicharacter-dimodule", EntryKind::dimodule},
      {"c2-triangular-dimodule", EntryKind::dimodule},
      {"weak-pair-groupoid-regular-doi-hopf", EntryKind::doi_hopf},
      {"c2-delta-e", EntryKind::functional},
      {"c2-counit", EntryKind::functional},
      {"c2-2delta-e", EntryKind::functional},
      {"mat2-proj-e11", EntryKind::rbp_instance},
      {"doubled-mat2", EntryKind::rbp_instance},
  };
  for (const auto& [name, kind] : required) {
    INFO(name);
    REQUIRE(cat().contains(name));
    CHECK(cat().get(name).kind == kind);
  }
  CHECK_THROWS_AS(cat().get("no-such-entry"), Error);
}

TEST_CASE("catalog entries match their definitions") {
  const auto& m2 = cat().get("mat2-rational").as<FinAlgebra<Q>>();
  CHECK(m2.dim() == 4);
  CHECK(m2.labels() == std::vector<std::string>{"E11", "E12", "E21", "E22"});
  // E12 E21 = E11
  CHECK(equal(Vec<Q>(m2.product(1, 2)), m2.basis(0)));

  const auto& h4 = cat().bialgebra("sweedler-h4");
  CHECK(check_hopf(h4).result() == Verdict::pass);
  CHECK(cat().bialgebra("group-algebra-s3").dim() == 6);

  const auto& r = cat().get("c2-triangular-R").as<RMatrixEntry<Q>>();
  CHECK(to_string(r.r.R(3)) == "-1/2");
}

TEST_CASE("every entry passes its kind's checker") {
  for (const auto* e : cat().list()) {
    INFO(e->name);
    CHECK(validate(*e).passed());
  }
  CHECK(cat().size() > 50);
}

TEST_CASE("kind filter and names") {
  for (const auto* e : cat().list(EntryKind::weak_hopf)) CHECK(e->kind == EntryKind::weak_hopf);
  CHECK(cat().list(EntryKind::weak_hopf).size() == 2);
  for (EntryKind k : all_kinds()) CHECK(parse_kind(kind_name(k)) == k);
  CHECK_THROWS_AS(parse_kind("groupoid"), ParseError);
}

TEST_CASE("serialize and reload yields identical constants") {
  for (const auto* e : cat().list()) {
    INFO(e->name);
    const json j = to_json(*e);
    const CatalogEntry<Q> back = entry_from_json(j, cat());
    CHECK(back.kind == e->kind);
    CHECK(to_json(back) == j);
    CHECK(validate(back).passed());
  }
}

TEST_CASE("fresh catalogs are deterministic") {
  const Catalog<Q> again = standard_catalog();
  REQUIRE(again.size() == cat().size());
  const auto a = cat().list(), b = again.list();
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(*a[i]).dump() == to_json(*b[i]).dump());
}

TEST_CASE("broken associativity is rejected with a witness triple") {
  Catalog<Q> c;
  try {
    load_json(broken_algebra(), c);
    FAIL("expected a validation error");
  } catch (const ValidationError& err) {
    const auto* f = err.report.first_failure();
    REQUIRE(f);
    CHECK(f->axiom == "associativity");
    REQUIRE(f->witness);
    CHECK(f->witness->indices.size() == 3);
  }
  CHECK(c.size() == 0);
}

TEST_CASE("files load into a catalog, composites resolve by name") {
  Catalog<Q> c;
  const json doc = json::array({to_json(cat().get("group-algebra-c2")), to_json(cat().get("group-algebra-c2-right-regular")),
                                to_json(cat().get("group-algebra-c2-right-regular-comodule")),
                                to_json(cat().get("group-algebra-c2-regular-hopf-module"))});
  const std::string path = "catalog_test_tmp.json";
  {
    std::ofstream out(path);
    out << doc.dump(2);
  }
  const auto names = load_file(path, c);
  std::remove(path.c_str());
  CHECK(names.size() == 4);
  CHECK(c.get("group-algebra-c2-regular-hopf-module").kind == EntryKind::hopf_module);
  CHECK(c.get("group-algebra-c2").provenance == cat().get("group-algebra-c2").provenance);
}

TEST_CASE("loader errors") {
  Catalog<Q> c;
  CHECK_THROWS_AS(load_file("does-not-exist.json", c), ParseError);
  json j = broken_algebra();
  j.erase("mult");
  CHECK_THROWS_AS(load_json(j, c), ParseError);
  j = broken_algebra();
  j["kind"] = "groupoid";
  CHECK_THROWS_AS(load_json(j, c), ParseError);
  j = broken_algebra();
  j["mult"][0]["k"] = 5;
  CHECK_THROWS_AS(load_json(j, c), ParseError);
  j = broken_algebra();
  j["mult"][0]["c"] = "1/0";
  CHECK_THROWS_AS(load_json(j, c), Error);
  j = broken_algebra();
  j["field"] = {{"kind", "prime"}, {"p", 5}};
  CHECK_THROWS_AS(load_json(j, c), FieldError);

  // references to missing entries
  CHECK_THROWS_AS(load_json(to_json(cat().get("group-algebra-c2-right-regular")), c), Error);

  // duplicates
  load_json(to_json(cat().get("mat2-rational")), c);
  CHECK_THROWS_AS(load_json(to_json(cat().get("mat2-rational")), c), Error);
}

TEST_CASE("kind is inferred from the fields present") {
  Catalog<Q> c;
  json h = to_json(cat().get("group-algebra-c2"));
  h.erase("kind");
  load_json(h, c);
  CHECK(c.get("group-algebra-c2").kind == EntryKind::hopf);
  json a = to_json(cat().get("mat2-rational"));
  a.erase("kind");
  load_json(a, c);
  CHECK(c.get("mat2-rational").kind == EntryKind::algebra);
}

TEST_CASE("hopf kinds without an antipode get one computed") {
  Catalog<Q> c;
  json h = to_json(cat().get("sweedler-h4"));
  h.erase("antipode");
  load_json(h, c);
  CHECK(equal(c.bialgebra("sweedler-h4").antipode(), cat().bialgebra("sweedler-h4").antipode()));
}

TEST_CASE("prime-field files load into prime catalogs") {
  json h = to_json(cat().get("group-algebra-c2"));
  h["field"] = {{"kind", "prime"}, {"p", 5}};
  json mod = to_json(cat().get("kx-mod-x2-with-c2-action"));
  const json doc = json::array({h, to_json(cat().get("kx-mod-x2")), mod});
  // the module has no field of its own; kx-mod-x2 is declared rational
  CHECK(declared_field(doc) == FieldSpec::prime(5));
  Catalog<ModP> c(FieldSpec::prime(5));
  load_json(h, c);
  load_json(mod, c);
  const auto& act = c.module("kx-mod-x2-with-c2-action");
  CHECK(to_string(act.op(1)(1, 1)) == "4 mod 5");
  CHECK(check_hopf(c.bialgebra("group-algebra-c2")).passed());
  CHECK_THROWS_AS(Catalog<ModP>(FieldSpec::rational()), FieldError);
}
