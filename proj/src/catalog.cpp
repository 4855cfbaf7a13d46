#include "hopfrb/catalog.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "hopfrb/builders.hpp"

namespace hopfrb {

namespace {

constexpr std::array<std::pair<EntryKind, std::string_view>, 15> kKindNames{{
    {EntryKind::algebra, "algebra"},
    {EntryKind::bialgebra, "bialgebra"},
    {EntryKind::hopf, "hopf"},
    {EntryKind::weak_bialgebra, "weak-bialgebra"},
    {EntryKind::weak_hopf, "weak-hopf"},
    {EntryKind::module, "module"},
    {EntryKind::comodule, "comodule"},
    {EntryKind::dimodule, "dimodule"},
    {EntryKind::hopf_module, "hopf-module"},
    {EntryKind::doi_hopf, "doi-hopf"},
    {EntryKind::comodule_algebra, "comodule-algebra"},
    {EntryKind::pairing, "pairing"},
    {EntryKind::rmatrix, "rmatrix"},
    {EntryKind::functional, "functional"},
    {EntryKind::rbp_instance, "rbp-instance"},
}};

using Q = Rational;
const FieldSpec QQ = FieldSpec::rational();

Mat<Q> m(std::initializer_list<std::initializer_list<long>> rows) { return make_mat<Q>(QQ, rows); }
Vec<Q> v(std::initializer_list<long> xs) { return make_vec<Q>(QQ, xs); }

class Builder {
 public:
  Catalog<Q> c;

  void add(std::string name, EntryKind kind, Payload<Q> payload, std::string note) {
    c.add(CatalogEntry<Q>{std::move(name), kind, std::move(payload), std::move(note)});
  }

  void regular(const FinAlgebra<Q>& a, Side side) {
    const std::string name = a.name() + "-" + side_name(side) + "-regular";
    add(name, EntryKind::module, regular_module(a, side, name), "regular module");
  }

  void regular_comodule_of(const Bialgebra<Q>& h) {
    const std::string name = h.name() + "-right-regular-comodule";
    add(name, EntryKind::comodule, regular_comodule(h.coalgebra(), Side::right, name), "coaction by the coproduct");
  }

  void regular_hopf_module(const Bialgebra<Q>& h) {
    add(h.name() + "-regular-hopf-module", EntryKind::hopf_module,
        HopfModule<Q>(h.name() + "-regular-hopf-module", h, c.module(h.name() + "-right-regular"),
                      c.comodule(h.name() + "-right-regular-comodule")),
        "H over itself by multiplication and coproduct");
  }

  void regular_doi_hopf(const Bialgebra<Q>& w) {
    const std::string ca = w.name() + "-regular-comodule-algebra";
    add(ca, EntryKind::comodule_algebra, WeakComoduleAlgebra<Q>(ca, w, w.algebra(), c.comodule(w.name() + "-right-regular-comodule")),
        "H coacting on itself by the coproduct");
    const std::string dh = w.name() + "-regular-doi-hopf";
    add(dh, EntryKind::doi_hopf,
        DoiHopfModule<Q>(dh, c.comodule_algebra(ca), c.module(w.name() + "-right-regular"), c.comodule(w.name() + "-right-regular-comodule")),
        "M = A = H");
  }

  void functional(const std::string& name, const Bialgebra<Q>& h, Vec<Q> coords, std::string note) {
    add(name, EntryKind::functional, FunctionalEntry<Q>{h, make_functional(h.coalgebra(), std::move(coords))}, std::move(note));
  }
};

}  // namespace

std::string_view kind_name(EntryKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

EntryKind parse_kind(std::string_view s) {
  for (const auto& [kind, name] : kKindNames)
    if (name == s) return kind;
  throw ParseError("unknown entry kind '" + std::string(s) + "'");
}

const std::vector<EntryKind>& all_kinds() {
  static const std::vector<EntryKind> kinds = [] {
    std::vector<EntryKind> out;
    for (const auto& [kind, name] : kKindNames) out.push_back(kind);
    return out;
  }();
  return kinds;
}

namespace io {

json field_to_json(const FieldSpec& f) {
  if (f.is_rational()) return {{"kind", "rational"}};
  return {{"kind", "prime"}, {"p", f.p}};
}

FieldSpec field_from_json(const json& j) {
  const std::string kind = string_member(j, "kind");
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "prime") {
    const json& p = member(j, "p");
    if (!p.is_number_integer() || p.get<long long>() < 2) throw ParseError("prime field needs an integer p >= 2");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j[key];
}

Index index_member(const json& j, const char* key) {
  const json& x = member(j, key);
  if (!x.is_number_integer() || x.get<long long>() < 0) throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  return static_cast<Index>(x.get<long long>());
}

std::string string_member(const json& j, const char* key) {
  const json& x = member(j, key);
  if (!x.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return x.get<std::string>();
}

std::vector<std::string> labels_member(const json& j, const char* key, Index expected) {
  const json& x = member(j, key);
  if (!x.is_array() || static_cast<Index>(x.size()) != expected)
    throw ParseError(std::string("field '") + key + "' must list " + std::to_string(expected) + " labels");
  std::vector<std::string> out;
  for (const auto& s : x) {
    if (!s.is_string()) throw ParseError("basis labels must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace io

FieldSpec declared_field(const io::json& j) {
  if (j.is_array()) {
    for (const auto& x : j)
      if (x.is_object() && x.contains("field")) return io::field_from_json(x["field"]);
    return FieldSpec::rational();
  }
  if (j.is_object() && j.contains("field")) return io::field_from_json(j["field"]);
  return FieldSpec::rational();
}

RbpInstance<Q> mat2_projection_instance() {
  const auto a = matrix_algebra<Q>(QQ, 2, "mat2-rational");
  const Mat<Q> p = a.left_mult(a.basis(0));
  return RbpInstance<Q>("mat2-proj-e11", regular_module(a, Side::left, "mat2-rational-left-regular"), Side::left, p, p,
                        scalar<Q>(QQ, -1));
}

Catalog<Q> standard_catalog() {
  Builder b;
  const auto mat2 = matrix_algebra<Q>(QQ, 2, "mat2-rational");
  const auto mat3 = matrix_algebra<Q>(QQ, 3, "mat3-rational");
  const auto kx = dual_numbers<Q>(QQ, "kx-mod-x2");
  b.add(mat2.name(), EntryKind::algebra, mat2, "2x2 matrices, matrix-unit basis");
  b.add(mat3.name(), EntryKind::algebra, mat3, "3x3 matrices, matrix-unit basis");
  b.add(kx.name(), EntryKind::algebra, kx, "dual numbers");

  const auto c2 = group_algebra<Q>(QQ, cyclic_group(2), "group-algebra-c2");
  const auto c3 = group_algebra<Q>(QQ, cyclic_group(3), "group-algebra-c3");
  const auto s3 = group_algebra<Q>(QQ, symmetric_group3(), "group-algebra-s3");
  const auto dc2 = dual_group_algebra<Q>(QQ, cyclic_group(2), "dual-group-algebra-c2");
  const auto h4 = sweedler_h4<Q>(QQ, "sweedler-h4");
  const auto k = trivial_hopf<Q>(QQ, "trivial-k");
  for (const auto* h : {&c2, &c3, &s3, &dc2, &h4, &k}) b.add(h->name(), EntryKind::hopf, *h, "Hopf algebra");
  const auto wt = weak_two_point<Q>(QQ, "weak-two-point");
  const auto pg = pair_groupoid<Q>(QQ, 2, "weak-pair-groupoid");
  b.add(wt.name(), EntryKind::weak_hopf, wt, "k e1 + k e2 with group-like idempotents");
  b.add(pg.name(), EntryKind::weak_hopf, pg, "groupoid algebra of the pair groupoid on two points");

  for (Side s : {Side::left, Side::right}) {
    b.regular(mat2, s);
    b.regular(c2.algebra(), s);
    b.regular(c3.algebra(), s);
  }
  for (const auto* h : {&h4, &pg, &wt}) b.regular(h->algebra(), Side::right);
  b.add("group-algebra-c2-left-trivial", EntryKind::module, trivial_module(c2, 2, Side::left, "group-algebra-c2-left-trivial"),
        "h.m = eps(h)m on k^2");
  b.add("kx-mod-x2-with-c2-action", EntryKind::module,
        ActionStructure<Q>::from_operators("kx-mod-x2-with-c2-action", c2.algebra(), Side::left, {identity<Q>(QQ, 2), m({{1, 0}, {0, -1}})},
                                           {"1", "x"}),
        "g acts on k[x]/(x^2) by x -> -x");

  for (const auto* h : {&c2, &c3, &h4, &pg, &wt}) b.regular_comodule_of(*h);
  for (const auto* h : {&c2, &c3, &h4}) b.regular_hopf_module(*h);

  {
    // H (+) H over kC2, basis f_{k,i} at k*2+i
    const Mat<Q> i2 = identity<Q>(QQ, 2);
    std::vector<Mat<Q>> ops;
    for (Index j = 0; j < 2; ++j) ops.push_back(kron(i2, Mat<Q>(c2.algebra().right_mult(c2.basis(j)))));
    const std::vector<std::string> labels{"1.0", "g.0", "1.1", "g.1"};
    b.add("group-algebra-c2-double", EntryKind::module,
          ActionStructure<Q>::from_operators("group-algebra-c2-double", c2.algebra(), Side::right, ops, labels), "H + H, right regular");
    Mat<Q> rho = zeros<Q>(QQ, 8, 4);
    for (Index blk = 0; blk < 2; ++blk)
      for (Index i = 0; i < 2; ++i) rho((blk * 2 + i) * 2 + i, blk * 2 + i) = scalar<Q>(QQ, 1);
    b.add("group-algebra-c2-double-comodule", EntryKind::comodule,
          CoactionStructure<Q>("group-algebra-c2-double-comodule", c2.coalgebra(), Side::right, 4, rho, labels), "H + H, coproduct");
    b.add("group-algebra-c2-double-hopf-module", EntryKind::hopf_module,
          HopfModule<Q>("group-algebra-c2-double-hopf-module", c2, b.c.module("group-algebra-c2-double"),
                        b.c.comodule("group-algebra-c2-double-comodule")),
          "direct sum of two regular Hopf modules");
  }

  b.add("group-algebra-c2-trivial-dimodule", EntryKind::dimodule,
        Dimodule<Q>("group-algebra-c2-trivial-dimodule", c2, b.c.module("group-algebra-c2-left-trivial"),
                    b.c.comodule("group-algebra-c2-right-regular-comodule")),
        "trivial action, coproduct coaction");

  {
    const PairingForm<Q> bich{"c2-bicharacter-sigma", m({{1, 1}, {1, -1}})};
    b.add(bich.name, EntryKind::pairing, PairingEntry<Q>{c2, bich, true, true}, "sigma(g^i, g^j) = (-1)^(ij)");
    const PairingForm<Q> ee{"c2-counit-sigma", m({{1, 1}, {1, 1}})};
    b.add(ee.name, EntryKind::pairing, PairingEntry<Q>{c2, ee, true, true}, "sigma = eps (x) eps");
    const auto induced = check_long_pairing(c2, bich);
    b.add("c2-bicharacter-action", EntryKind::module, induced.dimodule->action.renamed("c2-bicharacter-action"),
          "x -> h = sigma(h_2, x) h_1");
    b.add("c2-bicharacter-dimodule", EntryKind::dimodule,
          Dimodule<Q>("c2-bicharacter-dimodule", c2, b.c.module("c2-bicharacter-action"), b.c.comodule("group-algebra-c2-right-regular-comodule")),
          "dimodule induced by the bicharacter");
  }
  {
    const Vec<Q> r = v({1, 1, 1, -1}) * scalar<Q>(QQ, 1, 2);
    const RMatrix<Q> rm{"c2-triangular-R", r, r};
    b.add(rm.name, EntryKind::rmatrix, RMatrixEntry<Q>{c2, rm}, "R = (1(x)1 + 1(x)g + g(x)1 - g(x)g)/2, its own inverse");
    const Vec<Q> one2 = tensor(c2.one(), c2.one());
    b.add("group-algebra-c2-trivial-R", EntryKind::rmatrix, RMatrixEntry<Q>{c2, RMatrix<Q>{"group-algebra-c2-trivial-R", one2, one2}},
          "R = 1 (x) 1");
    const auto induced = check_quasitriangular(c2, rm);
    b.add("c2-triangular-coaction", EntryKind::comodule, induced.dimodule->coaction.renamed("c2-triangular-coaction"),
          "rho(h) = h R_i (x) R_j");
    b.add("c2-triangular-dimodule", EntryKind::dimodule,
          Dimodule<Q>("c2-triangular-dimodule", c2, b.c.module("group-algebra-c2-left-regular"), b.c.comodule("c2-triangular-coaction")),
          "dimodule induced by the triangular structure");
  }

  for (const auto* w : {&pg, &wt, &c2}) b.regular_doi_hopf(*w);

  b.functional("c2-delta-e", c2, v({1, 0}), "point function at the identity");
  b.functional("c2-delta-g", c2, v({0, 1}), "point function at g");
  b.functional("c2-counit", c2, v({1, 1}), "counit");
  b.functional("c2-zero", c2, v({0, 0}), "zero functional");
  b.functional("c2-2delta-e", c2, v({2, 0}), "twice the point function at the identity");
  b.functional("c2-2delta-g", c2, v({0, 2}), "twice the point function at g");
  b.functional("c2-2counit", c2, v({2, 2}), "twice the counit");
  b.functional("c3-delta-e", c3, v({1, 0, 0}), "point function at the identity");
  b.functional("c3-counit", c3, v({1, 1, 1}), "counit");

  {
    const auto base = verified(mat2_projection_instance());
    b.add(base.name, EntryKind::rbp_instance, base, "P = T = E11 . on M_2 by left multiplication, weight -1");
    const Mat<Q> pr = mat2.right_mult(mat2.basis(0));
    b.add("mat2-right-proj-e11", EntryKind::rbp_instance,
          RbpInstance<Q>("mat2-right-proj-e11", b.c.module("mat2-rational-right-regular"), Side::right, pr, pr, scalar<Q>(QQ, -1)),
          "P = T = . E11 on M_2 by right multiplication, weight -1");
    const Doubled<Q> d = double_construction(base, "doubled-mat2");
    b.add(d.star.name(), EntryKind::algebra, d.star, "star product a*b = aP(b) + P(a)b - ab");
    b.add(d.tri.name(), EntryKind::module, d.tri, "triangle action");
    b.add(d.inst.name, EntryKind::rbp_instance, d.inst, "doubled instance over the star product");
    const Mat<Q> e = c2.algebra().left_mult(v({1, 1}) * scalar<Q>(QQ, 1, 2));
    b.add("c2-integral-rbp", EntryKind::rbp_instance,
          RbpInstance<Q>("c2-integral-rbp", b.c.module("group-algebra-c2-left-regular"), Side::left, zeros<Q>(QQ, 2, 2), e, scalar<Q>(QQ, -1)),
          "T = e. for the normalized integral e, P = 0, weight -1");
  }
  return std::move(b.c);
}

}  // namespace hopfrb
