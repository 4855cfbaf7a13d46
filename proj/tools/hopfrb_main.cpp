// hopfrb: list the catalog, run checks and constructions, replay theorems.
//
// Exit codes: 0 pass, 1 checked failure, 2 usage or validation error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hopfrb/replay.hpp"

namespace {

using namespace hopfrb;
using json = nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

struct CheckArgs {
  std::string name;
  std::string algebra, host, module, entry, instance, op, t_op, functional;
  std::optional<std::string> weight;
  long trials = 0;
  std::uint64_t seed = default_seed;
};

const char* const check_names =
    "algebra coalgebra bialgebra weak-bialgebra hopf weak-hopf quantum-commutative target-source action coaction dimodule "
    "hopf-module comodule-algebra doi-hopf module-algebra rb-operator rbp-module generic atkinson idempotent-identities "
    "image-closure doubling integral integral-T dual-action-T dimodule-T weak-target adjoint hopf-module-projection "
    "long-pairing braided quasitriangular doi-hopf-projection";

const std::string& need(const std::string& v, const char* flag, const std::string& check) {
  if (v.empty()) throw UsageError(check + " needs " + flag);
  return v;
}

/// proj:<label>, leftmul:<label>, matrix:@file.json, zero, id, scalar:<c>.
/// Labels name basis elements of `a`; with a module they act through it.
template <class S>
Mat<S> parse_operator(const std::string& lit, const FinAlgebra<S>& a, const ActionStructure<S>* m) {
  const FieldSpec& f = a.field();
  const Index d = m ? m->dim() : a.dim();
  if (lit == "zero") return zeros<S>(f, d, d);
  if (lit == "id") return identity<S>(f, d);
  const auto colon = lit.find(':');
  if (colon == std::string::npos) throw UsageError("unknown operator literal " + lit);
  const std::string head = lit.substr(0, colon), arg = lit.substr(colon + 1);
  if (head == "scalar") return parse_scalar<S>(f, arg) * identity<S>(f, d);
  if (head == "proj" || head == "leftmul") {
    const Index i = a.find_label(arg);
    if (i < 0) throw UsageError(a.name() + " has no basis element " + arg);
    if (head == "proj" && !equal(a.mul(a.basis(i), a.basis(i)), a.basis(i))) throw UsageError(arg + " is not idempotent");
    return m ? m->op(i) : a.left_mult(a.basis(i));
  }
  if (head == "matrix") {
    if (arg.empty() || arg[0] != '@') throw UsageError("matrix literals take @file.json");
    json j = io::read_file(arg.substr(1));
    if (j.is_object()) j = io::member(j, "matrix");
    return io::dense_from_json<S>(f, j, d, d);
  }
  throw UsageError("unknown operator literal " + lit);
}

template <class S>
S weight_of(const CheckArgs& a, const FieldSpec& f) {
  return parse_scalar<S>(f, a.weight.value_or("-1"));
}

template <class S>
RbpInstance<S> instance_of(const CheckArgs& a, const Catalog<S>& c) {
  RbpInstance<S> inst = c.get(need(a.instance, "--instance", a.name)).template as<RbpInstance<S>>();
  if (a.weight) inst.lambda = weight_of<S>(a, c.field());
  return inst;
}

template <class S>
Functional<S> functional_of(const CheckArgs& a, const Catalog<S>& c) {
  return c.get(need(a.functional, "--functional", a.name)).template as<FunctionalEntry<S>>().f;
}

template <class S>
Vec<S> integral_of(const Bialgebra<S>& h) {
  const auto e = normalized_integral(h);
  if (!e) throw PreconditionError(h.name() + " has no normalized integral", check_normalized_integral(h, Vec<S>(find_integrals(h).basis.col(0))));
  return *e;
}

template <class S>
Report run_check(const CheckArgs& a, const Catalog<S>& c) {
  const std::string& n = a.name;
  const auto host = [&]() -> const Bialgebra<S>& { return c.bialgebra(need(a.host.empty() ? a.algebra : a.host, "--host", n)); };
  const auto entry = [&]() -> const CatalogEntry<S>& { return c.get(need(a.entry, "--entry", n)); };
  const auto module = [&]() -> const ActionStructure<S>& { return c.module(need(a.module, "--module", n)); };

  if (n == "algebra") return check_algebra(c.algebra(need(a.algebra, "--algebra", n)));
  if (n == "coalgebra") return check_coalgebra(host().coalgebra());
  if (n == "bialgebra") return check_bialgebra(host());
  if (n == "weak-bialgebra") return check_weak_bialgebra(host());
  if (n == "hopf") return check_hopf(host());
  if (n == "weak-hopf") return check_weak_hopf(host());
  if (n == "quantum-commutative") return check_quantum_commutative(host());
  if (n == "target-source") return target_source(host()).checks;
  if (n == "action") return check_action(module());
  if (n == "coaction") return check_coaction(entry().template as<CoactionStructure<S>>());
  if (n == "dimodule") return check_dimodule(entry().template as<Dimodule<S>>());
  if (n == "hopf-module") return check_hopf_module(entry().template as<HopfModule<S>>());
  if (n == "comodule-algebra") return check_weak_comodule_algebra(entry().template as<WeakComoduleAlgebra<S>>());
  if (n == "doi-hopf") return check_doi_hopf(entry().template as<DoiHopfModule<S>>());
  if (n == "module-algebra") return check_module_algebra(c.bialgebra(need(a.host, "--host", n)), c.algebra(need(a.algebra, "--algebra", n)), module());
  if (n == "rb-operator") {
    const FinAlgebra<S> alg = c.algebra(need(a.algebra, "--algebra", n));
    return check_rb_operator(alg, parse_operator(need(a.op, "--op", n), alg, static_cast<const ActionStructure<S>*>(nullptr)),
                             weight_of<S>(a, c.field()), alg.name() + " " + a.op);
  }
  if (n == "rbp-module") {
    if (!a.instance.empty()) return check_rbp_module(instance_of(a, c));
    const auto& m = module();
    const Mat<S> p = parse_operator(need(a.op, "--op", n), m.algebra(), static_cast<const ActionStructure<S>*>(nullptr));
    const Mat<S> t = parse_operator(need(a.t_op, "--t-op", n), m.algebra(), &m);
    return check_rbp_module(RbpInstance<S>(m.name() + " P=" + a.op + " T=" + a.t_op, m, m.side(), p, t, weight_of<S>(a, c.field())));
  }
  if (n == "generic") {
    const auto& m = module();
    const std::string& lit = need(a.op, "--op", n);
    return classify_generic(m, parse_operator(lit, m.algebra(), &m), weight_of<S>(a, c.field()), a.trials, a.seed, m.name() + " T=" + lit).report;
  }
  if (n == "atkinson") return check_atkinson(instance_of(a, c));
  if (n == "idempotent-identities") return idempotent_identities(instance_of(a, c));
  if (n == "image-closure") return check_image_closure(instance_of(a, c));
  if (n == "doubling") return double_construction(instance_of(a, c)).checks;
  if (n == "integral") return check_normalized_integral(host(), integral_of(host()));
  if (n == "integral-T") {
    const auto& h = host();
    const ActionStructure<S> m = a.module.empty() ? regular_module(h.algebra(), Side::left) : module();
    return integral_T(h, m, integral_of(h), a.trials, a.seed).checks;
  }
  if (n == "dual-action-T") return dual_action_T(host(), functional_of(a, c), a.trials, a.seed).checks;
  if (n == "dimodule-T") return dimodule_T(entry().template as<Dimodule<S>>(), functional_of(a, c), a.trials, a.seed).checks;
  if (n == "weak-target") return weak_target_rbp(host(), a.trials, a.seed).checks;
  if (n == "adjoint") return adjoint_rbp(host()).checks;
  if (n == "hopf-module-projection") return hopf_module_projection(entry().template as<HopfModule<S>>(), a.trials, a.seed).checks;
  if (n == "long-pairing" || n == "braided") {
    const auto& p = entry().template as<PairingEntry<S>>();
    return n == "braided" ? check_braided(p.host, p.form).report : check_long_pairing(p.host, p.form).report;
  }
  if (n == "quasitriangular") {
    const auto& r = entry().template as<RMatrixEntry<S>>();
    return check_quasitriangular(r.host, r.r).report;
  }
  if (n == "doi-hopf-projection") {
    const auto& m = entry().template as<DoiHopfModule<S>>();
    return doi_hopf_projection(m, m.base.host.id()).checks;
  }
  throw UsageError("unknown check " + n + "; known checks: " + check_names);
}

struct Output {
  std::string report_path;
  bool json_stdout = false;
};

void emit(const json& j, const Output& out) {
  if (!out.report_path.empty()) {
    std::ofstream f(out.report_path);
    if (!f) throw UsageError("cannot write " + out.report_path);
    f << j.dump(2) << '\n';
  }
  if (out.json_stdout) std::cout << j.dump(2) << '\n';
}

void print_report(const Report& r) {
  std::cout << r.summary() << '\n';
  if (const AxiomResult* f = r.first_failure(); f && f->witness) {
    std::cout << "  witness (" << f->axiom << "):";
    for (const auto& [k, v] : f->witness->indices) std::cout << ' ' << k << '=' << v;
    std::cout << "  delta [";
    for (std::size_t i = 0; i < f->witness->delta.size(); ++i) std::cout << (i ? " " : "") << f->witness->delta[i];
    std::cout << "]\n";
  }
}

json stamped(const Report& r, std::uint64_t seed) {
  json j = to_json(r);
  j["version"] = std::string(version);
  j["seed"] = seed;
  return j;
}

int finish_check(const Report& r, const CheckArgs& a, const Output& out) {
  print_report(r);
  emit(stamped(r, a.seed), out);
  return r.passed() ? 0 : 1;
}

template <class S>
int check_with(const CheckArgs& a, const Catalog<S>& c, const Output& out) {
  try {
    return finish_check(run_check(a, c), a, out);
  } catch (const PreconditionError& e) {
    std::cout << "precondition failed: " << e.what() << '\n';
    if (!e.report.axioms.empty()) return finish_check(e.report, a, out);
    return 1;
  }
}

template <class S>
void list_entries(const Catalog<S>& c, const std::optional<std::string>& kind) {
  const std::optional<EntryKind> k = kind ? std::optional(parse_kind(*kind)) : std::nullopt;
  for (const auto* e : c.list(k)) std::cout << e->name << "  " << kind_name(e->kind) << '\n';
}

template <class F>
int with_catalog(const std::string& load, F&& body) {
  if (load.empty()) return body(standard_catalog());
  const json doc = io::read_file(load);
  const FieldSpec f = declared_field(doc);
  if (f.is_rational()) {
    Catalog<Rational> c = standard_catalog();
    load_json(doc, c, load);
    return body(c);
  }
  Catalog<ModP> c(f);
  load_json(doc, c, load);
  return body(c);
}

std::uint64_t env_seed() {
  const char* s = std::getenv("HOPFRB_SEED");
  if (!s || !*s) return default_seed;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("HOPFRB_SEED is not an unsigned integer: ") + s);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Rota-Baxter paired modules over finite-dimensional (weak) Hopf algebras", "hopfrb"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);

  std::uint64_t seed = env_seed();
  long trials = 100;
  Output out;
  std::string load;

  auto* list = app.add_subcommand("list", "list catalog entries with their kinds");
  std::optional<std::string> kind;
  list->add_option("--kind", kind, "only entries of this kind");
  list->add_option("--load", load, "add entries from a JSON file");

  auto* dump = app.add_subcommand("dump", "print an entry as JSON");
  std::string dump_name;
  dump->add_option("name", dump_name)->required();
  dump->add_option("--load", load, "add entries from a JSON file");

  auto* check = app.add_subcommand("check", "run one checker or construction");
  CheckArgs ca;
  check->add_option("check", ca.name, std::string("one of: ") + check_names)->required();
  check->add_option("--algebra", ca.algebra);
  check->add_option("--host", ca.host, "bialgebra entry");
  check->add_option("--module", ca.module, "module entry");
  check->add_option("--entry", ca.entry, "composite entry (comodule, dimodule, pairing, ...)");
  check->add_option("--instance", ca.instance, "rbp-instance entry");
  check->add_option("--op", ca.op, "operator literal: proj:<label> leftmul:<label> matrix:@file.json zero id scalar:<c>");
  check->add_option("--t-op", ca.t_op, "operator literal for T on the module");
  check->add_option("--functional", ca.functional, "functional entry");
  check->add_option("--weight", ca.weight, "weight (default -1)");
  check->add_option("--trials", ca.trials, "random trials for constructions")->check(CLI::NonNegativeNumber);
  check->add_option("--seed", seed);
  check->add_option("--report", out.report_path, "write the report JSON here");
  check->add_flag("--json", out.json_stdout, "print the report JSON");
  check->add_option("--load", load, "add entries from a JSON file");

  auto* rep = app.add_subcommand("replay", "replay a theorem suite, or all of them");
  std::string id;
  rep->add_option("id", id, "theorem id or all")->required();
  rep->add_option("--seed", seed);
  rep->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  rep->add_option("--report", out.report_path, "write the report JSON here");
  rep->add_flag("--json", out.json_stdout, "print the report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (*list) return with_catalog(load, [&](const auto& c) {
      list_entries(c, kind);
      return 0;
    });
  if (*dump) return with_catalog(load, [&](const auto& c) {
      std::cout << to_json(c.get(dump_name)).dump(2) << '\n';
      return 0;
    });
  if (*check) {
    ca.seed = seed;
    return with_catalog(load, [&](const auto& c) { return check_with(ca, c, out); });
  }

  if (id != "all" && !is_replay_id(id)) {
    std::cerr << "unknown theorem id: " << id << '\n';
    return 2;
  }
  const ReplayOptions opt{seed, trials};
  const Catalog<Rational> c = standard_catalog();
  std::vector<TheoremReplay> ts;
  if (id == "all")
    ts = replay_all(c, opt);
  else
    ts.push_back(replay(id, c, opt));
  const json doc = replay_document(ts, opt);
  std::cout << "hopfrb " << version << " seed " << seed << " trials " << trials << '\n';
  for (const auto& t : ts) {
    std::cout << t.id << "  " << verdict_name(t.result()) << "  " << t.passed() << "/" << t.reports.size() << '\n';
    for (const auto& r : t.reports)
      if (!r.passed()) std::cout << "  " << r.summary() << '\n';
  }
  std::cout << "result: " << doc["result"].get<std::string>() << '\n';
  emit(doc, out);
  return doc["result"] == "pass" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
