#include "hopfrb/replay.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>

namespace hopfrb {
namespace {

using Q = Rational;
using Cat = Catalog<Q>;
using json = nlohmann::json;
using Rng = std::mt19937_64;

const FieldSpec& qq() {
  static const FieldSpec f = FieldSpec::rational();
  return f;
}

Q q(long n, long d = 1) { return scalar<Q>(qq(), n, d); }

// Tally delta for a yes/no check.
Q flag(bool ok) { return ok ? q(0) : q(1); }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Suite {
 public:
  Suite(const std::string& id, const Cat& c, const ReplayOptions& o) : cat(c), opt(o), id_(id), stream_(fnv1a(id) << 20) {}

  const Cat& cat;
  const ReplayOptions opt;

  Report& report(std::string instance) {
    reports_.emplace_back(id_, std::move(instance));
    reports_.back().construction = id_;
    return reports_.back();
  }

  // A construction that throws becomes a failed report instead of aborting the replay.
  template <class F>
  void run(const std::string& instance, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report(instance).assert_that("completed", false, e.what());
    }
  }

  Rng rng(long k) const { return detail::trial_rng(opt.seed, stream_ + static_cast<std::uint64_t>(k)); }

  std::vector<Report> take() {
    std::vector<Report> out(reports_.begin(), reports_.end());
    std::stable_sort(out.begin(), out.end(), [](const Report& a, const Report& b) { return a.instance < b.instance; });
    return out;
  }

 private:
  std::string id_;
  std::uint64_t stream_;
  std::deque<Report> reports_;
};

/// One axiom over opt.trials seeded trials; `trial(rng, k)` says whether trial k held.
template <class F>
AxiomResult& fuzz(Suite& s, const std::string& instance, const std::string& axiom, F&& trial) {
  Report& r = s.report(instance);
  r.trials = s.opt.trials;
  AxiomResult& a = r.add(axiom);
  Tally t(a);
  for (long k = 0; k < s.opt.trials; ++k) {
    Rng rng = s.rng(k);
    bool ok = false;
    try {
      ok = trial(rng, k);
    } catch (const std::exception& e) {
      if (a.note.empty()) a.note = "trial " + std::to_string(k) + ": " + e.what();
    }
    t.scalar({{"trial", static_cast<std::size_t>(k)}}, flag(ok));
  }
  return a;
}

long nonzero(Rng& rng) {
  for (;;)
    if (const long v = detail::small_entry(rng)) return v;
}

Vec<Q> random_vec(Index n, Rng& rng) { return Vec<Q>(random_operator<Q>(qq(), n, 1, rng).col(0)); }

// 0, 1 or a rank-one projection u v^T with v^T u = 1
Mat<Q> random_idempotent(Index n, Rng& rng) {
  const auto kind = rng() % 4;
  if (kind == 0) return zeros<Q>(qq(), n, n);
  if (kind == 1) return identity<Q>(qq(), n);
  Vec<Q> u = random_vec(n, rng);
  Index j = 0;
  while (j < n && u(j).is_zero()) ++j;
  if (j == n) {
    j = 0;
    u(0) = q(1);
  }
  Vec<Q> v = random_vec(n, rng);
  Q rest = q(0);
  for (Index i = 0; i < n; ++i)
    if (i != j) rest += v(i) * u(i);
  v(j) = (q(1) - rest) / u(j);
  return u * v.transpose();
}

// matrix-unit coordinates, row-major as in the matrix algebra's basis
Vec<Q> flatten(const Mat<Q>& m) {
  Vec<Q> out(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i * m.cols() + j) = m(i, j);
  return out;
}

Vec<Q> random_coords(Index n, long k, Rng& rng) {
  Vec<Q> v = random_vec(n, rng);
  if (k % 2 == 0)
    for (Index i = 0; i < n; ++i) v(i) = v(i).is_zero() ? q(0) : q((rng() >> 63) ? 1 : 0);
  return v;
}

const char* fuzz_module = "mat2-rational-left-regular";

/// T = -lambda R_r on the left regular M_2(Q); P random, or -lambda L_e so that P is Rota-Baxter.
RbpInstance<Q> fuzzed_instance(const Cat& c, Rng& rng, long k, bool rb_p) {
  const auto& m = c.module(fuzz_module);
  const auto& a = m.algebra();
  const Q lambda = q(nonzero(rng));
  const Mat<Q> t = -lambda * a.right_mult(flatten(random_idempotent(2, rng)));
  const Mat<Q> p = rb_p ? Mat<Q>(-lambda * a.left_mult(flatten(random_idempotent(2, rng)))) : random_operator<Q>(qq(), 4, 4, rng);
  return RbpInstance<Q>("fuzz-" + std::to_string(k), m, Side::left, p, t, lambda);
}

std::string verdict_note(const GenericVerdict<Q>& v) {
  std::string s = v.exact ? "generic" : "not generic";
  s += v.theorem ? ", criterion applies" : ", criterion not applicable";
  s += ", " + std::to_string(v.trials_passed) + "/" + std::to_string(v.trials) + " random P paired";
  return s;
}

std::vector<const CatalogEntry<Q>*> entries(const Cat& c, std::initializer_list<EntryKind> kinds) {
  std::vector<const CatalogEntry<Q>*> out;
  for (const auto* e : c.list())
    if (std::find(kinds.begin(), kinds.end(), e->kind) != kinds.end()) out.push_back(e);
  return out;
}

std::vector<const Bialgebra<Q>*> hosts(const Cat& c) {
  std::vector<const Bialgebra<Q>*> out;
  for (const auto* e : entries(c, {EntryKind::bialgebra, EntryKind::hopf, EntryKind::weak_bialgebra, EntryKind::weak_hopf}))
    out.push_back(&e->as<Bialgebra<Q>>());
  return out;
}

std::vector<const Bialgebra<Q>*> antipodal_hosts(const Cat& c) {
  std::vector<const Bialgebra<Q>*> out;
  for (const auto* e : entries(c, {EntryKind::hopf, EntryKind::weak_hopf})) out.push_back(&e->as<Bialgebra<Q>>());
  return out;
}

// ------------------------------------------------------------ suites

void paired_modules(Suite& s) {
  const Cat& c = s.cat;
  const Q m1 = q(-1);
  const std::string c2mod = "group-algebra-c2-left-regular";

  s.run(c2mod + "/T=e", [&] {
    const auto& h = c.bialgebra("group-algebra-c2");
    const auto e = normalized_integral(h);
    if (!e) throw std::logic_error("group-algebra-c2 has no normalized integral");
    const auto& m = c.module(c2mod);
    const auto v = classify_generic(m, m.op(*e), m1, s.opt.trials, s.opt.seed, c2mod + "/T=e");
    Report& r = s.report(c2mod + "/T=e");
    r.weight = "-1";
    r.trials = s.opt.trials;
    r.assert_that("A-linear", v.a_linear);
    r.assert_that("quasi-idempotent", v.quasi_idempotent);
    r.assert_that("generic", v.exact, verdict_note(v));
    r.assert_that("random-P", v.trials_passed == v.trials);
  });

  s.run(c2mod + "/T=2id", [&] {
    const auto& m = c.module(c2mod);
    const auto v = classify_generic(m, Mat<Q>(q(2) * m.id()), m1, s.opt.trials, s.opt.seed, c2mod + "/T=2id");
    Report& r = s.report(c2mod + "/T=2id");
    r.weight = "-1";
    r.trials = s.opt.trials;
    r.assert_that("A-linear", v.a_linear);
    r.assert_that("not quasi-idempotent", !v.quasi_idempotent);
    r.assert_that("not generic", !v.exact, verdict_note(v));
    if (s.opt.trials > 0)
      r.assert_that("falsifier-found", v.falsifier.has_value());
    else
      r.skip("falsifier-found", "no trials requested");
  });

  for (const auto* e : c.list(EntryKind::rbp_instance)) {
    s.run(e->name, [&] {
      const auto& inst = e->as<RbpInstance<Q>>();
      const auto v = classify_generic(inst.module, inst.T, inst.lambda, s.opt.trials, s.opt.seed, e->name);
      Report& r = s.report(e->name);
      r.weight = to_string(inst.lambda);
      r.trials = s.opt.trials;
      r.absorb(check_rbp_module(inst), "instance");
      r.assert_that("criterion-agrees", !v.theorem || *v.theorem == v.exact, verdict_note(v));
    });
  }

  long generic = 0;
  AxiomResult& a = fuzz(s, std::string("fuzzed/") + fuzz_module, "generic iff quasi-idempotent", [&](Rng& rng, long k) {
    const auto& m = c.module(fuzz_module);
    const Q lambda = q(nonzero(rng));
    const Mat<Q> r = k % 2 == 0 ? random_idempotent(2, rng) : random_operator<Q>(qq(), 2, 2, rng);
    const Mat<Q> t = -lambda * m.algebra().right_mult(flatten(r));
    const auto v = classify_generic(m, t, lambda, 2, s.opt.seed + static_cast<std::uint64_t>(k), "fuzz");
    if (v.exact) ++generic;
    return v.theorem.has_value() && v.exact == equal(Mat<Q>(r * r), r);
  });
  if (a.note.empty()) a.note = std::to_string(generic) + " generic";
}

void tilde_suite(Suite& s) {
  const Cat& c = s.cat;
  for (const auto* e : c.list(EntryKind::rbp_instance)) {
    s.run(e->name, [&] {
      const RbpInstance<Q> inst = verified(e->as<RbpInstance<Q>>());
      Report& r = s.report(e->name);
      r.weight = to_string(inst.lambda);
      if (inst.status != RbpStatus::pass) {
        r.skip("tilde", "not a paired module");
        return;
      }
      const RbpInstance<Q> t = tilde(inst);
      r.absorb(check_rbp_module(t), "tilde");
      const RbpInstance<Q> back = tilde(t);
      r.assert_that("involution", equal(back.P, inst.P) && equal(back.T, inst.T));
    });
  }
  fuzz(s, std::string("fuzzed/") + fuzz_module, "tilde is paired", [&](Rng& rng, long k) {
    const RbpInstance<Q> inst = fuzzed_instance(c, rng, k, false);
    const RbpInstance<Q> t = tilde(inst);
    const RbpInstance<Q> back = tilde(t);
    return check_rbp_module(inst).passed() && check_rbp_module(t).passed() && equal(back.P, inst.P) && equal(back.T, inst.T);
  });
}

bool all_factorizations(const RbpInstance<Q>& inst, AxiomResult* out) {
  std::optional<Tally> t;
  if (out) t.emplace(*out);
  bool ok = true;
  for (Index i = 0; i < inst.algebra().dim(); ++i)
    for (Index j = 0; j < inst.module.dim(); ++j) {
      const auto w = atkinson_witness(inst, inst.algebra().basis(i), inst.module.basis(j));
      const bool good = w.factorization && w.tilde_factorization;
      ok = ok && good;
      if (t) t->scalar({{"a", static_cast<std::size_t>(i)}, {"m", static_cast<std::size_t>(j)}}, flag(good));
    }
  return ok;
}

void factorization_suite(Suite& s) {
  const Cat& c = s.cat;
  for (const auto* e : c.list(EntryKind::rbp_instance)) {
    s.run(e->name, [&] {
      const RbpInstance<Q> inst = verified(e->as<RbpInstance<Q>>());
      Report& r = s.report(e->name);
      r.weight = to_string(inst.lambda);
      if (inst.status != RbpStatus::pass) {
        r.skip("factorizations", "not a paired module");
      } else if (inst.lambda.is_zero()) {
        r.skip("factorizations", "zero weight");
      } else {
        r.absorb(check_atkinson(inst), "solve");
        all_factorizations(inst, &r.add("factorizations"));
      }
    });
  }

  s.run("mat2-proj-e11/corrupted", [&] {
    RbpInstance<Q> bad = c.get("mat2-proj-e11").as<RbpInstance<Q>>();
    bad.name += "/corrupted";
    bad.T(0, 0) += q(1);
    Report& r = s.report(bad.name);
    r.weight = to_string(bad.lambda);
    const Report v = check_rbp_module(bad);
    r.assert_that("paired identity fails", !v.passed(), v.summary());
    bool refused = false;
    try {
      atkinson_witness(bad, bad.algebra().basis(0), bad.module.basis(0));
    } catch (const PreconditionError&) {
      refused = true;
    }
    r.assert_that("witness refused", refused);
  });

  fuzz(s, std::string("fuzzed/") + fuzz_module, "factorizations", [&](Rng& rng, long k) {
    const RbpInstance<Q> inst = fuzzed_instance(c, rng, k, false);
    return check_atkinson(inst).passed() && all_factorizations(inst, nullptr);
  });
}

void doubling_suite(Suite& s) {
  const Cat& c = s.cat;
  for (const auto* e : c.list(EntryKind::rbp_instance)) {
    s.run(e->name, [&] {
      const RbpInstance<Q> inst = verified(e->as<RbpInstance<Q>>());
      Report& r = s.report(e->name);
      r.weight = to_string(inst.lambda);
      if (inst.status != RbpStatus::pass) return r.skip("doubling", "not a paired module");
      if (inst.side != Side::left) return r.skip("doubling", "right instance");
      if (!check_rb_operator(inst.algebra(), inst.P, inst.lambda).passed()) return r.skip("doubling", "P is not a Rota-Baxter operator");
      const Doubled<Q> d = double_construction(inst);
      r.absorb(d.checks, "");
      const auto n = static_cast<std::size_t>(inst.algebra().dim());
      const auto dm = static_cast<std::size_t>(inst.module.dim());
      const AxiomResult* assoc = r.find("star/associativity");
      const AxiomResult* lin = r.find("T(a|>m) = P(a).T(m)");
      const AxiomResult* paired = r.find("paired/paired-identity");
      r.assert_that("tuple counts", assoc && lin && paired && assoc->tested == n * n * n && lin->tested == n * dm && paired->tested == n * dm);
    });
  }
  fuzz(s, std::string("fuzzed/") + fuzz_module, "doubling", [&](Rng& rng, long k) {
    const RbpInstance<Q> inst = fuzzed_instance(c, rng, k, true);
    return double_construction(inst).checks.passed();
  });
}

void integral_suite(Suite& s) {
  const Cat& c = s.cat;
  for (const auto* hp : antipodal_hosts(c)) {
    const Bialgebra<Q>& h = *hp;
    if (!check_hopf(h).passed()) continue;
    s.run(h.name(), [&] {
      Report& r = s.report(h.name());
      r.weight = "-1";
      r.trials = s.opt.trials;
      const auto e = normalized_integral(h);
      if (!e) {
        const IntegralSpace<Q> sp = find_integrals(h, Side::left);
        r.assert_that("integral space nonzero", sp.basis.cols() > 0);
        bool annihilated = true;
        for (Index k = 0; k < sp.basis.cols(); ++k) annihilated = annihilated && h.eps(Vec<Q>(sp.basis.col(k))).is_zero();
        r.assert_that("no normalized integral", annihilated, "every integral has counit zero");
        bool refused = false;
        try {
          integral_T(h, regular_module(h.algebra(), Side::left), Vec<Q>(sp.basis.col(0)));
        } catch (const PreconditionError&) {
          refused = true;
        }
        r.assert_that("construction refused", refused);
        return;
      }
      r.absorb(check_normalized_integral(h, *e), "integral");
      for (const auto* me : c.list(EntryKind::module)) {
        const auto& m = me->as<ActionStructure<Q>>();
        if (m.side() != Side::left || m.algebra().name() != h.name()) continue;
        r.absorb(integral_T(h, m, *e, s.opt.trials, s.opt.seed).checks, m.name());
      }
      r.absorb(integral_T(h, adjoint_action(h), *e, s.opt.trials, s.opt.seed).checks, "adjoint");
    });
  }
  const std::string smash = "kx-mod-x2-with-c2-action";
  s.run(smash + "/smash", [&] {
    const auto& h = c.bialgebra("group-algebra-c2");
    const auto e = normalized_integral(h);
    if (!e) throw std::logic_error("group-algebra-c2 has no normalized integral");
    const auto st = smash_integral_T(c.algebra("kx-mod-x2"), h, c.module(smash), *e, s.opt.trials, s.opt.seed);
    Report& r = s.report(smash + "/smash");
    r.trials = s.opt.trials;
    r.absorb(st.checks, "");
  });
}

std::string coords_name(const Vec<Q>& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v(i));
  return s + ")";
}

void dual_action_suite(Suite& s) {
  const Cat& c = s.cat;
  const auto& c2 = c.bialgebra("group-algebra-c2");
  for (long scale : {1L, 2L})
    for (long bits = 0; bits < 4; ++bits) {
      const Vec<Q> v = make_vec<Q>(qq(), {scale * (bits & 1), scale * (bits >> 1)});
      const std::string name = "group-algebra-c2/f=" + coords_name(v);
      s.run(name, [&] {
        const auto ft = dual_action_T(c2, Functional<Q>{c2.coalgebra().name(), v}, s.opt.trials, s.opt.seed);
        Report& r = s.report(name);
        r.trials = s.opt.trials;
        r.absorb(ft.checks, "");
        const bool expect = scale == 1 || bits == 0;
        r.assert_that("idempotent iff 0/1 valued", ft.f_idempotent == expect, ft.f_idempotent ? "idempotent" : "not idempotent");
      });
    }
  for (const auto* e : c.list(EntryKind::functional)) {
    s.run(e->name, [&] {
      const auto& fe = e->as<FunctionalEntry<Q>>();
      const auto ft = dual_action_T(fe.host, fe.f, s.opt.trials, s.opt.seed);
      Report& r = s.report(e->name);
      r.trials = s.opt.trials;
      r.absorb(ft.checks, "");
    });
  }
  const auto hs = hosts(c);
  long generic = 0;
  AxiomResult& a = fuzz(s, "fuzzed/functionals", "generic iff convolution-idempotent", [&](Rng& rng, long k) {
    const Bialgebra<Q>& h = *hs[static_cast<std::size_t>(k) % hs.size()];
    const auto ft = dual_action_T(h, Functional<Q>{h.coalgebra().name(), random_coords(h.dim(), k, rng)}, 2,
                                  s.opt.seed + static_cast<std::uint64_t>(k));
    if (ft.generic.generic()) ++generic;
    return ft.checks.passed();
  });
  if (a.note.empty()) a.note = std::to_string(generic) + " generic";
}

void weak_target_suite(Suite& s) {
  for (const auto* hp : hosts(s.cat)) {
    const Bialgebra<Q>& h = *hp;
    s.run(h.name(), [&] {
      const auto wt = weak_target_rbp(h, s.opt.trials, s.opt.seed);
      Report& r = s.report(h.name());
      r.weight = "-1";
      r.trials = s.opt.trials;
      r.absorb(wt.checks, "");
      r.absorb(target_source(h).checks, "target-source");
    });
  }
}

void adjoint_suite(Suite& s) {
  for (const auto* hp : antipodal_hosts(s.cat)) {
    const Bialgebra<Q>& h = *hp;
    s.run(h.name(), [&] {
      const Report qc = check_quantum_commutative(h);
      if (qc.passed()) {
        const auto ad = adjoint_rbp(h);
        Report& r = s.report(h.name());
        r.weight = "-1";
        r.absorb(ad.checks, "");
        r.skip("(H,Pi^L) Rota-Baxter", "recorded: " + std::string(verdict_name(ad.rb_on_h.result())));
        return;
      }
      bool refused = false;
      bool witness = false;
      try {
        adjoint_rbp(h);
      } catch (const PreconditionError& err) {
        refused = true;
        const AxiomResult* f = err.report.first_failure();
        witness = f && f->witness;
      }
      Report& r = s.report(h.name());
      r.assert_that("not quantum commutative: refused with witness", refused && witness, qc.summary());
    });
  }
}

// first basis pair where E fails to commute with the dual action
std::string dual_side_witness(const HopfModule<Q>& hm, const Mat<Q>& e) {
  const ActionStructure<Q> d = dual_module(hm.coaction);
  for (Index f = 0; f < d.algebra().dim(); ++f)
    for (Index m = 0; m < d.dim(); ++m)
      if (!equal(Vec<Q>(e * d.op(f).col(m)), Vec<Q>(d.op(f) * e.col(m))))
        return "E(f->m) != f->E(m) at f=dual(" + hm.host.labels()[static_cast<std::size_t>(f)] + "), m=" +
               hm.action.labels()[static_cast<std::size_t>(m)];
  return "E commutes with the dual action but is not generic";
}

void hopf_module_suite(Suite& s) {
  for (const auto* e : s.cat.list(EntryKind::hopf_module)) {
    s.run(e->name, [&] {
      const auto& hm = e->as<HopfModule<Q>>();
      const auto hp = hopf_module_projection(hm, s.opt.trials, s.opt.seed);
      Report& r = s.report(e->name);
      r.weight = "-1";
      r.trials = s.opt.trials;
      r.absorb(hp.checks, "");
      const Bialgebra<Q>& h = hm.host;
      if (equal(hm.action.action(), regular_module(h.algebra(), Side::right).action()) && equal(hm.coaction.coaction(), h.coalgebra().comult()))
        r.assert_that("E = eps(.)1", equal(hp.E, Mat<Q>(h.one() * h.coalgebra().counit().transpose())));
      if (hp.dual_side.generic())
        r.assert_that("dual-side generic", true);
      else
        r.skip("dual-side generic", "refuted: " + dual_side_witness(hm, hp.E));
    });
  }
}

std::vector<std::pair<std::string, Functional<Q>>> functionals_on(const Cat& c, const Bialgebra<Q>& h) {
  std::vector<std::pair<std::string, Functional<Q>>> out;
  for (const auto* e : c.list(EntryKind::functional)) {
    const auto& fe = e->as<FunctionalEntry<Q>>();
    if (fe.host.name() == h.name()) out.emplace_back(e->name, fe.f);
  }
  return out;
}

void dimodule_suite(Suite& s) {
  const Cat& c = s.cat;
  std::vector<const Dimodule<Q>*> dims;
  for (const auto* e : c.list(EntryKind::dimodule)) dims.push_back(&e->as<Dimodule<Q>>());
  for (const auto* dp : dims) {
    const Dimodule<Q>& d = *dp;
    for (const auto& [fname, f] : functionals_on(c, d.host)) {
      const std::string name = d.name + "/" + fname;
      s.run(name, [&] {
        const auto ft = dimodule_T(d, f, s.opt.trials, s.opt.seed);
        Report& r = s.report(name);
        r.trials = s.opt.trials;
        r.absorb(ft.checks, "");
      });
    }
    s.run(d.name + "/cointegral", [&] {
      const auto cs = find_cointegrals(d.host);
      Report& r = s.report(d.name + "/cointegral");
      if (!cs.chi) return r.skip("cointegral generic", "host is not cosemisimple");
      const auto ft = dimodule_T(d, *cs.chi, s.opt.trials, s.opt.seed);
      r.trials = s.opt.trials;
      r.absorb(ft.checks, "");
      r.assert_that("cointegral generic", ft.generic.generic(), coords_name(cs.chi->coords));
    });
  }
  if (dims.empty()) return;
  fuzz(s, "fuzzed/dimodules", "generic iff convolution-idempotent", [&](Rng& rng, long k) {
    const Dimodule<Q>& d = *dims[static_cast<std::size_t>(k) % dims.size()];
    const Vec<Q> v = random_coords(d.host.dim(), k, rng);
    return dimodule_T(d, Functional<Q>{d.host.coalgebra().name(), v}, 2, s.opt.seed + static_cast<std::uint64_t>(k)).checks.passed();
  });
}

void induced_generic(Suite& s, Report& r, const InducedDimodule<Q>& id) {
  if (!id.dimodule) return;
  const auto cs = find_cointegrals(id.dimodule->host);
  if (!cs.chi) return r.skip("cointegral generic", "host is not cosemisimple");
  const auto ft = dimodule_T(*id.dimodule, *cs.chi, s.opt.trials, s.opt.seed);
  r.assert_that("cointegral generic", ft.generic.generic(), "chi=" + coords_name(cs.chi->coords));
}

void pairing_suite(Suite& s) {
  const Cat& c = s.cat;
  for (const auto* e : c.list(EntryKind::pairing)) {
    s.run(e->name, [&] {
      const auto& pe = e->as<PairingEntry<Q>>();
      Report& r = s.report(e->name);
      if (pe.long_axioms) {
        const auto id = check_long_pairing(pe.host, pe.form);
        r.absorb(id.report, "long");
        induced_generic(s, r, id);
      }
      if (pe.braided_axioms) {
        const auto id = check_braided(pe.host, pe.form);
        r.absorb(id.report, "braided");
        induced_generic(s, r, id);
      }
    });
  }
  for (const auto* e : c.list(EntryKind::rmatrix)) {
    s.run(e->name, [&] {
      const auto& re = e->as<RMatrixEntry<Q>>();
      const auto id = check_quasitriangular(re.host, re.r);
      Report& r = s.report(e->name);
      r.absorb(id.report, "");
      induced_generic(s, r, id);
    });
  }

  s.run("c2-bicharacter-sigma/sigma(g,g)=2", [&] {
    const auto& pe = c.get("c2-bicharacter-sigma").as<PairingEntry<Q>>();
    PairingForm<Q> bad = pe.form;
    bad.name += "/sigma(g,g)=2";
    bad.sigma(1, 1) = q(2);
    const auto id = check_long_pairing(pe.host, bad);
    const AxiomResult* f = id.report.first_failure();
    Report& r = s.report(bad.name);
    r.assert_that("rejected with witness", f && f->witness && !id.dimodule, f ? "first failure: " + f->axiom : "");
  });

  s.run("group-algebra-c2/R=1(x)g", [&] {
    const auto& h = c.bialgebra("group-algebra-c2");
    const RMatrix<Q> bad{"R=1(x)g", tensor(h.one(), h.basis(1)), tensor(h.one(), h.one())};
    bool refused = false;
    try {
      check_quasitriangular(h, bad);
    } catch (const PreconditionError&) {
      refused = true;
    }
    s.report("group-algebra-c2/R=1(x)g").assert_that("inverse mismatch refused", refused);
  });
}

// phi = id when the comodule algebra is the host itself
std::optional<Mat<Q>> identity_map(const WeakComoduleAlgebra<Q>& a) {
  const Bialgebra<Q>& h = a.host;
  if (a.algebra.dim() != h.dim()) return std::nullopt;
  if (!check_comodule_algebra_map(a, h.id()).passed()) return std::nullopt;
  return h.id();
}

void doi_hopf_suite(Suite& s) {
  for (const auto* e : s.cat.list(EntryKind::doi_hopf)) {
    s.run(e->name, [&] {
      const auto& m = e->as<DoiHopfModule<Q>>();
      Report& r = s.report(e->name);
      r.weight = "-1";
      const auto phi = identity_map(m.base);
      if (!phi) return r.skip("projection", "no identity comodule algebra map");
      const auto dp = doi_hopf_projection(m, *phi);
      r.absorb(dp.checks, "");
      const AxiomResult* id = r.find("E_M(m.a)");
      r.assert_that("E_M(m.a) tuple count", id && id->tested == static_cast<std::size_t>(m.base.algebra.dim() * m.dim()));
    });
  }
}

void target_projection_suite(Suite& s) {
  for (const auto* e : s.cat.list(EntryKind::doi_hopf)) {
    s.run(e->name, [&] {
      const auto& m = e->as<DoiHopfModule<Q>>();
      const Bialgebra<Q>& h = m.base.host;
      Report& r = s.report(e->name);
      r.weight = "-1";
      const auto phi = identity_map(m.base);
      if (!phi || !equal(m.base.algebra.mult(), h.algebra().mult())) return r.skip("E_H = Pi^L", "comodule algebra is not the host");
      const auto dp = doi_hopf_projection(m, *phi);
      r.assert_that("E_H = Pi^L", equal(dp.E_A, target_map(h)));
      r.assert_that("E_M = E_A", equal(dp.E_M, dp.E_A));
      r.absorb(check_rb_operator(h.algebra(), dp.E_A, q(-1)), "(H,E_H)");
    });
  }
}

struct SuiteDef {
  const char* statement;
  void (*body)(Suite&);
};

const std::map<std::string, SuiteDef>& suites() {
  static const std::map<std::string, SuiteDef> m{
      {"cor-int", {"a normalized integral e gives the generic operator T(m) = e.m on every module", integral_suite}},
      {"ex-4.7", {"long pairings, braidings and R-matrices induce dimodules", pairing_suite}},
      {"prop-3.1", {"(P, T) paired with weight l gives (-l id - P, -l id - T) paired", tilde_suite}},
      {"prop-3.6", {"a Rota-Baxter P doubles a paired module into one over (A, *)", doubling_suite}},
      {"prop-4.1", {"T_f on H over H^* is generic iff f is convolution-idempotent", dual_action_suite}},
      {"prop-4.3", {"Pi^L makes H a generic paired module over H^L", weak_target_suite}},
      {"prop-4.4", {"quantum commutative H is paired over its adjoint action with P = T = Pi^L", adjoint_suite}},
      {"prop-4.5", {"E(m) = m_(0) S(m_(1)) on a Hopf module is a projection onto the coinvariants", hopf_module_suite}},
      {"prop-4.6", {"T_f on a dimodule is generic iff f is convolution-idempotent", dimodule_suite}},
      {"rmk-4.10", {"for A = M = H the Doi-Hopf projection is Pi^L and (H, Pi^L) is Rota-Baxter", target_projection_suite}},
      {"thm-3.2", {"A-linear T is paired with every P iff T^2 = -l T", paired_modules}},
      {"thm-3.5", {"paired modules factor P(a)T(m) = T(n) and P~(a)T~(m) = -T~(n)", factorization_suite}},
      {"thm-4.8", {"weak Doi-Hopf modules carry the paired projections (E_A, E_M)", doi_hopf_suite}},
  };
  return m;
}

}  // namespace

Verdict TheoremReplay::result() const {
  for (const auto& r : reports)
    if (r.result() == Verdict::fail) return Verdict::fail;
  return Verdict::pass;
}

std::size_t TheoremReplay::passed() const {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); }));
}

const std::vector<std::string>& replay_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, def] : suites()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_replay_id(std::string_view id) { return suites().count(std::string(id)) != 0; }

TheoremReplay replay(const std::string& id, const Catalog<Rational>& c, const ReplayOptions& opt) {
  const auto it = suites().find(id);
  if (it == suites().end()) throw Error("unknown theorem id: " + id);
  Suite s(id, c, opt);
  it->second.body(s);
  return {id, it->second.statement, s.take()};
}

std::vector<TheoremReplay> replay_all(const Catalog<Rational>& c, const ReplayOptions& opt) {
  std::vector<TheoremReplay> out;
  for (const auto& id : replay_ids()) out.push_back(replay(id, c, opt));
  return out;
}

json to_json(const TheoremReplay& t) {
  json reports = json::array();
  for (const auto& r : t.reports) reports.push_back(to_json(r));
  return {{"id", t.id},
          {"statement", t.statement},
          {"result", std::string(verdict_name(t.result()))},
          {"passed", t.passed()},
          {"total", t.reports.size()},
          {"reports", std::move(reports)}};
}

json replay_document(const std::vector<TheoremReplay>& ts, const ReplayOptions& opt) {
  json theorems = json::array();
  bool ok = true;
  for (const auto& t : ts) {
    theorems.push_back(to_json(t));
    ok = ok && t.result() != Verdict::fail;
  }
  return {{"version", std::string(version)},
          {"seed", opt.seed},
          {"trials", opt.trials},
          {"theorems", std::move(theorems)},
          {"result", ok ? "pass" : "fail"}};
}

}  // namespace hopfrb
