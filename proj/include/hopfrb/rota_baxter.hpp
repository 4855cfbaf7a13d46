// Rota-Baxter operators, paired modules and the general constructions on them.
//
// A paired instance is (A, M, P, T, lambda). With op(a) the matrix of the
// action of a on M, the paired identity reads
//   left:  P(a).T(m) = T(P(a).m) + T(a.T(m)) + lambda T(a.m)
//   right: T(m).P(a) = T(T(m).a) + T(m.P(a)) + lambda T(m.a)
#ifndef HOPFRB_ROTA_BAXTER_HPP
#define HOPFRB_ROTA_BAXTER_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfrb/actions.hpp"

namespace hopfrb {

inline constexpr std::uint64_t default_seed = 7;

enum class RbpStatus { unchecked, pass, fail };

template <class S>
struct RbpInstance {
  std::string name;
  ActionStructure<S> module;
  Side side = Side::left;
  Mat<S> P;
  Mat<S> T;
  S lambda{};
  RbpStatus status = RbpStatus::unchecked;
  std::optional<Witness> witness;

  RbpInstance() = default;
  RbpInstance(std::string name_, ActionStructure<S> module_, Side side_, Mat<S> p, Mat<S> t, S weight)
      : name(std::move(name_)), module(std::move(module_)), side(side_), P(std::move(p)), T(std::move(t)), lambda(std::move(weight)) {
    if (side != module.side())
      throw Error("instance " + name + ": identity orientation is " + side_name(side) + " but the module is a " +
                  side_name(module.side()) + " module");
    const Index n = module.algebra().dim();
    if (P.rows() != n || P.cols() != n) throw DimensionError("instance " + name + ": P must be a square operator on A");
    if (T.rows() != module.dim() || T.cols() != module.dim())
      throw DimensionError("instance " + name + ": T must be a square operator on M");
    const auto tag = field().tag();
    bind(P, tag);
    bind(T, tag);
    field_tag(P, tag);
    field_tag(T, tag);
    lambda = ScalarTraits<S>::rebind(lambda, tag);
    if (ScalarTraits<S>::tag(lambda) != tag) throw FieldError("instance " + name + ": weight lies in another field");
  }

  const FinAlgebra<S>& algebra() const { return module.algebra(); }
  const FieldSpec& field() const { return module.field(); }
};

/// P(x)P(y) = P(P(x)y) + P(xP(y)) + lambda P(xy) on all basis pairs.
template <class S>
Report check_rb_operator(const FinAlgebra<S>& a, const Mat<S>& p, const S& lambda, std::string instance = {}) {
  const Index n = a.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionError("operator does not match the algebra dimension");
  Report r("rb-operator", instance.empty() ? a.name() : std::move(instance));
  r.weight = to_string(lambda);
  Tally t(r.add("rota-baxter"));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vec<S> x = p.col(i);
      const Vec<S> y = p.col(j);
      const Vec<S> lhs = a.mul(x, y);
      const Vec<S> rhs = p * (a.mul(x, a.basis(j)) + a.mul(a.basis(i), y) + lambda * Vec<S>(a.product(i, j)));
      t({{"x", i}, {"y", j}}, lhs - rhs);
    }
  return r;
}

namespace detail {

/// lhs - rhs of the paired identity for the basis element e_i, as an operator on M.
template <class S>
Mat<S> paired_defect(const RbpInstance<S>& inst, Index i) {
  const auto& mod = inst.module;
  const Mat<S> opp = mod.op(Vec<S>(inst.P.col(i)));
  const Mat<S>& opa = mod.op(i);
  const Mat<S>& t = inst.T;
  if (inst.side == Side::left) return opp * t - t * opp - t * opa * t - inst.lambda * (t * opa);
  return opp * t - t * opa * t - t * opp - inst.lambda * (t * opa);
}

}  // namespace detail

template <class S>
Report check_rbp_module(const RbpInstance<S>& inst) {
  Report r("rbp-module", inst.name);
  r.weight = to_string(inst.lambda);
  Tally t(r.add("paired-identity"));
  for (Index i = 0; i < inst.algebra().dim(); ++i) {
    const Mat<S> d = detail::paired_defect(inst, i);
    for (Index k = 0; k < inst.module.dim(); ++k) t({{"a", i}, {"m", k}}, d.col(k));
  }
  return r;
}

/// Runs check_rbp_module and records the outcome on the instance.
template <class S>
Report verify(RbpInstance<S>& inst) {
  Report r = check_rbp_module(inst);
  const AxiomResult* bad = r.first_failure();
  inst.status = bad ? RbpStatus::fail : RbpStatus::pass;
  inst.witness = bad ? bad->witness : std::nullopt;
  return r;
}

template <class S>
RbpInstance<S> verified(RbpInstance<S> inst) {
  verify(inst);
  return inst;
}

namespace detail {

template <class S>
void require_verified(const RbpInstance<S>& inst, const std::string& what) {
  RbpInstance<S> copy = inst;
  const Report r = verify(copy);
  if (copy.status != RbpStatus::pass) throw PreconditionError(what + ": " + inst.name + " is not a paired module", r);
}

}  // namespace detail

/// T^2 = -lambda T.
template <class S>
bool is_quasi_idempotent(const Mat<S>& t, const S& lambda) {
  if (t.rows() != t.cols()) throw DimensionError("quasi-idempotency needs a square operator");
  return all_zero(Mat<S>(t * t + lambda * t));
}

/// Basis (as columns) of {a in A : T(a.m) = a.T(m) for all m}.
template <class S>
Mat<S> commutant_subalgebra(const ActionStructure<S>& m, const Mat<S>& t) {
  const FinAlgebra<S>& a = m.algebra();
  const Index n = a.dim();
  const Index d = m.dim();
  Mat<S> sys = zeros<S>(a.field(), d * d, n);
  for (Index i = 0; i < n; ++i) {
    const Mat<S> c = t * m.op(i) - m.op(i) * t;
    for (Index r = 0; r < d; ++r)
      for (Index s = 0; s < d; ++s) sys(r * d + s, i) = c(r, s);
  }
  const Mat<S> basis = stack_columns(kernel_basis(sys), n);
  for (Index x = 0; x < basis.cols(); ++x)
    for (Index y = 0; y < basis.cols(); ++y)
      if (!in_span(basis, a.mul(basis.col(x), basis.col(y)))) throw std::logic_error("commutant is not closed under products");
  if (a.unital() && !in_span(basis, a.one())) throw std::logic_error("commutant does not contain the unit");
  return basis;
}

namespace detail {

/// Independent generator per (seed, trial).
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform on {-2, -1, 0, 1, 2} by rejection on the top three bits.
inline long small_entry(std::mt19937_64& rng) {
  for (;;) {
    const auto r = static_cast<long>(rng() >> 61);
    if (r < 5) return r - 2;
  }
}

}  // namespace detail

template <class S>
Mat<S> random_operator(const FieldSpec& f, Index rows, Index cols, std::mt19937_64& rng) {
  Mat<S> out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) out(i, j) = scalar<S>(f, detail::small_entry(rng));
  return out;
}

template <class S>
struct GenericVerdict {
  bool a_linear = false;
  bool quasi_idempotent = false;
  std::optional<bool> theorem;  // set when T is A-linear and A is unital
  bool exact = false;           // decided on an affine basis of all operators P
  long trials = 0;
  long trials_passed = 0;
  std::optional<Mat<S>> falsifier;  // first random P that broke the identity
  Report report;

  bool generic() const { return exact; }
};

/// Decides whether (M, T) is a paired module for every P.
///
/// The identity is affine in P, so it holds for all P exactly when it holds for
/// P = 0 and for every matrix unit. That decision is compared against the
/// quasi-idempotency criterion (when T is A-linear over a unital algebra) and
/// against `trials` seeded random operators; disagreement throws logic_error.
template <class S>
GenericVerdict<S> classify_generic(const ActionStructure<S>& m, const Mat<S>& t, const S& lambda, long trials,
                                   std::uint64_t seed = default_seed, std::string instance = {}) {
  const FinAlgebra<S>& a = m.algebra();
  const FieldSpec& f = a.field();
  const Index n = a.dim();
  if (instance.empty()) instance = m.name();
  GenericVerdict<S> v;
  v.report = Report("generic", instance);
  v.report.weight = to_string(lambda);
  v.report.trials = trials;
  v.a_linear = commutant_subalgebra(m, t).cols() == n;
  v.quasi_idempotent = is_quasi_idempotent(t, lambda);
  if (v.a_linear && a.unital()) v.theorem = v.quasi_idempotent;

  auto holds = [&](const Mat<S>& p) { return check_rbp_module(RbpInstance<S>(instance, m, m.side(), p, t, lambda)).passed(); };
  {
    AxiomResult& ax = v.report.add("generic");
    Tally tally(ax);
    Mat<S> p = zeros<S>(f, n, n);
    v.exact = tally.scalar({{"k", n}, {"l", n}}, holds(p) ? S(0) : scalar<S>(f, 1));
    for (Index k = 0; k < n; ++k)
      for (Index l = 0; l < n; ++l) {
        p(k, l) = scalar<S>(f, 1);
        v.exact = tally.scalar({{"k", k}, {"l", l}}, holds(p) ? S(0) : scalar<S>(f, 1)) && v.exact;
        p(k, l) = scalar<S>(f, 0);
      }
    ax.note = std::string("a-linear=") + (v.a_linear ? "yes" : "no") + " quasi-idempotent=" + (v.quasi_idempotent ? "yes" : "no");
  }
  {
    Tally tally(v.report.add("random-P"));
    for (long k = 0; k < trials; ++k) {
      auto rng = detail::trial_rng(seed, static_cast<std::uint64_t>(k));
      const Mat<S> p = random_operator<S>(f, n, n, rng);
      if (tally.scalar({{"trial", static_cast<std::size_t>(k)}}, holds(p) ? S(0) : scalar<S>(f, 1))) {
        ++v.trials_passed;
      } else if (!v.falsifier) {
        v.falsifier = p;
      }
    }
  }
  v.trials = trials;
  if (v.theorem && *v.theorem != v.exact) throw std::logic_error("quasi-idempotency criterion disagrees with the exact decision");
  if (v.exact && v.trials_passed != trials) throw std::logic_error("a random operator broke a generic module");
  if (v.theorem && !*v.theorem && v.trials_passed != 0) throw std::logic_error("a random operator satisfied a non-generic A-linear T");
  return v;
}

template <class S>
std::pair<Mat<S>, Mat<S>> tilde_pair(const Mat<S>& p, const Mat<S>& t, const S& lambda) {
  const auto tilde = [&](const Mat<S>& x) {
    if (x.rows() != x.cols()) throw DimensionError("tilde needs square operators");
    return Mat<S>(-lambda * Mat<S>::Identity(x.rows(), x.cols()) - x);
  };
  return {tilde(p), tilde(t)};
}

template <class S>
RbpInstance<S> tilde(const RbpInstance<S>& inst) {
  auto [p, t] = tilde_pair(inst.P, inst.T, inst.lambda);
  return RbpInstance<S>(inst.name + "~", inst.module, inst.side, std::move(p), std::move(t), inst.lambda);
}

template <class S>
struct AtkinsonWitness {
  Vec<S> n;
  bool factorization = false;        // P(a).T(m) = T(n)
  bool tilde_factorization = false;  // P~(a).T~(m) = -T~(n)
};

namespace detail {

template <class S>
void require_nonzero_weight(const RbpInstance<S>& inst) {
  if (inst.lambda.is_zero()) throw PreconditionError("the factorization needs a nonzero weight");
  // Over a field a nonzero scalar acts injectively; checked anyway.
  if (!kernel_basis(Mat<S>(inst.lambda * inst.module.id())).empty())
    throw PreconditionError("the weight has zero divisors on the module");
}

}  // namespace detail

/// n = P(a).m + a.T(m) + lambda (a.m), with both factorization identities
/// evaluated. Right instances use the mirrored expression.
template <class S>
AtkinsonWitness<S> atkinson_witness(const RbpInstance<S>& inst, const Vec<S>& a, const Vec<S>& m) {
  detail::require_nonzero_weight(inst);
  detail::require_verified(inst, "atkinson witness");
  const auto& mod = inst.module;
  const Vec<S> pa = inst.P * a;
  AtkinsonWitness<S> w;
  w.n = mod.act(pa, m) + mod.act(a, Vec<S>(inst.T * m)) + inst.lambda * mod.act(a, m);
  const auto [pt, tt] = tilde_pair(inst.P, inst.T, inst.lambda);
  w.factorization = equal(mod.act(pa, Vec<S>(inst.T * m)), inst.T * w.n);
  w.tilde_factorization = equal(mod.act(Vec<S>(pt * a), Vec<S>(tt * m)), Vec<S>(-(tt * w.n)));
  return w;
}

/// Some n with P(a).T(m) = T(n) and P~(a).T~(m) = -T~(n), found by solving the
/// stacked system; no assumption on the instance.
template <class S>
std::optional<Vec<S>> solve_atkinson(const RbpInstance<S>& inst, const Vec<S>& a, const Vec<S>& m) {
  detail::require_nonzero_weight(inst);
  const auto& mod = inst.module;
  const Index d = mod.dim();
  const auto [pt, tt] = tilde_pair(inst.P, inst.T, inst.lambda);
  Mat<S> sys(2 * d, d);
  sys << inst.T, tt;
  Vec<S> rhs(2 * d);
  rhs << mod.act(Vec<S>(inst.P * a), Vec<S>(inst.T * m)), Vec<S>(-mod.act(Vec<S>(pt * a), Vec<S>(tt * m)));
  const auto sol = solve_linear(sys, rhs);
  return sol.particular;
}

/// Both factorization identities on all basis pairs, with witnesses found by
/// solving. Passes exactly when every pair has a witness.
template <class S>
Report check_atkinson(const RbpInstance<S>& inst) {
  Report r("atkinson", inst.name);
  r.weight = to_string(inst.lambda);
  Tally t(r.add("witness-exists"));
  const FieldSpec& f = inst.field();
  for (Index i = 0; i < inst.algebra().dim(); ++i)
    for (Index k = 0; k < inst.module.dim(); ++k) {
      const bool ok = solve_atkinson(inst, inst.algebra().basis(i), inst.module.basis(k)).has_value();
      t.scalar({{"a", i}, {"m", k}}, ok ? S(0) : scalar<S>(f, 1));
    }
  return r;
}

namespace detail {

template <class S>
ActionStructure<S> direct_sum_module(const std::vector<ActionStructure<S>>& ms, std::string name) {
  const FinAlgebra<S>& a = ms.front().algebra();
  Index total = 0;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < ms.size(); ++s) {
    total += ms[s].dim();
    for (const auto& l : ms[s].labels()) labels.push_back(std::to_string(s + 1) + ":" + l);
  }
  std::vector<Mat<S>> ops;
  for (Index i = 0; i < a.dim(); ++i) {
    Mat<S> op = zeros<S>(a.field(), total, total);
    Index off = 0;
    for (const auto& m : ms) {
      op.block(off, off, m.dim(), m.dim()) = m.op(i);
      off += m.dim();
    }
    ops.push_back(std::move(op));
  }
  return ActionStructure<S>::from_operators(std::move(name), a, ms.front().side(), ops, std::move(labels));
}

}  // namespace detail

/// Block-diagonal T on the direct sum of instances sharing A, P and lambda.
template <class S>
RbpInstance<S> direct_sum(const std::vector<RbpInstance<S>>& parts, std::string name = {}) {
  if (parts.empty()) throw Error("direct sum of no instances");
  const auto& first = parts.front();
  std::vector<ActionStructure<S>> mods;
  Index total = 0;
  for (const auto& p : parts) {
    detail::require_same_algebra(first.algebra(), p.algebra(), "direct sum");
    if (!equal(p.P, first.P)) throw Error("direct sum: summands use different P");
    if (!(p.lambda == first.lambda)) throw Error("direct sum: summands have different weights");
    if (p.side != first.side) throw Error("direct sum: summands have different sides");
    detail::require_verified(p, "direct sum");
    mods.push_back(p.module);
    total += p.module.dim();
  }
  if (name.empty()) {
    name = first.name;
    for (std::size_t s = 1; s < parts.size(); ++s) name += "+" + parts[s].name;
  }
  Mat<S> t = zeros<S>(first.field(), total, total);
  Index off = 0;
  for (const auto& p : parts) {
    t.block(off, off, p.module.dim(), p.module.dim()) = p.T;
    off += p.module.dim();
  }
  RbpInstance<S> out(name, detail::direct_sum_module(mods, name), first.side, first.P, std::move(t), first.lambda);
  if (const Report r = verify(out); !r.passed()) throw std::logic_error("direct sum is not a paired module: " + r.summary());
  return out;
}

/// Projection of a direct sum onto summand `k`, given the summand dimensions.
template <class S>
Mat<S> summand_projection(const FieldSpec& f, const std::vector<Index>& dims, std::size_t k) {
  Index total = 0;
  Index off = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (s == k) off = total;
    total += dims[s];
  }
  Mat<S> out = zeros<S>(f, total, total);
  for (Index i = 0; i < dims[k]; ++i) out(off + i, off + i) = scalar<S>(f, 1);
  return out;
}

/// Whether span(basis) is stable under the action and under T.
template <class S>
bool is_rbp_submodule(const RbpInstance<S>& inst, const Mat<S>& basis) {
  if (!is_invariant_subspace(inst.T, basis)) return false;
  for (Index i = 0; i < inst.algebra().dim(); ++i)
    if (!is_invariant_subspace(inst.module.op(i), basis)) return false;
  return true;
}

/// P(e_i).T(f_j) lies in im T for all basis pairs.
template <class S>
Report check_image_closure(const RbpInstance<S>& inst) {
  Report r("image-closure", inst.name);
  Tally t(r.add("P(A) preserves T(M)"));
  const Mat<S> img = column_basis(inst.T);
  const FieldSpec& f = inst.field();
  for (Index i = 0; i < inst.algebra().dim(); ++i) {
    const Mat<S> x = inst.module.op(Vec<S>(inst.P.col(i))) * inst.T;
    for (Index k = 0; k < inst.module.dim(); ++k) t.scalar({{"a", i}, {"m", k}}, in_span(img, x.col(k)) ? S(0) : scalar<S>(f, 1));
  }
  return r;
}

/// (A, M, mu P, mu T, lambda mu).
template <class S>
RbpInstance<S> scale_weight(const RbpInstance<S>& inst, const S& mu) {
  detail::require_verified(inst, "scale weight");
  RbpInstance<S> out(inst.name + "*" + to_string(mu), inst.module, inst.side, Mat<S>(mu * inst.P), Mat<S>(mu * inst.T), inst.lambda * mu);
  if (const Report r = verify(out); !r.passed()) throw std::logic_error("scaled instance failed: " + r.summary());
  return out;
}

template <class S>
struct Doubled {
  FinAlgebra<S> star;
  ActionStructure<S> tri;
  RbpInstance<S> inst;
  Report checks;
};

/// a*b = aP(b) + P(a)b + lambda ab and a|>m = P(a).m + a.T(m) + lambda a.m,
/// for a left instance whose P is itself a Rota-Baxter operator.
template <class S>
Doubled<S> double_construction(const RbpInstance<S>& base, std::string name = {}) {
  if (base.side != Side::left) throw Error("doubling is defined for left instances");
  const FinAlgebra<S>& a = base.algebra();
  const auto& mod = base.module;
  const Mat<S>& p = base.P;
  const Mat<S>& t = base.T;
  const S& lambda = base.lambda;
  if (const Report rb = check_rb_operator(a, p, lambda); !rb.passed())
    throw PreconditionError("doubling needs P to be a Rota-Baxter operator", rb);
  detail::require_verified(base, "doubling");
  if (name.empty()) name = base.name + "-doubled";

  const Index n = a.dim();
  Mat<S> mult(n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      mult.col(i * n + j) = a.mul(a.basis(i), Vec<S>(p.col(j))) + a.mul(Vec<S>(p.col(i)), a.basis(j)) + lambda * Vec<S>(a.product(i, j));
  std::vector<std::string> labels = a.labels();
  FinAlgebra<S> star(name + "-star", a.field(), labels, std::move(mult));

  std::vector<Mat<S>> ops;
  for (Index i = 0; i < n; ++i) ops.push_back(mod.op(Vec<S>(p.col(i))) + mod.op(i) * t + lambda * mod.op(i));
  ActionStructure<S> tri = ActionStructure<S>::from_operators(name + "-module", star, Side::left, ops, mod.labels());

  Doubled<S> out{star, tri, RbpInstance<S>(name, tri, Side::left, p, t, lambda), Report("doubling", name)};
  out.checks.weight = to_string(lambda);
  out.checks.absorb(check_algebra(star), "star");
  out.checks.absorb(check_action(tri), "triangle");
  {
    Tally tally(out.checks.add("T(a|>m) = P(a).T(m)"));
    for (Index i = 0; i < n; ++i) {
      const Mat<S> d = t * tri.op(i) - mod.op(Vec<S>(p.col(i))) * t;
      for (Index k = 0; k < mod.dim(); ++k) tally({{"a", i}, {"m", k}}, d.col(k));
    }
  }
  out.checks.absorb(verify(out.inst), "paired");
  if (!out.checks.passed()) throw std::logic_error("doubling conclusions failed: " + out.checks.summary());
  return out;
}

/// The three identities that hold for idempotent operators, each multiplied
/// by (1 + lambda). Identities whose hypotheses fail are skipped.
template <class S>
Report idempotent_identities(const RbpInstance<S>& inst) {
  detail::require_verified(inst, "idempotent identities");
  Report r("idempotent-identities", inst.name);
  r.weight = to_string(inst.lambda);
  const Mat<S>& p = inst.P;
  const Mat<S>& t = inst.T;
  const S c = scalar<S>(inst.field(), 1) + inst.lambda;
  const bool t_idem = equal(t * t, t);
  const bool p_idem = equal(p * p, p);
  const auto& mod = inst.module;
  const char* n1 = "(1+l)T(a.T(m))";
  const char* n2 = "(1+l)T(P(a).m)";
  const char* n3 = "(1+l)(P(a).T(m)-l.T(a.m))";
  if (!t_idem) {
    r.skip(n1, "T is not idempotent");
  } else {
    Tally tally(r.add(n1));
    for (Index i = 0; i < inst.algebra().dim(); ++i) {
      const Mat<S> d = c * (t * mod.op(i) * t);
      for (Index k = 0; k < mod.dim(); ++k) tally({{"a", i}, {"m", k}}, d.col(k));
    }
  }
  if (!t_idem || !p_idem) {
    r.skip(n2, "P and T are not both idempotent");
    r.skip(n3, "P and T are not both idempotent");
    return r;
  }
  Tally t2(r.add(n2));
  Tally t3(r.add(n3));
  for (Index i = 0; i < inst.algebra().dim(); ++i) {
    const Mat<S> opp = mod.op(Vec<S>(p.col(i)));
    const Mat<S> d2 = c * (t * opp);
    const Mat<S> d3 = c * (opp * t - inst.lambda * (t * mod.op(i)));
    for (Index k = 0; k < mod.dim(); ++k) {
      t2({{"a", i}, {"m", k}}, d2.col(k));
      t3({{"a", i}, {"m", k}}, d3.col(k));
    }
  }
  return r;
}

/// From a right instance (M, P, T), the left instance (End(M), P, T~) where
/// T(f) = f o T and the tilde is taken at the same weight.
template <class S>
RbpInstance<S> endomorphism_rbp(const RbpInstance<S>& inst, std::string name = {}) {
  if (inst.side != Side::right) throw Error("the endomorphism construction starts from a right instance");
  detail::require_verified(inst, "endomorphism construction");
  if (name.empty()) name = "End(" + inst.name + ")";
  ActionStructure<S> end = endomorphism_module(inst.module, name);
  const Index d = inst.module.dim();
  // F -> F T on row-major vec(F).
  const Mat<S> bold = kron(identity<S>(inst.field(), d), Mat<S>(inst.T.transpose()));
  const Mat<S> t = -inst.lambda * identity<S>(inst.field(), d * d) - bold;
  RbpInstance<S> out(std::move(name), std::move(end), Side::left, inst.P, t, inst.lambda);
  if (const Report r = verify(out); !r.passed()) throw std::logic_error("endomorphism instance failed: " + r.summary());
  return out;
}

}  // namespace hopfrb

#endif  // HOPFRB_ROTA_BAXTER_HPP
