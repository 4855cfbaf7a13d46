// Modules, comodules, dimodules, Hopf modules and weak Doi-Hopf modules;
// module algebras, smash products and the endomorphism module.
//
// Action constants (carrier basis f_j, dimension m; algebra basis e_i, dimension n):
//   left   m x (n*m)   column i*m+j holds e_i . f_j
//   right  m x (m*n)   column j*n+i holds f_j . e_i
// Coaction constants:
//   right  (m*n) x m   column j holds rho(f_j) in M (x) C
//   left   (n*m) x m   column j holds rho(f_j) in C (x) M
#ifndef HOPFRB_ACTIONS_HPP
#define HOPFRB_ACTIONS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfrb/structures.hpp"

namespace hopfrb {

enum class Side { left, right };

inline std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

inline Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw ParseError("side must be \"left\" or \"right\", got \"" + s + "\"");
}

template <class S>
class ActionStructure {
 public:
  ActionStructure() = default;
  ActionStructure(std::string name, FinAlgebra<S> algebra, Side side, Index dim, Mat<S> action,
                  std::vector<std::string> labels = {})
      : name_(std::move(name)), alg_(std::move(algebra)), side_(side), dim_(dim), action_(std::move(action)), labels_(std::move(labels)) {
    const Index n = alg_.dim();
    if (action_.rows() != dim_ || action_.cols() != n * dim_)
      throw DimensionError("module " + name_ + ": action table does not match dimensions");
    if (labels_.empty()) labels_ = detail::default_labels(dim_, "m");
    if (static_cast<Index>(labels_.size()) != dim_) throw DimensionError("module " + name_ + ": wrong number of labels");
    bind(action_, alg_.field().tag());
    field_tag(action_, alg_.field().tag());
    for (Index i = 0; i < n; ++i) {
      Mat<S> op(dim_, dim_);
      for (Index j = 0; j < dim_; ++j) op.col(j) = action_.col(side_ == Side::left ? i * dim_ + j : j * n + i);
      ops_.push_back(std::move(op));
    }
  }

  /// Builds the action from the operators of the algebra basis elements.
  static ActionStructure from_operators(std::string name, FinAlgebra<S> algebra, Side side, const std::vector<Mat<S>>& ops,
                                        std::vector<std::string> labels = {}) {
    const Index n = algebra.dim();
    if (static_cast<Index>(ops.size()) != n) throw DimensionError("module " + name + ": need one operator per basis element");
    const Index m = n == 0 ? static_cast<Index>(labels.size()) : ops[0].rows();
    Mat<S> action(m, n * m);
    for (Index i = 0; i < n; ++i) {
      const Mat<S>& op = ops[static_cast<std::size_t>(i)];
      if (op.rows() != m || op.cols() != m) throw DimensionError("module " + name + ": operator has wrong shape");
      for (Index j = 0; j < m; ++j) action.col(side == Side::left ? i * m + j : j * n + i) = op.col(j);
    }
    return ActionStructure(std::move(name), std::move(algebra), side, m, std::move(action), std::move(labels));
  }

  const std::string& name() const { return name_; }
  const FinAlgebra<S>& algebra() const { return alg_; }
  const FieldSpec& field() const { return alg_.field(); }
  Side side() const { return side_; }
  Index dim() const { return dim_; }
  const Mat<S>& action() const { return action_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Matrix of m -> e_i . m (left) or m -> m . e_i (right).
  const Mat<S>& op(Index i) const { return ops_[static_cast<std::size_t>(i)]; }
  Mat<S> op(const Vec<S>& a) const {
    Mat<S> out = zeros<S>(field(), dim_, dim_);
    for (Index i = 0; i < alg_.dim(); ++i) {
      if (!a(i).is_zero()) out += a(i) * op(i);
    }
    return out;
  }
  Vec<S> act(const Vec<S>& a, const Vec<S>& m) const { return op(a) * m; }
  Vec<S> basis(Index j) const { return unit_vec<S>(field(), dim_, j); }
  Mat<S> id() const { return identity<S>(field(), dim_); }

  ActionStructure renamed(std::string name) const {
    ActionStructure out = *this;
    out.name_ = std::move(name);
    return out;
  }

 private:
  std::string name_;
  FinAlgebra<S> alg_;
  Side side_ = Side::left;
  Index dim_ = 0;
  Mat<S> action_;
  std::vector<std::string> labels_;
  std::vector<Mat<S>> ops_;
};

template <class S>
ActionStructure<S> regular_module(const FinAlgebra<S>& a, Side side, std::string name = {}) {
  if (name.empty()) name = a.name() + "-" + side_name(side) + "-regular";
  std::vector<Mat<S>> ops;
  for (Index i = 0; i < a.dim(); ++i) ops.push_back(side == Side::left ? Mat<S>(a.left(i)) : a.right_mult(a.basis(i)));
  return ActionStructure<S>::from_operators(std::move(name), a, side, ops, a.labels());
}

/// h . m = eps(h) m on a carrier of dimension m.
template <class S>
ActionStructure<S> trivial_module(const Bialgebra<S>& h, Index m, Side side, std::string name = {}) {
  if (name.empty()) name = h.name() + "-trivial-module";
  std::vector<Mat<S>> ops;
  for (Index i = 0; i < h.dim(); ++i) ops.push_back(h.coalgebra().counit()(i) * identity<S>(h.field(), m));
  return ActionStructure<S>::from_operators(std::move(name), h.algebra(), side, ops, detail::default_labels(m, "m"));
}

template <class S>
class CoactionStructure {
 public:
  CoactionStructure() = default;
  CoactionStructure(std::string name, FinCoalgebra<S> coalgebra, Side side, Index dim, Mat<S> coaction,
                    std::vector<std::string> labels = {})
      : name_(std::move(name)), coalg_(std::move(coalgebra)), side_(side), dim_(dim), coaction_(std::move(coaction)), labels_(std::move(labels)) {
    if (coaction_.rows() != dim_ * coalg_.dim() || coaction_.cols() != dim_)
      throw DimensionError("comodule " + name_ + ": coaction table does not match dimensions");
    if (labels_.empty()) labels_ = detail::default_labels(dim_, "m");
    if (static_cast<Index>(labels_.size()) != dim_) throw DimensionError("comodule " + name_ + ": wrong number of labels");
    bind(coaction_, coalg_.field().tag());
    field_tag(coaction_, coalg_.field().tag());
  }

  const std::string& name() const { return name_; }
  const FinCoalgebra<S>& coalgebra() const { return coalg_; }
  const FieldSpec& field() const { return coalg_.field(); }
  Side side() const { return side_; }
  Index dim() const { return dim_; }
  const Mat<S>& coaction() const { return coaction_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vec<S> coact(const Vec<S>& m) const { return coaction_ * m; }
  Mat<S> id() const { return identity<S>(field(), dim_); }

  CoactionStructure renamed(std::string name) const {
    CoactionStructure out = *this;
    out.name_ = std::move(name);
    return out;
  }

 private:
  std::string name_;
  FinCoalgebra<S> coalg_;
  Side side_ = Side::right;
  Index dim_ = 0;
  Mat<S> coaction_;
  std::vector<std::string> labels_;
};

/// C over itself via Delta.
template <class S>
CoactionStructure<S> regular_comodule(const FinCoalgebra<S>& c, Side side, std::string name = {}) {
  if (name.empty()) name = c.name() + "-" + side_name(side) + "-regular-comodule";
  return CoactionStructure<S>(std::move(name), c, side, c.dim(), c.comult(), c.labels());
}

/// rho(m) = m (x) 1 (right) or 1 (x) m (left).
template <class S>
CoactionStructure<S> trivial_comodule(const Bialgebra<S>& h, Index m, Side side, std::string name = {}) {
  if (name.empty()) name = h.name() + "-trivial-comodule";
  const Mat<S> id = identity<S>(h.field(), m);
  const Mat<S> one = h.one();
  Mat<S> coaction = side == Side::right ? kron(id, one) : kron(one, id);
  return CoactionStructure<S>(std::move(name), h.coalgebra(), side, m, std::move(coaction));
}

template <class S>
Report check_action(const ActionStructure<S>& s) {
  Report r("module", s.name());
  const FinAlgebra<S>& a = s.algebra();
  const Index n = a.dim();
  {
    Tally t(r.add("associativity"));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const Mat<S> lhs = s.op(Vec<S>(a.product(i, j)));
        const Mat<S> rhs = s.side() == Side::left ? Mat<S>(s.op(i) * s.op(j)) : Mat<S>(s.op(j) * s.op(i));
        for (Index k = 0; k < s.dim(); ++k) t({{"a", i}, {"b", j}, {"m", k}}, lhs.col(k) - rhs.col(k));
      }
  }
  if (a.unital()) {
    Tally t(r.add("unit"));
    const Mat<S> one = s.op(a.one());
    for (Index k = 0; k < s.dim(); ++k) t({{"m", k}}, one.col(k) - s.basis(k));
  } else {
    r.skip("unit", "nonunital algebra");
  }
  return r;
}

template <class S>
Report check_coaction(const CoactionStructure<S>& s) {
  Report r("comodule", s.name());
  const FinCoalgebra<S>& c = s.coalgebra();
  const Mat<S> idc = identity<S>(c.field(), c.dim());
  const Mat<S> idm = s.id();
  const Mat<S> eps = c.counit().transpose();
  const Mat<S>& rho = s.coaction();
  {
    Tally t(r.add("coassociativity"));
    for (Index j = 0; j < s.dim(); ++j) {
      const Vec<S> x = rho.col(j);
      if (s.side() == Side::right)
        t({{"m", j}}, apply_tensor<S>(rho, idc, x) - apply_tensor<S>(idm, c.comult(), x));
      else
        t({{"m", j}}, apply_tensor<S>(idc, rho, x) - apply_tensor<S>(c.comult(), idm, x));
    }
  }
  {
    Tally t(r.add("counit"));
    for (Index j = 0; j < s.dim(); ++j) {
      const Vec<S> x = rho.col(j);
      const Vec<S> back = s.side() == Side::right ? apply_tensor<S>(idm, eps, x) : apply_tensor<S>(eps, idm, x);
      t({{"m", j}}, back - idm.col(j));
    }
  }
  return r;
}

namespace detail {

template <class S>
void require_same_algebra(const FinAlgebra<S>& a, const FinAlgebra<S>& b, const std::string& what) {
  if (a.dim() != b.dim() || !equal(a.mult(), b.mult())) throw Error(what + ": structures live over different algebras");
}

template <class S>
void require_same_coalgebra(const FinCoalgebra<S>& a, const FinCoalgebra<S>& b, const std::string& what) {
  if (a.dim() != b.dim() || !equal(a.comult(), b.comult())) throw Error(what + ": structures live over different coalgebras");
}

}  // namespace detail

/// Left H-module and right H-comodule on one carrier.
template <class S>
struct Dimodule {
  std::string name;
  Bialgebra<S> host;
  ActionStructure<S> action;
  CoactionStructure<S> coaction;

  Dimodule(std::string n, Bialgebra<S> h, ActionStructure<S> act, CoactionStructure<S> co)
      : name(std::move(n)), host(std::move(h)), action(std::move(act)), coaction(std::move(co)) {
    if (action.side() != Side::left || coaction.side() != Side::right)
      throw Error("dimodule " + name + ": needs a left action and a right coaction");
    if (action.dim() != coaction.dim()) throw DimensionError("dimodule " + name + ": carrier dimensions differ");
    detail::require_same_algebra(action.algebra(), host.algebra(), "dimodule " + name);
    detail::require_same_coalgebra(coaction.coalgebra(), host.coalgebra(), "dimodule " + name);
  }

  Index dim() const { return action.dim(); }
};

template <class S>
Report check_dimodule(const Dimodule<S>& d) {
  Report r("dimodule", d.name);
  r.absorb(check_action(d.action), "module");
  r.absorb(check_coaction(d.coaction), "comodule");
  Tally t(r.add("D"));
  const Mat<S>& rho = d.coaction.coaction();
  const Mat<S> idh = d.host.id();
  for (Index i = 0; i < d.host.dim(); ++i)
    for (Index j = 0; j < d.dim(); ++j) {
      const Vec<S> lhs = rho * d.action.op(i).col(j);
      const Vec<S> rhs = apply_tensor<S>(d.action.op(i), idh, rho.col(j));
      t({{"h", i}, {"m", j}}, lhs - rhs);
    }
  return r;
}

/// Counts basis pairs violating rho(h.m) = h.m_(0) (x) m_(1), expanding the raw
/// structure constants index by index.
template <class S>
std::size_t dimodule_violations_raw(const Dimodule<S>& d) {
  const Index n = d.host.dim(), m = d.dim();
  const Mat<S>& alpha = d.action.action();     // alpha(k, i*m+j): coefficient of f_k in e_i . f_j
  const Mat<S>& rho = d.coaction.coaction();   // rho(p*n+q, j): coefficient of f_p (x) e_q in rho(f_j)
  std::size_t bad = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) {
      bool ok = true;
      for (Index p = 0; p < m && ok; ++p)
        for (Index q = 0; q < n && ok; ++q) {
          S lhs = scalar<S>(d.host.field(), 0);
          S rhs = scalar<S>(d.host.field(), 0);
          for (Index k = 0; k < m; ++k) {
            lhs += alpha(k, i * m + j) * rho(p * n + q, k);
            rhs += rho(k * n + q, j) * alpha(p, i * m + k);
          }
          ok = (lhs - rhs).is_zero();
        }
      if (!ok) ++bad;
    }
  return bad;
}

/// Right H-module and right H-comodule with rho(m.h) = m_(0).h_1 (x) m_(1) h_2.
template <class S>
struct HopfModule {
  std::string name;
  Bialgebra<S> host;
  ActionStructure<S> action;
  CoactionStructure<S> coaction;

  HopfModule(std::string n, Bialgebra<S> h, ActionStructure<S> act, CoactionStructure<S> co)
      : name(std::move(n)), host(std::move(h)), action(std::move(act)), coaction(std::move(co)) {
    if (action.side() != Side::right || coaction.side() != Side::right)
      throw Error("hopf module " + name + ": needs a right action and a right coaction");
    if (action.dim() != coaction.dim()) throw DimensionError("hopf module " + name + ": carrier dimensions differ");
    detail::require_same_algebra(action.algebra(), host.algebra(), "hopf module " + name);
    detail::require_same_coalgebra(coaction.coalgebra(), host.coalgebra(), "hopf module " + name);
  }

  Index dim() const { return action.dim(); }
};

namespace detail {

/// m_(0).a_(0) (x) m_(1) a_(1) for rho_M(f_j) and rho_A(x), with the right
/// action of A on M given by `act` and products in H.
template <class S>
Vec<S> diagonal_coaction(const ActionStructure<S>& act, const FinAlgebra<S>& h, const Vec<S>& rho_m, const Vec<S>& rho_a) {
  const Index m = act.dim(), na = act.algebra().dim(), n = h.dim();
  Vec<S> out = zero_vec<S>(h.field(), m * n);
  for (Index p = 0; p < m; ++p)
    for (Index q = 0; q < n; ++q) {
      const S& c1 = rho_m(p * n + q);
      if (c1.is_zero()) continue;
      for (Index r = 0; r < na; ++r)
        for (Index s = 0; s < n; ++s) {
          const S& c2 = rho_a(r * n + s);
          if (c2.is_zero()) continue;
          out += (c1 * c2) * tensor(act.op(r).col(p), h.product(q, s));
        }
    }
  return out;
}

}  // namespace detail

template <class S>
Report check_hopf_module(const HopfModule<S>& hm) {
  Report r("hopf-module", hm.name);
  r.absorb(check_action(hm.action), "module");
  r.absorb(check_coaction(hm.coaction), "comodule");
  Tally t(r.add("compatibility"));
  const Mat<S>& rho = hm.coaction.coaction();
  for (Index i = 0; i < hm.host.dim(); ++i)
    for (Index j = 0; j < hm.dim(); ++j) {
      const Vec<S> lhs = rho * hm.action.op(i).col(j);
      const Vec<S> rhs = detail::diagonal_coaction(hm.action, hm.host.algebra(), Vec<S>(rho.col(j)),
                                                   Vec<S>(hm.host.coalgebra().comult().col(i)));
      t({{"h", i}, {"m", j}}, lhs - rhs);
    }
  return r;
}

/// An algebra A with a right coaction of a weak bialgebra H that is an
/// algebra map in the weak sense.
template <class S>
struct WeakComoduleAlgebra {
  std::string name;
  Bialgebra<S> host;
  FinAlgebra<S> algebra;
  CoactionStructure<S> coaction;

  WeakComoduleAlgebra(std::string n, Bialgebra<S> h, FinAlgebra<S> a, CoactionStructure<S> co)
      : name(std::move(n)), host(std::move(h)), algebra(std::move(a)), coaction(std::move(co)) {
    if (coaction.side() != Side::right) throw Error("comodule algebra " + name + ": needs a right coaction");
    if (coaction.dim() != algebra.dim()) throw DimensionError("comodule algebra " + name + ": carrier is not the algebra");
    if (!algebra.unital()) throw Error("comodule algebra " + name + ": algebra must be unital");
    detail::require_same_coalgebra(coaction.coalgebra(), host.coalgebra(), "comodule algebra " + name);
  }
};

/// H over itself via Delta.
template <class S>
WeakComoduleAlgebra<S> regular_comodule_algebra(const Bialgebra<S>& h, std::string name = {}) {
  if (name.empty()) name = h.name() + "-comodule-algebra";
  return WeakComoduleAlgebra<S>(std::move(name), h, h.algebra(), regular_comodule(h.coalgebra(), Side::right));
}

template <class S>
Report check_weak_comodule_algebra(const WeakComoduleAlgebra<S>& w) {
  Report r("comodule-algebra", w.name);
  const Report co = check_coaction(w.coaction);
  r.axioms.push_back(co.axioms[0]);
  r.axioms.back().axiom = "WCA1";
  r.axioms.push_back(co.axioms[1]);  // counit law, not part of WCA1-WCA3
  const FinAlgebra<S> ah = tensor_algebra(w.algebra, w.host.algebra());
  const Mat<S>& rho = w.coaction.coaction();
  const Mat<S> pl = target_map(w.host);
  const Mat<S> ida = identity<S>(w.algebra.field(), w.algebra.dim());
  const Vec<S> rho1 = rho * w.algebra.one();
  {
    Tally t(r.add("WCA2"));
    for (Index a = 0; a < w.algebra.dim(); ++a) {
      const Vec<S> lhs = ah.mul(rho1, tensor(w.algebra.basis(a), w.host.one()));
      t({{"a", a}}, lhs - apply_tensor<S>(ida, pl, rho.col(a)));
    }
  }
  {
    Tally t(r.add("WCA3"));
    for (Index a = 0; a < w.algebra.dim(); ++a)
      for (Index b = 0; b < w.algebra.dim(); ++b)
        t({{"a", a}, {"b", b}}, rho * w.algebra.product(a, b) - ah.mul(rho.col(a), rho.col(b)));
  }
  return r;
}

/// Right A-module and right H-comodule with
/// rho_M(m.a) = m_(0).a_(0) (x) m_(1) a_(1).
template <class S>
struct DoiHopfModule {
  std::string name;
  WeakComoduleAlgebra<S> base;
  ActionStructure<S> action;
  CoactionStructure<S> coaction;

  DoiHopfModule(std::string n, WeakComoduleAlgebra<S> a, ActionStructure<S> act, CoactionStructure<S> co)
      : name(std::move(n)), base(std::move(a)), action(std::move(act)), coaction(std::move(co)) {
    if (action.side() != Side::right || coaction.side() != Side::right)
      throw Error("doi-hopf module " + name + ": needs a right action and a right coaction");
    if (action.dim() != coaction.dim()) throw DimensionError("doi-hopf module " + name + ": carrier dimensions differ");
    detail::require_same_algebra(action.algebra(), base.algebra, "doi-hopf module " + name);
    detail::require_same_coalgebra(coaction.coalgebra(), base.host.coalgebra(), "doi-hopf module " + name);
  }

  Index dim() const { return action.dim(); }
};

template <class S>
Report check_doi_hopf(const DoiHopfModule<S>& d) {
  Report r("doi-hopf", d.name);
  r.absorb(check_action(d.action), "module");
  r.absorb(check_coaction(d.coaction), "comodule");
  Tally t(r.add("WH"));
  const Mat<S>& rho_m = d.coaction.coaction();
  const Mat<S>& rho_a = d.base.coaction.coaction();
  for (Index i = 0; i < d.base.algebra.dim(); ++i)
    for (Index j = 0; j < d.dim(); ++j) {
      const Vec<S> lhs = rho_m * d.action.op(i).col(j);
      const Vec<S> rhs = detail::diagonal_coaction(d.action, d.base.host.algebra(), Vec<S>(rho_m.col(j)), Vec<S>(rho_a.col(i)));
      t({{"a", i}, {"m", j}}, lhs - rhs);
    }
  return r;
}

/// Checks that `act` (a left action of H on the carrier of A) makes A a left
/// H-module algebra.
template <class S>
Report check_module_algebra(const Bialgebra<S>& h, const FinAlgebra<S>& a, const ActionStructure<S>& act) {
  Report r("module-algebra", act.name());
  if (act.side() != Side::left || act.dim() != a.dim()) throw Error("check_module_algebra: need a left action on the carrier of A");
  detail::require_same_algebra(act.algebra(), h.algebra(), "check_module_algebra");
  const Index nh = h.dim(), na = a.dim();
  {
    Tally t(r.add("A1"));
    for (Index x = 0; x < nh; ++x) {
      const Mat<S> dx = unflatten<S>(h.delta(h.basis(x)), nh, nh);
      for (Index i = 0; i < na; ++i)
        for (Index j = 0; j < na; ++j) {
          const Vec<S> lhs = act.op(x) * a.product(i, j);
          Vec<S> rhs = a.zero();
          for (Index c = 0; c < nh; ++c)
            for (Index d = 0; d < nh; ++d) {
              if (dx(c, d).is_zero()) continue;
              rhs += dx(c, d) * a.mul(act.op(c).col(i), act.op(d).col(j));
            }
          t({{"h", x}, {"a", i}, {"b", j}}, lhs - rhs);
        }
    }
  }
  {
    Tally t(r.add("A2"));
    const Mat<S> one = act.op(h.one());
    for (Index i = 0; i < na; ++i) t({{"a", i}}, one.col(i) - a.basis(i));
  }
  {
    Tally t(r.add("A3"));
    for (Index x = 0; x < nh; ++x)
      for (Index g = 0; g < nh; ++g) {
        const Mat<S> lhs = act.op(x) * act.op(g);
        const Mat<S> rhs = act.op(Vec<S>(h.algebra().product(x, g)));
        for (Index i = 0; i < na; ++i) t({{"h", x}, {"g", g}, {"a", i}}, lhs.col(i) - rhs.col(i));
      }
  }
  return r;
}

/// A # H on the basis a_i # h_j (index i*dim(H)+j) with
/// (a#h)(b#g) = a(h_1.b) # h_2 g and unit 1#1.
template <class S>
FinAlgebra<S> smash_product(const FinAlgebra<S>& a, const Bialgebra<S>& h, const ActionStructure<S>& act, std::string name = {}) {
  if (const Report r = check_module_algebra(h, a, act); !r.passed())
    throw ValidationError("smash_product: module-algebra axioms fail", r);
  if (name.empty()) name = a.name() + "#" + h.name();
  const Index na = a.dim(), nh = h.dim(), n = na * nh;
  Mat<S> mult = zeros<S>(a.field(), n, n * n);
  for (Index j = 0; j < nh; ++j) {
    const Mat<S> dj = unflatten<S>(h.delta(h.basis(j)), nh, nh);
    for (Index i = 0; i < na; ++i)
      for (Index k = 0; k < na; ++k)
        for (Index l = 0; l < nh; ++l) {
          Vec<S> col = zero_vec<S>(a.field(), n);
          for (Index c = 0; c < nh; ++c)
            for (Index d = 0; d < nh; ++d) {
              if (dj(c, d).is_zero()) continue;
              col += dj(c, d) * tensor(a.mul(a.basis(i), act.op(c).col(k)), Vec<S>(h.algebra().product(d, l)));
            }
          mult.col((i * nh + j) * n + (k * nh + l)) = col;
        }
  }
  std::vector<std::string> labels;
  for (const auto& x : a.labels())
    for (const auto& y : h.labels()) labels.push_back(x + "#" + y);
  FinAlgebra<S> out(std::move(name), a.field(), std::move(labels), std::move(mult), tensor(a.one(), h.one()));
  if (!check_algebra(out).passed()) throw std::logic_error("smash_product: result is not an algebra");
  return out;
}

/// End(M) for a right A-module M, as a left A-module via (a.f)(m) = f(m.a).
/// Operators are m x m matrices; the basis is the matrix units in row-major
/// order, so f has coordinates f(r, s) at index r*m+s.
template <class S>
ActionStructure<S> endomorphism_module(const ActionStructure<S>& m, std::string name = {}) {
  if (m.side() != Side::right) throw Error("endomorphism_module: needs a right module");
  if (const Report r = check_action(m); !r.passed()) throw ValidationError("endomorphism_module: input action invalid", r);
  if (name.empty()) name = "End(" + m.name() + ")";
  const Mat<S> id = m.id();
  std::vector<Mat<S>> ops;
  for (Index i = 0; i < m.algebra().dim(); ++i) ops.push_back(kron(id, Mat<S>(m.op(i).transpose())));
  std::vector<std::string> labels;
  for (const auto& r : m.labels())
    for (const auto& s : m.labels()) labels.push_back("E[" + r + "," + s + "]");
  ActionStructure<S> out = ActionStructure<S>::from_operators(std::move(name), m.algebra(), Side::left, ops, std::move(labels));
  if (!check_action(out).passed()) throw std::logic_error("endomorphism_module: result is not a left module");
  return out;
}

/// Row-major vectorization of an operator on M, matching endomorphism_module.
template <class S>
Vec<S> vec_operator(const Mat<S>& f) {
  Vec<S> out(f.size());
  for (Index r = 0; r < f.rows(); ++r)
    for (Index s = 0; s < f.cols(); ++s) out(r * f.cols() + s) = f(r, s);
  return out;
}

enum class CoinvariantMode { strict, weak };

/// Basis (as columns) of the coinvariants of a coaction of H:
/// strict: rho(m) = m (x) 1 (right) or 1 (x) m (left);
/// weak:   rho(m) = m_(0) (x) Pi^L(m_(1)) (right coactions only).
template <class S>
Mat<S> coinvariants(const CoactionStructure<S>& c, const Bialgebra<S>& h, CoinvariantMode mode) {
  detail::require_same_coalgebra(c.coalgebra(), h.coalgebra(), "coinvariants");
  const Mat<S>& rho = c.coaction();
  Mat<S> target;
  if (mode == CoinvariantMode::strict) {
    const Mat<S> one = h.one();
    target = c.side() == Side::right ? kron(c.id(), one) : kron(one, c.id());
  } else {
    if (c.side() != Side::right) throw Error("coinvariants: weak mode needs a right coaction");
    if (const Report r = check_weak_bialgebra(h); !r.passed())
      throw ValidationError("coinvariants: weak mode needs a weak bialgebra host", r);
    target = kron(c.id(), target_map(h)) * rho;
  }
  const auto ker = kernel_basis(Mat<S>(rho - target));
  return stack_columns(ker, c.dim());
}

}  // namespace hopfrb

#endif  // HOPFRB_ACTIONS_HPP
