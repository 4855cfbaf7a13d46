// Axiom checkers for algebras, coalgebras, (weak) bialgebras and (weak) Hopf
// algebras; antipode computation; target and source maps.
#ifndef HOPFRB_STRUCTURES_HPP
#define HOPFRB_STRUCTURES_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "hopfrb/algebra.hpp"
#include "hopfrb/report.hpp"

namespace hopfrb {

template <class S>
Report check_algebra(const FinAlgebra<S>& a) {
  Report r("algebra", a.name());
  const Index n = a.dim();
  {
    Tally t(r.add("associativity"));
    std::vector<Mat<S>> right;
    for (Index k = 0; k < n; ++k) right.push_back(a.right_mult(a.basis(k)));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          const Vec<S> lhs = right[static_cast<std::size_t>(k)] * a.product(i, j);
          const Vec<S> rhs = a.left(i) * a.product(j, k);
          t({{"i", i}, {"j", j}, {"k", k}}, lhs - rhs);
        }
  }
  if (a.unital()) {
    Tally t(r.add("unit"));
    for (Index i = 0; i < n; ++i) {
      const Vec<S> e = a.basis(i);
      t({{"i", i}}, a.mul(a.one(), e) - e);
      t({{"i", i}}, a.mul(e, a.one()) - e);
    }
  } else {
    r.skip("unit", "nonunital");
  }
  return r;
}

template <class S>
Report check_coalgebra(const FinCoalgebra<S>& c) {
  Report r("coalgebra", c.name());
  const Index n = c.dim();
  const Mat<S> id = identity<S>(c.field(), n);
  const Mat<S> eps = c.counit().transpose();
  {
    Tally t(r.add("coassociativity"));
    for (Index i = 0; i < n; ++i) {
      const Vec<S> d = c.comult().col(i);
      t({{"i", i}}, apply_tensor<S>(c.comult(), id, d) - apply_tensor<S>(id, c.comult(), d));
    }
  }
  {
    Tally t(r.add("counit"));
    for (Index i = 0; i < n; ++i) {
      const Vec<S> d = c.comult().col(i);
      const Vec<S> e = unit_vec<S>(c.field(), n, i);
      t({{"i", i}}, apply_tensor<S>(eps, id, d) - e);
      t({{"i", i}}, apply_tensor<S>(id, eps, d) - e);
    }
  }
  return r;
}

namespace detail {

template <class S>
void check_comult_multiplicative(Report& r, const Bialgebra<S>& h, const FinAlgebra<S>& hh) {
  Tally t(r.add("comult-multiplicative"));
  const Index n = h.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vec<S> lhs = h.delta(h.algebra().product(i, j));
      const Vec<S> rhs = hh.mul(h.coalgebra().comult().col(i), h.coalgebra().comult().col(j));
      t({{"x", i}, {"y", j}}, lhs - rhs);
    }
}

}  // namespace detail

template <class S>
Report check_bialgebra(const Bialgebra<S>& h) {
  Report r("bialgebra", h.name());
  r.absorb(check_algebra(h.algebra()), "algebra");
  r.absorb(check_coalgebra(h.coalgebra()), "coalgebra");
  const FinAlgebra<S> hh = tensor_algebra(h.algebra(), h.algebra());
  detail::check_comult_multiplicative(r, h, hh);
  const Index n = h.dim();
  {
    Tally t(r.add("counit-multiplicative"));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        t.scalar({{"x", i}, {"y", j}}, h.eps(h.algebra().product(i, j)) - h.eps(h.basis(i)) * h.eps(h.basis(j)));
  }
  {
    Tally t(r.add("comult-unit"));
    t({}, h.delta(h.one()) - tensor(h.one(), h.one()));
  }
  {
    Tally t(r.add("counit-unit"));
    t.scalar({}, h.eps(h.one()) - h.scalar(1));
  }
  return r;
}

template <class S>
Report check_weak_bialgebra(const Bialgebra<S>& h) {
  Report r("weak-bialgebra", h.name());
  r.absorb(check_algebra(h.algebra()), "algebra");
  r.absorb(check_coalgebra(h.coalgebra()), "coalgebra");
  const FinAlgebra<S> hh = tensor_algebra(h.algebra(), h.algebra());
  detail::check_comult_multiplicative(r, h, hh);
  const Index n = h.dim();
  const Mat<S> e = counit_form(h);
  {
    AxiomResult& first = r.add("counit-weak-multiplicative-1");
    AxiomResult& second = r.add("counit-weak-multiplicative-2");
    Tally t1(first), t2(second);
    for (Index y = 0; y < n; ++y) {
      const Mat<S> dy = unflatten<S>(h.coalgebra().comult().col(y), n, n);
      const Mat<S> m1 = e * dy * e;
      const Mat<S> m2 = e * dy.transpose() * e;
      for (Index x = 0; x < n; ++x) {
        const Vec<S> xy = h.algebra().product(x, y);
        for (Index z = 0; z < n; ++z) {
          const S xyz = xy.dot(e.col(z));
          t1.scalar({{"x", x}, {"y", y}, {"z", z}}, xyz - m1(x, z));
          t2.scalar({{"x", x}, {"y", y}, {"z", z}}, xyz - m2(x, z));
        }
      }
    }
  }
  {
    const Vec<S> d1 = h.delta(h.one());
    const Vec<S> lhs = h.coalgebra().comult2() * h.one();
    const Vec<S> left = tensor(d1, h.one());
    const Vec<S> right = tensor(h.one(), d1);
    Tally(r.add("unit-weak-comultiplicative-1"))({}, lhs - tensor_mul(hh, h.algebra(), left, right));
    Tally(r.add("unit-weak-comultiplicative-2"))({}, lhs - tensor_mul(hh, h.algebra(), right, left));
  }
  return r;
}

/// Pi^L(h) = eps(1_1 h) 1_2.
template <class S>
Mat<S> target_map(const Bialgebra<S>& h) {
  const Mat<S> u = unflatten<S>(h.delta(h.one()), h.dim(), h.dim());
  return u.transpose() * counit_form(h);
}

/// Pi^R(h) = 1_1 eps(h 1_2).
template <class S>
Mat<S> source_map(const Bialgebra<S>& h) {
  const Mat<S> u = unflatten<S>(h.delta(h.one()), h.dim(), h.dim());
  return u * counit_form(h).transpose();
}

namespace detail {

template <class S>
void check_antipode_columns(Report& r, const std::string& axiom, const Mat<S>& lhs, const Mat<S>& rhs) {
  Tally t(r.add(axiom));
  for (Index i = 0; i < lhs.cols(); ++i) t({{"x", i}}, lhs.col(i) - rhs.col(i));
}

}  // namespace detail

template <class S>
Report check_hopf(const Bialgebra<S>& h) {
  Report r = check_bialgebra(h);
  r.check = "hopf";
  if (!h.has_antipode()) {
    r.assert_that("antipode", false, "no antipode given");
    return r;
  }
  const auto& c = h.coalgebra();
  const auto& a = h.algebra();
  const Mat<S> unit = convolution_unit(c, a);
  detail::check_antipode_columns(r, "antipode-left", convolve(c, a, h.antipode(), h.id()), unit);
  detail::check_antipode_columns(r, "antipode-right", convolve(c, a, h.id(), h.antipode()), unit);
  return r;
}

namespace detail {

template <class S>
void check_weak_antipode(Report& r, const Bialgebra<S>& h, const Mat<S>& s) {
  const auto& c = h.coalgebra();
  const auto& a = h.algebra();
  const Mat<S> s_id = convolve(c, a, s, h.id());
  check_antipode_columns(r, "antipode-target", convolve(c, a, h.id(), s), target_map(h));
  check_antipode_columns(r, "antipode-source", s_id, source_map(h));
  check_antipode_columns(r, "antipode-triple", convolve(c, a, s_id, s), s);
}

}  // namespace detail

template <class S>
Report check_weak_hopf(const Bialgebra<S>& h) {
  Report r = check_weak_bialgebra(h);
  r.check = "weak-hopf";
  if (!h.has_antipode()) {
    r.assert_that("antipode", false, "no antipode given");
    return r;
  }
  detail::check_weak_antipode(r, h, h.antipode());
  return r;
}

/// Solves the convolution-inverse equations for S. For a bialgebra these are
/// S*id = id*S = u eps; for a weak bialgebra id*S = Pi^L and S*id = Pi^R,
/// after which a solution S' is corrected to S'*id*S', which satisfies all
/// three weak antipode axioms. Returns nullopt when no antipode exists.
template <class S>
std::optional<Mat<S>> compute_antipode(const Bialgebra<S>& h) {
  const bool ordinary = check_bialgebra(h).passed();
  if (!ordinary && !check_weak_bialgebra(h).passed())
    throw ValidationError("compute_antipode: " + h.name() + " is not a weak bialgebra", check_weak_bialgebra(h));

  const Index n = h.dim();
  const Mat<S>& mu = h.algebra().mult();
  const Mat<S> rhs_left = ordinary ? convolution_unit(h.coalgebra(), h.algebra()) : source_map(h);   // S(x1)x2
  const Mat<S> rhs_right = ordinary ? convolution_unit(h.coalgebra(), h.algebra()) : target_map(h);  // x1S(x2)

  // Unknown S(c, a) sits at index a*n + c.
  Mat<S> sys = zeros<S>(h.field(), 2 * n * n, n * n);
  Vec<S> rhs(2 * n * n);
  for (Index i = 0; i < n; ++i) {
    const Mat<S> x = unflatten<S>(h.coalgebra().comult().col(i), n, n);
    for (Index k = 0; k < n; ++k) {
      const Index row_l = i * n + k;
      const Index row_r = n * n + i * n + k;
      rhs(row_l) = rhs_left(k, i);
      rhs(row_r) = rhs_right(k, i);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          if (x(a, b).is_zero()) continue;
          for (Index c = 0; c < n; ++c) {
            sys(row_l, a * n + c) += x(a, b) * mu(k, c * n + b);
            sys(row_r, b * n + c) += x(a, b) * mu(k, a * n + c);
          }
        }
    }
  }
  const auto sol = solve_linear(sys, rhs);
  if (!sol.consistent()) return std::nullopt;
  Mat<S> s(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index c = 0; c < n; ++c) s(c, a) = (*sol.particular)(a * n + c);

  Report r("antipode", h.name());
  if (ordinary) {
    detail::check_antipode_columns(r, "antipode-left", convolve(h.coalgebra(), h.algebra(), s, h.id()), rhs_left);
    detail::check_antipode_columns(r, "antipode-right", convolve(h.coalgebra(), h.algebra(), h.id(), s), rhs_right);
  } else {
    const Mat<S> s_id = convolve(h.coalgebra(), h.algebra(), s, h.id());
    s = convolve(h.coalgebra(), h.algebra(), s_id, s);
    detail::check_weak_antipode(r, h, s);
  }
  if (!r.passed()) return std::nullopt;
  return s;
}

template <class S>
struct TargetSource {
  Mat<S> pi_l;
  Mat<S> pi_r;
  Report checks;  // (W1)-(W4), plus (W5)-(W6) when an antipode is present
};

/// Target and source maps together with a verification of their standard
/// identities. Identities that fail are reported, not assumed.
template <class S>
TargetSource<S> target_source(const Bialgebra<S>& h) {
  if (const Report wb = check_weak_bialgebra(h); !wb.passed())
    throw ValidationError("target_source: " + h.name() + " fails the weak bialgebra axioms", wb);
  const Index n = h.dim();
  const auto& alg = h.algebra();
  TargetSource<S> out{target_map(h), source_map(h), Report("target-source", h.name())};
  const Mat<S>& pl = out.pi_l;
  const Mat<S>& pr = out.pi_r;
  Report& r = out.checks;
  const FinAlgebra<S> hh = tensor_algebra(alg, alg);
  const Vec<S> d1 = h.delta(h.one());

  {
    Tally t(r.add("W1"));
    for (Index x = 0; x < n; ++x) {
      t({{"x", x}}, (pl * pl).col(x) - pl.col(x));
      t({{"x", x}}, (pr * pr).col(x) - pr.col(x));
    }
  }
  {
    Tally t(r.add("W2"));
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const Vec<S> ex = h.basis(x), ey = h.basis(y);
        t({{"x", x}, {"y", y}}, pl * alg.mul(pl * ex, ey) - alg.mul(pl * ex, pl * ey));
        t({{"x", x}, {"y", y}}, pr * alg.mul(ex, pr * ey) - alg.mul(pr * ex, pr * ey));
      }
  }
  {
    Tally t(r.add("W3"));
    for (Index x = 0; x < n; ++x) {
      const Vec<S> lx = pl.col(x), rx = pr.col(x);
      t({{"x", x}}, h.delta(lx) - hh.mul(d1, tensor(lx, h.one())));
      t({{"x", x}}, h.delta(rx) - hh.mul(tensor(h.one(), rx), d1));
    }
  }
  {
    Tally t(r.add("W4"));
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const Vec<S> ex = h.basis(x), ey = h.basis(y);
        const S xy = h.eps(alg.product(x, y));
        t.scalar({{"x", x}, {"y", y}}, h.eps(alg.mul(pr * ex, ey)) - xy);
        t.scalar({{"x", x}, {"y", y}}, h.eps(alg.mul(ex, pl * ey)) - xy);
      }
  }
  if (!h.has_antipode()) {
    r.skip("W5", "no antipode");
    r.skip("W6", "no antipode");
    return out;
  }
  const Mat<S>& s = h.antipode();
  {
    Tally t(r.add("W5"));
    const Mat<S> a1 = pl * pr, a2 = pl * s, a3 = s * pr;
    const Mat<S> b1 = pr * pl, b2 = pr * s, b3 = s * pl;
    for (Index x = 0; x < n; ++x) {
      t({{"x", x}}, a1.col(x) - a2.col(x));
      t({{"x", x}}, a2.col(x) - a3.col(x));
      t({{"x", x}}, b1.col(x) - b2.col(x));
      t({{"x", x}}, b2.col(x) - b3.col(x));
    }
  }
  {
    Tally t(r.add("W6"));
    const Mat<S> id = h.id();
    for (Index x = 0; x < n; ++x) {
      const Vec<S> ex = h.basis(x);
      const Vec<S> dx = h.delta(ex);
      t({{"x", x}}, apply_tensor<S>(id, pr, dx) - apply_tensor<S>(id, s, hh.mul(tensor(ex, h.one()), d1)));
      t({{"x", x}}, apply_tensor<S>(pl, id, dx) - apply_tensor<S>(s, id, hh.mul(d1, tensor(h.one(), ex))));
    }
  }
  return out;
}

template <class S>
struct Subalgebra {
  FinAlgebra<S> algebra;
  Mat<S> embedding;  // columns: the chosen basis of the image, in host coordinates
};

/// The image of `op` as a subalgebra of `a`. The basis is the set of pivot
/// columns of `op`; a unit is induced when the image has one.
template <class S>
Subalgebra<S> subalgebra_image(const Mat<S>& op, const FinAlgebra<S>& a, std::string name = {}) {
  if (op.rows() != a.dim() || op.cols() != a.dim()) throw DimensionError("subalgebra_image: operator has wrong shape");
  if (name.empty()) name = "im(" + a.name() + ")";
  const Echelon<S> ech = row_reduce<S>(op);
  const Index r = ech.rank();
  Mat<S> basis(a.dim(), r);
  std::vector<std::string> labels;
  for (Index s = 0; s < r; ++s) {
    const Index p = ech.pivots[static_cast<std::size_t>(s)];
    basis.col(s) = op.col(p);
    Index hit = -1;
    for (Index k = 0; k < a.dim(); ++k) {
      if (equal(basis.col(s), a.basis(k))) hit = k;
    }
    labels.push_back(hit >= 0 ? a.labels()[static_cast<std::size_t>(hit)] : "im(" + a.labels()[static_cast<std::size_t>(p)] + ")");
  }

  Report closure("subalgebra", name);
  Tally t(closure.add("closure"));
  Mat<S> mult = zeros<S>(a.field(), r, r * r);
  for (Index s = 0; s < r; ++s)
    for (Index u = 0; u < r; ++u) {
      const Vec<S> p = a.mul(basis.col(s), basis.col(u));
      const auto sol = solve_linear(basis, p);
      if (!sol.consistent()) {
        t({{"s", s}, {"t", u}}, p);  // witness delta is the offending product
        continue;
      }
      t({{"s", s}, {"t", u}}, a.zero());
      mult.col(s * r + u) = *sol.particular;
    }
  if (!closure.passed()) throw ValidationError("subalgebra_image: image is not closed under multiplication", closure);

  std::optional<Vec<S>> unit;
  if (a.unital()) {
    if (auto sol = solve_linear(basis, a.one()); sol.consistent()) unit = *sol.particular;
  }
  if (!unit && r > 0) {
    // A unit of the image need not be the unit of the host.
    Mat<S> sys = zeros<S>(a.field(), 2 * r * a.dim(), r);
    Vec<S> rhs(2 * r * a.dim());
    for (Index u = 0; u < r; ++u) {
      rhs.segment(2 * u * a.dim(), a.dim()) = basis.col(u);
      rhs.segment((2 * u + 1) * a.dim(), a.dim()) = basis.col(u);
      for (Index s = 0; s < r; ++s) {
        sys.block(2 * u * a.dim(), s, a.dim(), 1) = a.mul(basis.col(s), basis.col(u));
        sys.block((2 * u + 1) * a.dim(), s, a.dim(), 1) = a.mul(basis.col(u), basis.col(s));
      }
    }
    if (auto sol = solve_linear(sys, rhs); sol.consistent()) unit = *sol.particular;
  }
  return {FinAlgebra<S>(std::move(name), a.field(), std::move(labels), std::move(mult), std::move(unit)), std::move(basis)};
}

/// Quantum commutativity tested two ways: the identity h_1 g Pi^R(h_2) = hg on
/// basis pairs, and centrality of the image of Pi^R. Throws std::logic_error
/// if the two verdicts disagree.
template <class S>
Report check_quantum_commutative(const Bialgebra<S>& h) {
  Report r("quantum-commutative", h.name());
  const Index n = h.dim();
  const auto& alg = h.algebra();
  const Mat<S> pr = source_map(h);
  {
    Tally t(r.add("elementwise"));
    for (Index x = 0; x < n; ++x) {
      const Mat<S> dx = unflatten<S>(h.delta(h.basis(x)), n, n);
      for (Index g = 0; g < n; ++g) {
        Vec<S> lhs = h.zero();
        for (Index a = 0; a < n; ++a)
          for (Index b = 0; b < n; ++b) {
            if (dx(a, b).is_zero()) continue;
            lhs += dx(a, b) * alg.mul(alg.product(a, g), pr.col(b));
          }
        t({{"h", x}, {"g", g}}, lhs - alg.product(x, g));
      }
    }
  }
  {
    Tally t(r.add("source-central"));
    const Mat<S> image = column_basis(pr);
    for (Index k = 0; k < image.cols(); ++k)
      for (Index i = 0; i < n; ++i) {
        const Vec<S> z = image.col(k);
        const Vec<S> e = h.basis(i);
        t({{"r", k}, {"x", i}}, alg.mul(z, e) - alg.mul(e, z));
      }
  }
  if (r.axioms[0].verdict != r.axioms[1].verdict)
    throw std::logic_error("quantum commutativity criteria disagree on " + h.name());
  return r;
}

template <class S>
bool is_quantum_commutative(const Bialgebra<S>& h) {
  return check_quantum_commutative(h).passed();
}

}  // namespace hopfrb

#endif  // HOPFRB_STRUCTURES_HPP
