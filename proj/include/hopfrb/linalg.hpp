// Dense exact linear algebra over Rational / ModP.
//
// Tensor products use the lexicographic basis with the left factor major:
// e_i (x) f_j has index i * dim(F) + j.
#ifndef HOPFRB_LINALG_HPP
#define HOPFRB_LINALG_HPP

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "hopfrb/field.hpp"

namespace hopfrb {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using RowMajorMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

template <class A, class B>
bool equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

/// Common modulus tag of all entries; throws FieldError on a mix.
template <class Derived>
std::uint64_t field_tag(const Eigen::MatrixBase<Derived>& m, std::uint64_t tag = 0) {
  using S = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const auto t = ScalarTraits<S>::tag(m(i, j));
      if (t == 0) continue;
      if (tag != 0 && t != tag) throw FieldError("field mismatch between operands");
      tag = t;
    }
  }
  return tag;
}

/// Attaches modulus `tag` to unbound entries (identity for Q).
template <class S, int R, int C, int O>
void bind(Eigen::Matrix<S, R, C, O>& m, std::uint64_t tag) {
  if (tag == 0) return;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) m(i, j) = ScalarTraits<S>::rebind(m(i, j), tag);
  }
}

template <class S>
Mat<S> zeros(const FieldSpec& f, Index rows, Index cols) {
  return Mat<S>::Constant(rows, cols, scalar<S>(f, 0));
}

template <class S>
Vec<S> zero_vec(const FieldSpec& f, Index n) {
  return Vec<S>::Constant(n, scalar<S>(f, 0));
}

template <class S>
Mat<S> identity(const FieldSpec& f, Index n) {
  Mat<S> m = zeros<S>(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = scalar<S>(f, 1);
  return m;
}

template <class S>
Vec<S> unit_vec(const FieldSpec& f, Index n, Index i) {
  Vec<S> v = zero_vec<S>(f, n);
  v(i) = scalar<S>(f, 1);
  return v;
}

template <class S>
Vec<S> make_vec(const FieldSpec& f, std::initializer_list<long> entries) {
  Vec<S> v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = scalar<S>(f, e);
  return v;
}

template <class S>
Mat<S> make_mat(const FieldSpec& f, std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Index>(rows.size());
  const auto c = r == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
  Mat<S> m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw DimensionError("ragged matrix literal");
    Index j = 0;
    for (long e : row) m(i, j++) = scalar<S>(f, e);
    ++i;
  }
  return m;
}

/// Kronecker product A (x) B.
template <class DA, class DB>
Mat<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  Mat<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// (A (x) B) x for x in the tensor product of the column spaces, computed as
/// vec(A X B^T) without materializing the Kronecker product.
template <class S, class DA, class DB, class DX>
Vec<S> apply_tensor(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                    const Eigen::MatrixBase<DX>& x) {
  if (x.size() != a.cols() * b.cols()) throw DimensionError("apply_tensor: operand size mismatch");
  RowMajorMat<S> xm(a.cols(), b.cols());
  for (Index i = 0; i < a.cols(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) xm(i, j) = x(i * b.cols() + j);
  }
  const RowMajorMat<S> ym = a * xm * b.transpose();
  return Eigen::Map<const Vec<S>>(ym.data(), ym.size());
}

/// Reduced row echelon form together with its pivot columns.
template <class S>
struct Echelon {
  Mat<S> rref;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

template <class S>
void integralize_row(Mat<S>&, Index) {}

// Scales a rational row by the lcm of its denominators.
inline void integralize_row(Mat<Rational>& m, Index r) {
  mpz_class l = 1;
  for (Index j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, j).get().get_den_mpz_t());
  if (l == 1) return;
  const Rational scale{mpq_class(l)};
  for (Index j = 0; j < m.cols(); ++j) m(r, j) *= scale;
}

}  // namespace detail

/// Fraction-free (Bareiss) forward elimination followed by normalization to
/// reduced row echelon form.
template <class S>
Echelon<S> row_reduce(Mat<S> a) {
  const auto tag = field_tag(a);
  const Index rows = a.rows();
  const Index cols = a.cols();
  for (Index r = 0; r < rows; ++r) detail::integralize_row(a, r);

  std::vector<Index> pivots;
  S prev = ScalarTraits<S>::rebind(S(1), tag);
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (!a(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) a.row(r).swap(a.row(pivot));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = S(0);
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }

  for (Index k = static_cast<Index>(pivots.size()) - 1; k >= 0; --k) {
    const Index pc = pivots[static_cast<std::size_t>(k)];
    const S inv = a(k, pc).inverse();
    a.row(k) *= inv;
    for (Index i = 0; i < k; ++i) {
      if (a(i, pc).is_zero()) continue;
      const S factor = a(i, pc);
      a.row(i) -= factor * a.row(k);
    }
  }
  for (Index i = static_cast<Index>(pivots.size()); i < rows; ++i) a.row(i).setConstant(S(0));
  bind(a, tag);
  return {std::move(a), std::move(pivots)};
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  return row_reduce<typename Derived::Scalar>(a).rank();
}

namespace detail {

template <class S>
std::vector<Vec<S>> kernel_from_rref(const Echelon<S>& e, Index cols, std::uint64_t tag) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) {
    if (p < cols) is_pivot[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Vec<S>> basis;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<S> v = Vec<S>::Constant(cols, S(0));
    v(f) = S(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      if (e.pivots[k] < cols) v(e.pivots[k]) = -e.rref(static_cast<Index>(k), f);
    }
    bind(v, tag);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Basis of {x : A x = 0}; its size is cols(A) - rank(A).
template <class Derived>
std::vector<Vec<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  const auto tag = field_tag(a);
  const Echelon<S> e = row_reduce<S>(a);
  return detail::kernel_from_rref(e, a.cols(), tag);
}

template <class S>
struct LinearSolution {
  std::optional<Vec<S>> particular;  // empty when the system is inconsistent
  std::vector<Vec<S>> nullspace;

  bool consistent() const { return particular.has_value(); }
};

/// Solves A x = b exactly. Every returned vector is verified by substitution.
template <class DA, class DB>
LinearSolution<typename DA::Scalar> solve_linear(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  if (b.cols() != 1 || b.rows() != a.rows()) throw DimensionError("solve_linear: right-hand side has wrong size");
  const auto tag = field_tag(b, field_tag(a));

  Mat<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const Echelon<S> e = row_reduce<S>(aug);

  LinearSolution<S> out;
  out.nullspace = detail::kernel_from_rref(e, a.cols(), tag);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return out;

  Vec<S> x = Vec<S>::Constant(a.cols(), S(0));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x(e.pivots[k]) = e.rref(static_cast<Index>(k), a.cols());
  bind(x, tag);

  if (!equal(a * x, b)) throw std::logic_error("solve_linear: particular solution failed substitution");
  for (const auto& v : out.nullspace) {
    if (!all_zero(a * v)) throw std::logic_error("solve_linear: kernel vector failed substitution");
  }
  out.particular = std::move(x);
  return out;
}

/// Columns of `a` at its pivot positions: a basis of the column space.
template <class Derived>
Mat<typename Derived::Scalar> column_basis(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  const Echelon<S> e = row_reduce<S>(a);
  Mat<S> out(a.rows(), e.rank());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.col(static_cast<Index>(k)) = a.col(e.pivots[k]);
  return out;
}

template <class S>
Mat<S> stack_columns(const std::vector<Vec<S>>& vs, Index rows) {
  Mat<S> out(rows, static_cast<Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) out.col(static_cast<Index>(k)) = vs[k];
  return out;
}

/// Whether every column of `v` lies in the column space of `basis`.
template <class DA, class DB>
bool in_span(const Eigen::MatrixBase<DA>& basis, const Eigen::MatrixBase<DB>& v) {
  using S = typename DA::Scalar;
  if (basis.cols() == 0) return all_zero(v);
  Mat<S> joined(basis.rows(), basis.cols() + v.cols());
  joined << basis, v;
  return rank(joined) == rank(basis);
}

template <class DA, class DB>
bool same_span(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return in_span(a, b) && in_span(b, a);
}

/// Whether the column space of `basis` is mapped into itself by `op`.
template <class DA, class DB>
bool is_invariant_subspace(const Eigen::MatrixBase<DA>& op, const Eigen::MatrixBase<DB>& basis) {
  using S = typename DA::Scalar;
  if (basis.cols() == 0) return true;
  const Mat<S> image = op * basis;
  return in_span(basis, image);
}

}  // namespace hopfrb

#endif  // HOPFRB_LINALG_HPP
