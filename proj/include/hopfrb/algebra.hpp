// Finite-dimensional algebras, coalgebras and (weak) bialgebras given by
// structure constants.
//
// Structure constants are stored as the matrices of the structure maps:
//   mult    n x n^2   column i*n+j holds e_i e_j
//   comult  n^2 x n   column i holds Delta(e_i)
//   counit  length n
#ifndef HOPFRB_ALGEBRA_HPP
#define HOPFRB_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfrb/linalg.hpp"

namespace hopfrb {

namespace detail {

inline std::vector<std::string> default_labels(Index n, const std::string& prefix = "e") {
  std::vector<std::string> out;
  for (Index i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace detail

/// u (x) v in the lexicographic tensor basis.
template <class DA, class DB>
Vec<typename DA::Scalar> tensor(const Eigen::MatrixBase<DA>& u, const Eigen::MatrixBase<DB>& v) {
  using S = typename DA::Scalar;
  Vec<S> out(u.size() * v.size());
  for (Index i = 0; i < u.size(); ++i) out.segment(i * v.size(), v.size()) = u(i) * v;
  return out;
}

template <class S>
class FinAlgebra {
 public:
  FinAlgebra() = default;
  FinAlgebra(std::string name, FieldSpec field, std::vector<std::string> labels, Mat<S> mult,
             std::optional<Vec<S>> unit = std::nullopt)
      : name_(std::move(name)), field_(field), labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)) {
    const Index n = static_cast<Index>(labels_.size());
    if (mult_.rows() != n || mult_.cols() != n * n)
      throw DimensionError("algebra " + name_ + ": multiplication table does not match dimension");
    if (unit_ && unit_->size() != n) throw DimensionError("algebra " + name_ + ": unit has wrong length");
    if (!ScalarTraits<S>::supports(field_)) throw FieldError("algebra " + name_ + ": scalar type does not match field");
    bind(mult_, field_.tag());
    field_tag(mult_, field_.tag());
    if (unit_) {
      bind(*unit_, field_.tag());
      field_tag(*unit_, field_.tag());
    }
  }

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  Index dim() const { return static_cast<Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Mat<S>& mult() const { return mult_; }
  bool unital() const { return unit_.has_value(); }
  const std::optional<Vec<S>>& unit() const { return unit_; }
  /// Coordinates of 1; throws if nonunital.
  const Vec<S>& one() const {
    if (!unit_) throw Error("algebra " + name_ + " is nonunital");
    return *unit_;
  }

  Vec<S> basis(Index i) const { return unit_vec<S>(field_, dim(), i); }
  Vec<S> zero() const { return zero_vec<S>(field_, dim()); }
  S scalar(long num, long den = 1) const { return hopfrb::scalar<S>(field_, num, den); }

  /// Matrix of y -> e_i y.
  auto left(Index i) const { return mult_.middleCols(i * dim(), dim()); }
  /// e_i e_j.
  auto product(Index i, Index j) const { return mult_.col(i * dim() + j); }

  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const {
    Vec<S> out = zero();
    for (Index i = 0; i < dim(); ++i) {
      if (!x(i).is_zero()) out += x(i) * (left(i) * y);
    }
    return out;
  }

  /// Matrix of y -> x y.
  Mat<S> left_mult(const Vec<S>& x) const {
    Mat<S> out = zeros<S>(field_, dim(), dim());
    for (Index i = 0; i < dim(); ++i) {
      if (!x(i).is_zero()) out += x(i) * left(i);
    }
    return out;
  }

  /// Matrix of x -> x y.
  Mat<S> right_mult(const Vec<S>& y) const {
    Mat<S> out(dim(), dim());
    for (Index i = 0; i < dim(); ++i) out.col(i) = left(i) * y;
    return out;
  }

  /// Index of the basis vector labelled `label`, or -1.
  Index find_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return static_cast<Index>(i);
    }
    return -1;
  }

  FinAlgebra renamed(std::string name) const {
    FinAlgebra out = *this;
    out.name_ = std::move(name);
    return out;
  }

 private:
  std::string name_;
  FieldSpec field_;
  std::vector<std::string> labels_;
  Mat<S> mult_;
  std::optional<Vec<S>> unit_;
};

template <class S>
class FinCoalgebra {
 public:
  FinCoalgebra() = default;
  FinCoalgebra(std::string name, FieldSpec field, std::vector<std::string> labels, Mat<S> comult, Vec<S> counit)
      : name_(std::move(name)), field_(field), labels_(std::move(labels)), comult_(std::move(comult)), counit_(std::move(counit)) {
    const Index n = static_cast<Index>(labels_.size());
    if (comult_.rows() != n * n || comult_.cols() != n)
      throw DimensionError("coalgebra " + name_ + ": comultiplication table does not match dimension");
    if (counit_.size() != n) throw DimensionError("coalgebra " + name_ + ": counit has wrong length");
    bind(comult_, field_.tag());
    bind(counit_, field_.tag());
    field_tag(counit_, field_tag(comult_, field_.tag()));
  }

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  Index dim() const { return static_cast<Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Mat<S>& comult() const { return comult_; }
  const Vec<S>& counit() const { return counit_; }

  Vec<S> coproduct(const Vec<S>& x) const { return comult_ * x; }
  S eps(const Vec<S>& x) const { return counit_.dot(x); }
  /// Delta^2 = (Delta (x) id) Delta as an n^3 x n matrix.
  Mat<S> comult2() const {
    Mat<S> out(dim() * dim() * dim(), dim());
    const Mat<S> id = identity<S>(field_, dim());
    for (Index i = 0; i < dim(); ++i) out.col(i) = apply_tensor<S>(comult_, id, comult_.col(i));
    return out;
  }

 private:
  std::string name_;
  FieldSpec field_;
  std::vector<std::string> labels_;
  Mat<S> comult_;
  Vec<S> counit_;
};

/// An algebra and a coalgebra on one basis, with an optional antipode.
/// Whether it is a bialgebra, a weak bialgebra, Hopf or weak Hopf is decided
/// by the checkers, never assumed.
template <class S>
class Bialgebra {
 public:
  Bialgebra() = default;
  Bialgebra(FinAlgebra<S> algebra, FinCoalgebra<S> coalgebra, std::optional<Mat<S>> antipode = std::nullopt)
      : alg_(std::move(algebra)), coalg_(std::move(coalgebra)), antipode_(std::move(antipode)) {
    if (alg_.dim() != coalg_.dim()) throw DimensionError("bialgebra " + alg_.name() + ": algebra and coalgebra dimensions differ");
    if (!(alg_.field() == coalg_.field())) throw FieldError("bialgebra " + alg_.name() + ": algebra and coalgebra fields differ");
    if (!alg_.unital()) throw Error("bialgebra " + alg_.name() + ": algebra must be unital");
    if (antipode_) {
      if (antipode_->rows() != dim() || antipode_->cols() != dim())
        throw DimensionError("bialgebra " + alg_.name() + ": antipode has wrong shape");
      bind(*antipode_, field().tag());
    }
  }

  const std::string& name() const { return alg_.name(); }
  const FieldSpec& field() const { return alg_.field(); }
  Index dim() const { return alg_.dim(); }
  const std::vector<std::string>& labels() const { return alg_.labels(); }
  const FinAlgebra<S>& algebra() const { return alg_; }
  const FinCoalgebra<S>& coalgebra() const { return coalg_; }
  bool has_antipode() const { return antipode_.has_value(); }
  const Mat<S>& antipode() const {
    if (!antipode_) throw Error("bialgebra " + name() + " has no antipode");
    return *antipode_;
  }
  Bialgebra with_antipode(Mat<S> s) const { return Bialgebra(alg_, coalg_, std::move(s)); }

  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const { return alg_.mul(x, y); }
  Vec<S> delta(const Vec<S>& x) const { return coalg_.coproduct(x); }
  S eps(const Vec<S>& x) const { return coalg_.eps(x); }
  const Vec<S>& one() const { return alg_.one(); }
  Vec<S> basis(Index i) const { return alg_.basis(i); }
  Vec<S> zero() const { return alg_.zero(); }
  Mat<S> id() const { return identity<S>(field(), dim()); }
  S scalar(long num, long den = 1) const { return alg_.scalar(num, den); }

 private:
  FinAlgebra<S> alg_;
  FinCoalgebra<S> coalg_;
  std::optional<Mat<S>> antipode_;
};

template <class S>
using WeakBialgebra = Bialgebra<S>;

/// An element of the dual of a coalgebra, in the dual basis.
template <class S>
struct Functional {
  std::string host;
  Vec<S> coords;

  S operator()(const Vec<S>& x) const { return coords.dot(x); }
};

template <class S>
Functional<S> make_functional(const FinCoalgebra<S>& c, Vec<S> coords) {
  if (coords.size() != c.dim()) throw DimensionError("functional length does not match " + c.name());
  bind(coords, c.field().tag());
  return {c.name(), std::move(coords)};
}

/// A (x) B with componentwise product and unit 1 (x) 1 (when both are unital).
template <class S>
FinAlgebra<S> tensor_algebra(const FinAlgebra<S>& a, const FinAlgebra<S>& b) {
  if (!(a.field() == b.field())) throw FieldError("tensor_algebra: field mismatch");
  const Index na = a.dim(), nb = b.dim(), n = na * nb;
  Mat<S> mult(n, n * n);
  for (Index i1 = 0; i1 < na; ++i1)
    for (Index i2 = 0; i2 < nb; ++i2)
      for (Index j1 = 0; j1 < na; ++j1)
        for (Index j2 = 0; j2 < nb; ++j2)
          mult.col((i1 * nb + i2) * n + (j1 * nb + j2)) = tensor(a.product(i1, j1), b.product(i2, j2));
  std::vector<std::string> labels;
  for (const auto& x : a.labels())
    for (const auto& y : b.labels()) labels.push_back(x + "*" + y);
  std::optional<Vec<S>> unit;
  if (a.unital() && b.unital()) unit = tensor(a.one(), b.one());
  return FinAlgebra<S>(a.name() + "(x)" + b.name(), a.field(), std::move(labels), std::move(mult), std::move(unit));
}

/// x y in A (x) B without materializing the product table; zero coordinates
/// are skipped, so sparse elements of large tensor powers stay cheap.
template <class S>
Vec<S> tensor_mul(const FinAlgebra<S>& a, const FinAlgebra<S>& b, const Vec<S>& x, const Vec<S>& y) {
  const Index na = a.dim(), nb = b.dim();
  if (x.size() != na * nb || y.size() != na * nb) throw DimensionError("tensor_mul: operand size mismatch");
  Vec<S> out = zero_vec<S>(a.field(), na * nb);
  for (Index i = 0; i < na * nb; ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < na * nb; ++j) {
      if (y(j).is_zero()) continue;
      out += (x(i) * y(j)) * tensor(a.product(i / nb, j / nb), b.product(i % nb, j % nb));
    }
  }
  return out;
}

/// Convolution of functionals: (f*g)(x) = f(x_1) g(x_2).
template <class S>
Functional<S> convolve(const FinCoalgebra<S>& c, const Functional<S>& f, const Functional<S>& g) {
  if (f.host != c.name() || g.host != c.name()) throw Error("convolve: functionals live on different coalgebras");
  return {c.name(), c.comult().transpose() * tensor(f.coords, g.coords)};
}

/// Convolution of linear maps C -> A given as dim(A) x dim(C) matrices.
template <class S>
Mat<S> convolve(const FinCoalgebra<S>& c, const FinAlgebra<S>& a, const Mat<S>& f, const Mat<S>& g) {
  if (f.cols() != c.dim() || g.cols() != c.dim() || f.rows() != a.dim() || g.rows() != a.dim())
    throw DimensionError("convolve: maps have wrong shape");
  Mat<S> out(a.dim(), c.dim());
  for (Index i = 0; i < c.dim(); ++i) out.col(i) = a.mult() * apply_tensor<S>(f, g, c.comult().col(i));
  return out;
}

/// Unit of the convolution algebra Hom(C, A): x -> eps(x) 1_A.
template <class S>
Mat<S> convolution_unit(const FinCoalgebra<S>& c, const FinAlgebra<S>& a) {
  return a.one() * c.counit().transpose();
}

/// The convolution algebra C^* on the dual basis delta_i: mult = comult^T,
/// unit = counit.
template <class S>
FinAlgebra<S> dual_algebra(const FinCoalgebra<S>& c) {
  std::vector<std::string> labels;
  for (const auto& l : c.labels()) labels.push_back("delta_" + l);
  return FinAlgebra<S>(c.name() + "*", c.field(), std::move(labels), c.comult().transpose(), c.counit());
}

/// E(a, j) = eps(e_a e_j).
template <class S>
Mat<S> counit_form(const Bialgebra<S>& h) {
  const Index n = h.dim();
  Mat<S> out(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index j = 0; j < n; ++j) out(a, j) = h.eps(h.algebra().product(a, j));
  return out;
}

/// Reshapes an element of V (x) W into its dim(V) x dim(W) coefficient matrix.
template <class S>
Mat<S> unflatten(const Vec<S>& x, Index rows, Index cols) {
  if (x.size() != rows * cols) throw DimensionError("unflatten: size mismatch");
  Mat<S> out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) out(i, j) = x(i * cols + j);
  return out;
}

}  // namespace hopfrb

#endif  // HOPFRB_ALGEBRA_HPP
