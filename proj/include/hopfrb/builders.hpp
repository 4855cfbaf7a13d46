// Constructors for the standard example structures.
#ifndef HOPFRB_BUILDERS_HPP
#define HOPFRB_BUILDERS_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "hopfrb/algebra.hpp"

namespace hopfrb {

/// M_n with matrix-unit basis E11, E12, ..., row-major.
template <class S>
FinAlgebra<S> matrix_algebra(const FieldSpec& f, Index n, std::string name = {}) {
  if (name.empty()) name = "mat" + std::to_string(n);
  const Index d = n * n;
  Mat<S> mult = zeros<S>(f, d, d * d);
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l) mult(i * n + l, (i * n + j) * d + (j * n + l)) = scalar<S>(f, 1);
  Vec<S> unit = zero_vec<S>(f, d);
  for (Index i = 0; i < n; ++i) unit(i * n + i) = scalar<S>(f, 1);
  return FinAlgebra<S>(std::move(name), f, std::move(labels), std::move(mult), std::move(unit));
}

/// k[x]/(x^2) on the basis {1, x}.
template <class S>
FinAlgebra<S> dual_numbers(const FieldSpec& f, std::string name = "kx-mod-x2") {
  Mat<S> mult = zeros<S>(f, 2, 4);
  mult(0, 0) = scalar<S>(f, 1);  // 1*1
  mult(1, 1) = scalar<S>(f, 1);  // 1*x
  mult(1, 2) = scalar<S>(f, 1);  // x*1
  return FinAlgebra<S>(std::move(name), f, {"1", "x"}, std::move(mult), make_vec<S>(f, {1, 0}));
}

/// Group given by its multiplication table; element 0 is the identity.
struct FiniteGroup {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;

  int size() const { return static_cast<int>(labels.size()); }
  int inverse(int g) const {
    for (int h = 0; h < size(); ++h) {
      if (table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == 0) return h;
    }
    throw Error("group table has no inverse");
  }
};

inline FiniteGroup cyclic_group(int n) {
  FiniteGroup g;
  for (int i = 0; i < n; ++i) g.labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i));
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return g;
}

/// S3 as permutations of {0,1,2} in lexicographic order, with the table
/// generated by composition (p*q)(x) = p(q(x)).
inline FiniteGroup symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g;
  for (const auto& q : perms) g.labels.push_back("s" + std::to_string(q[0] + 1) + std::to_string(q[1] + 1) + std::to_string(q[2] + 1));
  g.table.assign(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[static_cast<std::size_t>(x)] = perms[i][static_cast<std::size_t>(perms[j][static_cast<std::size_t>(x)])];
      g.table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

/// kG with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
template <class S>
Bialgebra<S> group_algebra(const FieldSpec& f, const FiniteGroup& g, std::string name) {
  const Index n = g.size();
  Mat<S> mult = zeros<S>(f, n, n * n);
  Mat<S> comult = zeros<S>(f, n * n, n);
  Mat<S> anti = zeros<S>(f, n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) mult(g.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], i * n + j) = scalar<S>(f, 1);
    comult(i * n + i, i) = scalar<S>(f, 1);
    anti(g.inverse(static_cast<int>(i)), i) = scalar<S>(f, 1);
  }
  FinAlgebra<S> a(name, f, g.labels, std::move(mult), unit_vec<S>(f, n, 0));
  FinCoalgebra<S> c(name, f, g.labels, std::move(comult), Vec<S>::Constant(n, scalar<S>(f, 1)));
  return Bialgebra<S>(std::move(a), std::move(c), std::move(anti));
}

/// k^G: basis of point functions delta_x, pointwise product,
/// Delta(delta_x) = sum_{ab=x} delta_a (x) delta_b.
template <class S>
Bialgebra<S> dual_group_algebra(const FieldSpec& f, const FiniteGroup& g, std::string name) {
  const Index n = g.size();
  Mat<S> mult = zeros<S>(f, n, n * n);
  Mat<S> comult = zeros<S>(f, n * n, n);
  Mat<S> anti = zeros<S>(f, n, n);
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) {
    labels.push_back("d" + g.labels[static_cast<std::size_t>(i)]);
    mult(i, i * n + i) = scalar<S>(f, 1);
    anti(g.inverse(static_cast<int>(i)), i) = scalar<S>(f, 1);
    for (Index j = 0; j < n; ++j) comult(i * n + j, g.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) = scalar<S>(f, 1);
  }
  FinAlgebra<S> a(name, f, labels, std::move(mult), Vec<S>::Constant(n, scalar<S>(f, 1)));
  FinCoalgebra<S> c(name, f, labels, std::move(comult), unit_vec<S>(f, n, 0));
  return Bialgebra<S>(std::move(a), std::move(c), std::move(anti));
}

/// Sweedler's 4-dimensional Hopf algebra on {1, g, x, gx}:
/// g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x, S(x) = -gx.
template <class S>
Bialgebra<S> sweedler_h4(const FieldSpec& f, std::string name = "sweedler-h4") {
  // g^a x^b has index a + 2b.
  Mat<S> mult = zeros<S>(f, 4, 16);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          if (b + d == 2) continue;
          const int sign = (b * c) % 2 == 0 ? 1 : -1;
          mult((a + c) % 2 + 2 * (b + d), (a + 2 * b) * 4 + (c + 2 * d)) = scalar<S>(f, sign);
        }
  Mat<S> comult = zeros<S>(f, 16, 4);
  comult(0 * 4 + 0, 0) = scalar<S>(f, 1);  // 1 (x) 1
  comult(1 * 4 + 1, 1) = scalar<S>(f, 1);  // g (x) g
  comult(2 * 4 + 0, 2) = scalar<S>(f, 1);  // x (x) 1
  comult(1 * 4 + 2, 2) = scalar<S>(f, 1);  // g (x) x
  comult(3 * 4 + 1, 3) = scalar<S>(f, 1);  // gx (x) g
  comult(0 * 4 + 3, 3) = scalar<S>(f, 1);  // 1 (x) gx
  Mat<S> anti = zeros<S>(f, 4, 4);
  anti(0, 0) = scalar<S>(f, 1);
  anti(1, 1) = scalar<S>(f, 1);
  anti(3, 2) = scalar<S>(f, -1);
  anti(2, 3) = scalar<S>(f, 1);
  const std::vector<std::string> labels{"1", "g", "x", "gx"};
  FinAlgebra<S> alg(name, f, labels, std::move(mult), make_vec<S>(f, {1, 0, 0, 0}));
  FinCoalgebra<S> co(name, f, labels, std::move(comult), make_vec<S>(f, {1, 1, 0, 0}));
  return Bialgebra<S>(std::move(alg), std::move(co), std::move(anti));
}

/// The one-dimensional Hopf algebra k.
template <class S>
Bialgebra<S> trivial_hopf(const FieldSpec& f, std::string name = "trivial-k") {
  FinAlgebra<S> a(name, f, {"1"}, make_mat<S>(f, {{1}}), make_vec<S>(f, {1}));
  FinCoalgebra<S> c(name, f, {"1"}, make_mat<S>(f, {{1}}), make_vec<S>(f, {1}));
  return Bialgebra<S>(std::move(a), std::move(c), make_mat<S>(f, {{1}}));
}

/// k e1 (+) k e2 with orthogonal idempotents, Delta(e_i) = e_i (x) e_i,
/// eps(e_i) = 1, S = id.
template <class S>
Bialgebra<S> weak_two_point(const FieldSpec& f, std::string name = "weak-two-point") {
  Mat<S> mult = zeros<S>(f, 2, 4);
  mult(0, 0) = scalar<S>(f, 1);
  mult(1, 3) = scalar<S>(f, 1);
  Mat<S> comult = zeros<S>(f, 4, 2);
  comult(0, 0) = scalar<S>(f, 1);
  comult(3, 1) = scalar<S>(f, 1);
  const std::vector<std::string> labels{"e1", "e2"};
  FinAlgebra<S> a(name, f, labels, std::move(mult), make_vec<S>(f, {1, 1}));
  FinCoalgebra<S> c(name, f, labels, std::move(comult), make_vec<S>(f, {1, 1}));
  return Bialgebra<S>(std::move(a), std::move(c), identity<S>(f, 2));
}

/// Groupoid algebra of the pair groupoid on n points: basis e_ij,
/// e_ij e_kl = delta_jk e_il, Delta(e_ij) = e_ij (x) e_ij, eps = 1, S(e_ij) = e_ji.
template <class S>
Bialgebra<S> pair_groupoid(const FieldSpec& f, Index n = 2, std::string name = "weak-pair-groupoid") {
  FinAlgebra<S> m = matrix_algebra<S>(f, n);
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  const Index d = n * n;
  Mat<S> comult = zeros<S>(f, d * d, d);
  Mat<S> anti = zeros<S>(f, d, d);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      comult((i * n + j) * d + (i * n + j), i * n + j) = scalar<S>(f, 1);
      anti(j * n + i, i * n + j) = scalar<S>(f, 1);
    }
  FinAlgebra<S> a(name, f, labels, m.mult(), m.unit());
  FinCoalgebra<S> c(name, f, labels, std::move(comult), Vec<S>::Constant(d, scalar<S>(f, 1)));
  return Bialgebra<S>(std::move(a), std::move(c), std::move(anti));
}

}  // namespace hopfrb

#endif  // HOPFRB_BUILDERS_HPP
