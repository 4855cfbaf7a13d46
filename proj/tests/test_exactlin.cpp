#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfrb/linalg.hpp"

using namespace hopfrb;

namespace {

const FieldSpec Q = FieldSpec::rational();

template <class S>
Mat<S> random_mat(const FieldSpec& f, Index r, Index c, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat<S> m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = scalar<S>(f, d(rng));
  return m;
}

// Independent oracle: reduced row echelon form by textbook Gauss-Jordan with
// division at every step (no fraction-free pass).
template <class S>
Index naive_rank(Mat<S> a) {
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.row(r).swap(a.row(p));
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const S f = a(i, c) / a(r, c);
      for (Index j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("rational scalars are canonical and format as documented") {
  CHECK(parse_scalar<Rational>(Q, "2/4").str() == "1/2");
  CHECK(parse_scalar<Rational>(Q, "3/-6").str() == "-1/2");
  CHECK(parse_scalar<Rational>(Q, " -7/3 ").str() == "-7/3");
  CHECK(parse_scalar<Rational>(Q, "3").str() == "3");
  CHECK(to_string(scalar<Rational>(Q, -4, 2)) == "-2");
  CHECK_THROWS_AS(parse_scalar<Rational>(Q, "1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar<Rational>(Q, "abc"), ParseError);
  CHECK_THROWS_AS(parse_scalar<Rational>(Q, "4 mod 7"), FieldError);
  CHECK_THROWS_AS(Rational(1).inverse() / Rational(0), FieldError);
}

TEST_CASE("prime field construction and literals") {
  CHECK_THROWS_AS(FieldSpec::prime(9), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(1), FieldError);
  const auto f7 = FieldSpec::prime(7);
  CHECK(to_string(parse_scalar<ModP>(f7, "4 mod 7")) == "4 mod 7");
  CHECK(to_string(parse_scalar<ModP>(f7, "-1")) == "6 mod 7");
  CHECK(to_string(parse_scalar<ModP>(f7, "1/2")) == "4 mod 7");
  CHECK_THROWS_AS(parse_scalar<ModP>(f7, "4 mod 5"), FieldError);
  CHECK_THROWS_AS(parse_scalar<ModP>(f7, "1/7"), FieldError);
  CHECK_THROWS_AS(scalar<ModP>(f7, 1, 14), FieldError);

  const auto f5 = FieldSpec::prime(5);
  CHECK_THROWS_AS(scalar<ModP>(f7, 1) + scalar<ModP>(f5, 1), FieldError);
  // Unbound integers adopt the modulus of the other operand.
  CHECK(ModP(8) == scalar<ModP>(f7, 1));
  CHECK(to_string(ModP(3) * scalar<ModP>(f7, 5)) == "1 mod 7");
}

TEST_CASE_TEMPLATE("field axioms on sampled triples", S, Rational, ModP) {
  const FieldSpec f = std::is_same_v<S, Rational> ? Q : FieldSpec::prime(11);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> d(-20, 20);
  auto draw = [&] { return scalar<S>(f, d(rng), std::is_same_v<S, Rational> ? (d(rng) % 7 == 0 ? 1 : std::abs(d(rng)) + 1) : 1); };
  for (int trial = 0; trial < 200; ++trial) {
    const S a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == scalar<S>(f, 0));
    if (!a.is_zero()) CHECK(a * a.inverse() == scalar<S>(f, 1));
  }
}

TEST_CASE("solve_linear: identity, zero map, rank-one system") {
  const Mat<Rational> id = identity<Rational>(Q, 2);
  const auto s1 = solve_linear(id, make_vec<Rational>(Q, {1, 0}));
  REQUIRE(s1.consistent());
  CHECK(equal(*s1.particular, make_vec<Rational>(Q, {1, 0})));
  CHECK(s1.nullspace.empty());

  const auto s2 = solve_linear(zeros<Rational>(Q, 2, 2), make_vec<Rational>(Q, {0, 0}));
  REQUIRE(s2.consistent());
  CHECK(all_zero(*s2.particular));
  CHECK(s2.nullspace.size() == 2);

  // Hand row-reduction: [[1,1],[2,2]] -> [[1,1],[0,0]], so x1 + x2 = 3 and the
  // kernel is spanned by (-1, 1).
  const Mat<Rational> a = make_mat<Rational>(Q, {{1, 1}, {2, 2}});
  const auto s3 = solve_linear(a, make_vec<Rational>(Q, {3, 6}));
  REQUIRE(s3.consistent());
  CHECK(equal(a * *s3.particular, make_vec<Rational>(Q, {3, 6})));
  REQUIRE(s3.nullspace.size() == 1);
  const Vec<Rational>& k = s3.nullspace[0];
  CHECK(k(0) == -k(1));
  CHECK(!k(0).is_zero());

  CHECK_FALSE(solve_linear(a, make_vec<Rational>(Q, {1, 0})).consistent());
  CHECK_THROWS_AS(solve_linear(a, make_vec<Rational>(Q, {1, 0, 0})), DimensionError);
}

TEST_CASE("solve_linear rejects mixed prime fields") {
  const auto f5 = FieldSpec::prime(5);
  const auto f7 = FieldSpec::prime(7);
  CHECK_THROWS_AS(solve_linear(identity<ModP>(f5, 2), make_vec<ModP>(f7, {1, 2})), FieldError);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(identity<Rational>(Q, 3)).empty());
  const auto z = kernel_basis(zeros<Rational>(Q, 3, 3));
  CHECK(z.size() == 3);
  CHECK(rank(stack_columns(z, 3)) == 3);

  const auto k = kernel_basis(make_mat<Rational>(Q, {{1, 2}, {2, 4}}));
  REQUIRE(k.size() == 1);
  // proportional to (2, -1)
  CHECK(k[0](0) * scalar<Rational>(Q, -1) == k[0](1) * scalar<Rational>(Q, 2));
}

TEST_CASE_TEMPLATE("kernel and solve properties on random matrices", S, Rational, ModP) {
  const FieldSpec f = std::is_same_v<S, Rational> ? Q : FieldSpec::prime(7);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dims(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const Index r = dims(rng), c = dims(rng);
    Mat<S> a = random_mat<S>(f, r, c, rng);
    if (trial % 3 == 0 && r > 1) a.row(r - 1) = a.row(0) + a.row(r - 2);
    const auto ker = kernel_basis(a);
    const Index rk = naive_rank<S>(a);
    CHECK(rank(a) == rk);
    CHECK(static_cast<Index>(ker.size()) == c - rk);
    for (const auto& v : ker) CHECK(all_zero(a * v));
    if (!ker.empty()) CHECK(rank(stack_columns(ker, c)) == static_cast<Index>(ker.size()));

    const Vec<S> x0 = random_mat<S>(f, c, 1, rng);
    const Vec<S> b = a * x0;
    const auto sol = solve_linear(a, b);
    REQUIRE(sol.consistent());
    CHECK(equal(a * *sol.particular, b));
  }
}

TEST_CASE("kron examples") {
  CHECK(equal(kron(identity<Rational>(Q, 2), identity<Rational>(Q, 3)), identity<Rational>(Q, 6)));
  const Mat<Rational> a = make_mat<Rational>(Q, {{1, 2}, {3, 4}});
  CHECK(all_zero(kron(a, zeros<Rational>(Q, 2, 2))));

  const Mat<Rational> swap = make_mat<Rational>(Q, {{0, 1}, {1, 0}});
  const Mat<Rational> two = make_mat<Rational>(Q, {{2, 0}, {0, 2}});
  const Vec<Rational> e1e1 = unit_vec<Rational>(Q, 4, 0);
  // e2 (x) e1 sits at index 1 * 2 + 0.
  CHECK(equal(kron(swap, two) * e1e1, make_vec<Rational>(Q, {0, 0, 2, 0})));
}

TEST_CASE("kron acts factorwise on all basis pairs; apply_tensor agrees") {
  std::mt19937_64 rng(3);
  const Mat<Rational> a = random_mat<Rational>(Q, 3, 2, rng);
  const Mat<Rational> b = random_mat<Rational>(Q, 2, 3, rng);
  const Mat<Rational> ab = kron(a, b);
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 3; ++j) {
      const Vec<Rational> u = unit_vec<Rational>(Q, 2, i);
      const Vec<Rational> v = unit_vec<Rational>(Q, 3, j);
      const Vec<Rational> uv = kron(u, v);
      const Vec<Rational> expect = kron(Mat<Rational>(a * u), Mat<Rational>(b * v));
      CHECK(equal(ab * uv, expect));
      CHECK(equal(apply_tensor<Rational>(a, b, uv), expect));
    }
  }
}

TEST_CASE("column space utilities") {
  const Mat<Rational> a = make_mat<Rational>(Q, {{1, 2, 0}, {0, 0, 1}, {1, 2, 1}});
  const Mat<Rational> cb = column_basis(a);
  CHECK(cb.cols() == 2);
  CHECK(same_span(cb, a));
  CHECK(in_span(cb, make_vec<Rational>(Q, {1, 1, 2})));
  CHECK_FALSE(in_span(cb, make_vec<Rational>(Q, {1, 0, 0})));
  const Mat<Rational> proj = make_mat<Rational>(Q, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(is_invariant_subspace(proj, unit_vec<Rational>(Q, 3, 0)));
  CHECK_FALSE(is_invariant_subspace(make_mat<Rational>(Q, {{0, 1}, {1, 0}}), unit_vec<Rational>(Q, 2, 0)));
}
