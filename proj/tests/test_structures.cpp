#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfrb/builders.hpp"
#include "hopfrb/structures.hpp"

using namespace hopfrb;
using Q = Rational;

namespace {

const FieldSpec QQ = FieldSpec::rational();

Vec<Q> v(std::initializer_list<long> xs) { return make_vec<Q>(QQ, xs); }

}  // namespace

TEST_CASE("M_2 multiplication table agrees with explicit 2x2 products") {
  const FinAlgebra<Q> m2 = matrix_algebra<Q>(QQ, 2);
  // Oracle: multiply the integer matrices E_ij directly.
  auto unit = [](int k) {
    Eigen::Matrix2i e = Eigen::Matrix2i::Zero();
    e(k / 2, k % 2) = 1;
    return e;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Eigen::Matrix2i p = unit(i) * unit(j);
      for (int k = 0; k < 4; ++k) CHECK(m2.product(i, j)(k) == Q(p(k / 2, k % 2)));
    }
  CHECK(check_algebra(m2).passed());
  CHECK(m2.labels()[1] == "E12");
}

TEST_CASE("check_algebra: perturbation yields a witness; k passes") {
  const FinAlgebra<Q> m2 = matrix_algebra<Q>(QQ, 2);
  Mat<Q> mult = m2.mult();
  mult(0, 0) = Q(2);  // E11 * E11 = 2 E11
  const FinAlgebra<Q> bad("bad", QQ, m2.labels(), mult, m2.unit());
  const Report r = check_algebra(bad);
  CHECK(r.result() == Verdict::fail);
  const AxiomResult* f = r.first_failure();
  REQUIRE(f);
  REQUIRE(f->witness);
  CHECK(f->witness->indices.size() == 3);
  CHECK(f->violations > 0);

  const FinAlgebra<Q> k("k", QQ, {"1"}, make_mat<Q>(QQ, {{1}}), v({1}));
  CHECK(check_algebra(k).result() == Verdict::pass);
  CHECK_THROWS_AS(FinAlgebra<Q>("x", QQ, {"a", "b"}, make_mat<Q>(QQ, {{1}}), v({1})), DimensionError);
}

TEST_CASE("nonunital algebra skips only the unit axiom") {
  const FinAlgebra<Q> zero("zero", QQ, {"a"}, make_mat<Q>(QQ, {{0}}));
  const Report r = check_algebra(zero);
  CHECK(r.find("associativity")->verdict == Verdict::pass);
  CHECK(r.find("unit")->verdict == Verdict::skipped);
  CHECK(r.passed());
}

TEST_CASE("group algebras are Hopf algebras and also weak Hopf algebras") {
  for (int n : {2, 3}) {
    const auto h = group_algebra<Q>(QQ, cyclic_group(n), "c" + std::to_string(n));
    CHECK(check_hopf(h).result() == Verdict::pass);
    CHECK(check_weak_hopf(h).result() == Verdict::pass);
  }
  const auto s3 = group_algebra<Q>(QQ, symmetric_group3(), "s3");
  CHECK(check_hopf(s3).passed());
  // S3 is not commutative: (12)(23) != (23)(12).
  const FinAlgebra<Q>& a = s3.algebra();
  bool commutative = true;
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 6; ++j) commutative = commutative && equal(a.product(i, j), a.product(j, i));
  CHECK_FALSE(commutative);
}

TEST_CASE("Sweedler H4 passes check_hopf and its antipode is recovered") {
  const auto h4 = sweedler_h4<Q>(QQ);
  CHECK(check_hopf(h4).result() == Verdict::pass);
  const auto s = compute_antipode(h4);
  REQUIRE(s);
  CHECK(equal(*s, h4.antipode()));
  CHECK(equal(s->col(2), v({0, 0, 0, -1})));  // S(x) = -gx
  CHECK(equal(s->col(1), v({0, 1, 0, 0})));   // S(g) = g
}

TEST_CASE("pair groupoid: bialgebra check fails on Delta(1), weak Hopf passes") {
  const auto w = pair_groupoid<Q>(QQ);
  const Report b = check_bialgebra(w);
  CHECK(b.result() == Verdict::fail);
  CHECK(b.find("comult-unit")->verdict == Verdict::fail);
  CHECK(check_weak_hopf(w).result() == Verdict::pass);
  // Delta(1) = e11 (x) e11 + e22 (x) e22
  Vec<Q> d1 = zero_vec<Q>(QQ, 16);
  d1(0 * 4 + 0) = Q(1);
  d1(3 * 4 + 3) = Q(1);
  CHECK(equal(w.delta(w.one()), d1));
}

TEST_CASE("compute_antipode on group algebras, k and the weak examples") {
  const auto c3 = group_algebra<Q>(QQ, cyclic_group(3), "c3");
  const auto s = compute_antipode(c3);
  REQUIRE(s);
  // g^i -> g^{-i}
  for (Index i = 0; i < 3; ++i) CHECK(equal(s->col(i), unit_vec<Q>(QQ, 3, (3 - i) % 3)));

  const auto k = trivial_hopf<Q>(QQ);
  REQUIRE(compute_antipode(k));
  CHECK(equal(*compute_antipode(k), identity<Q>(QQ, 1)));

  const auto s3 = group_algebra<Q>(QQ, symmetric_group3(), "s3");
  CHECK(equal(*compute_antipode(s3), s3.antipode()));

  for (const auto& w : {pair_groupoid<Q>(QQ), weak_two_point<Q>(QQ)}) {
    const auto sw = compute_antipode(w);
    REQUIRE(sw);
    CHECK(check_weak_hopf(w.with_antipode(*sw)).passed());
  }

  const auto f5 = FieldSpec::prime(5);
  const auto c3p = group_algebra<ModP>(f5, cyclic_group(3), "c3");
  const auto sp = compute_antipode(c3p);
  REQUIRE(sp);
  CHECK(equal(*sp, c3p.antipode()));
}

TEST_CASE("bialgebra without antipode: nonexistence is reported as nullopt") {
  // Monoid algebra of {1, z} with z^2 = z: z is group-like but not invertible.
  Mat<Q> mult = zeros<Q>(QQ, 2, 4);
  mult(0, 0) = Q(1);
  mult(1, 1) = Q(1);
  mult(1, 2) = Q(1);
  mult(1, 3) = Q(1);
  Mat<Q> comult = zeros<Q>(QQ, 4, 2);
  comult(0, 0) = Q(1);
  comult(3, 1) = Q(1);
  const Bialgebra<Q> m(FinAlgebra<Q>("monoid", QQ, {"1", "z"}, mult, v({1, 0})),
                       FinCoalgebra<Q>("monoid", QQ, {"1", "z"}, comult, v({1, 1})));
  CHECK(check_bialgebra(m).passed());
  CHECK_FALSE(compute_antipode(m));
}

TEST_CASE("convolution of functionals") {
  const auto c2 = group_algebra<Q>(QQ, cyclic_group(2), "c2");
  const auto& co = c2.coalgebra();
  const Functional<Q> eps = make_functional(co, co.counit());
  const Functional<Q> de = make_functional(co, v({1, 0}));
  const Functional<Q> two_de = make_functional(co, v({2, 0}));
  CHECK(equal(convolve(co, eps, de).coords, de.coords));
  CHECK(equal(convolve(co, de, de).coords, de.coords));
  CHECK(equal(convolve(co, two_de, two_de).coords, v({4, 0})));
  CHECK_FALSE(equal(convolve(co, two_de, two_de).coords, two_de.coords));

  const auto c3 = group_algebra<Q>(QQ, cyclic_group(3), "c3");
  CHECK_THROWS_AS(convolve(co, de, make_functional(c3.coalgebra(), v({1, 0, 0}))), Error);
}

TEST_CASE("convolution is associative and unital on sampled triples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const auto& h : {sweedler_h4<Q>(QQ), pair_groupoid<Q>(QQ), group_algebra<Q>(QQ, symmetric_group3(), "s3")}) {
    const auto& co = h.coalgebra();
    auto draw = [&] {
      Vec<Q> x(h.dim());
      for (Index i = 0; i < h.dim(); ++i) x(i) = Q(d(rng));
      return make_functional(co, x);
    };
    const Functional<Q> eps = make_functional(co, co.counit());
    for (int t = 0; t < 20; ++t) {
      const auto f = draw(), g = draw(), k = draw();
      CHECK(equal(convolve(co, convolve(co, f, g), k).coords, convolve(co, f, convolve(co, g, k)).coords));
      CHECK(equal(convolve(co, eps, f).coords, f.coords));
      CHECK(equal(convolve(co, f, eps).coords, f.coords));
    }
    // Maps H -> H: id * u eps = id.
    const Mat<Q> u = convolution_unit(co, h.algebra());
    CHECK(equal(convolve(co, h.algebra(), h.id(), u), h.id()));
  }
}

TEST_CASE("dual algebra of kC2 matches the function algebra k^C2") {
  const auto c2 = group_algebra<Q>(QQ, cyclic_group(2), "c2");
  const auto dual = dual_algebra(c2.coalgebra());
  const auto fn = dual_group_algebra<Q>(QQ, cyclic_group(2), "k^c2");
  CHECK(check_hopf(fn).passed());
  CHECK(equal(dual.mult(), fn.algebra().mult()));
  CHECK(equal(*dual.unit(), fn.one()));
}

TEST_CASE("target and source maps") {
  const auto w = pair_groupoid<Q>(QQ);
  const auto ts = target_source(w);
  // Pi^L(e_ij) = e_ii, Pi^R(e_ij) = e_jj
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      CHECK(equal(ts.pi_l.col(i * 2 + j), unit_vec<Q>(QQ, 4, i * 2 + i)));
      CHECK(equal(ts.pi_r.col(i * 2 + j), unit_vec<Q>(QQ, 4, j * 2 + j)));
    }
  CHECK(ts.checks.result() == Verdict::pass);
  for (const char* ax : {"W1", "W2", "W3", "W4", "W5", "W6"}) CHECK(ts.checks.find(ax)->verdict == Verdict::pass);

  const auto two = target_source(weak_two_point<Q>(QQ));
  CHECK(equal(two.pi_l, identity<Q>(QQ, 2)));
  CHECK(equal(two.pi_r, identity<Q>(QQ, 2)));
  CHECK(two.checks.passed());

  const auto h4 = sweedler_h4<Q>(QQ);
  const auto t4 = target_source(h4);
  const Mat<Q> eps1 = h4.one() * h4.coalgebra().counit().transpose();
  CHECK(equal(t4.pi_l, eps1));
  CHECK(equal(t4.pi_r, eps1));
  CHECK(t4.checks.passed());

  Mat<Q> mult = w.algebra().mult();
  mult(0, 0) = Q(0);
  const Bialgebra<Q> broken(FinAlgebra<Q>("broken", QQ, w.labels(), mult, w.one()), w.coalgebra());
  CHECK_THROWS_AS(target_source(broken), ValidationError);
}

TEST_CASE("subalgebra_image") {
  const auto w = pair_groupoid<Q>(QQ);
  const auto same = subalgebra_image<Q>(w.id(), w.algebra());
  CHECK(same.algebra.dim() == 4);
  CHECK(equal(same.algebra.mult(), w.algebra().mult()));

  const auto hl = subalgebra_image<Q>(target_map(w), w.algebra(), "HL");
  CHECK(hl.algebra.dim() == 2);
  CHECK(hl.algebra.labels() == std::vector<std::string>{"e11", "e22"});
  CHECK(check_algebra(hl.algebra).passed());
  CHECK(equal(hl.algebra.product(0, 1), hl.algebra.product(1, 0)));
  REQUIRE(hl.algebra.unital());
  CHECK(equal(*hl.algebra.unit(), v({1, 1})));

  const auto c2 = group_algebra<Q>(QQ, cyclic_group(2), "c2");
  const Mat<Q> eps1 = c2.one() * c2.coalgebra().counit().transpose();
  const auto line = subalgebra_image<Q>(eps1, c2.algebra());
  CHECK(line.algebra.dim() == 1);
  CHECK(equal(*line.algebra.unit(), v({1})));

  // The span of E12 in M_2 is closed (E12^2 = 0); the span of E12 + E21 is not.
  const auto m2 = matrix_algebra<Q>(QQ, 2);
  Mat<Q> op = zeros<Q>(QQ, 4, 4);
  op(1, 0) = Q(1);
  op(2, 0) = Q(1);
  try {
    subalgebra_image<Q>(op, m2);
    FAIL("expected non-closure");
  } catch (const ValidationError& e) {
    REQUIRE(e.report.first_failure());
    CHECK(e.report.first_failure()->witness);
  }
}

TEST_CASE("quantum commutativity, both criteria") {
  CHECK(is_quantum_commutative(weak_two_point<Q>(QQ)));
  CHECK(is_quantum_commutative(group_algebra<Q>(QQ, cyclic_group(2), "c2")));
  const Report r = check_quantum_commutative(pair_groupoid<Q>(QQ));
  CHECK(r.result() == Verdict::fail);
  CHECK(r.find("elementwise")->verdict == Verdict::fail);
  CHECK(r.find("source-central")->verdict == Verdict::fail);
  CHECK(r.first_failure()->witness);
  // Non-commutative ordinary Hopf algebras are still quantum commutative.
  CHECK(is_quantum_commutative(group_algebra<Q>(QQ, symmetric_group3(), "s3")));
  CHECK(is_quantum_commutative(sweedler_h4<Q>(QQ)));
}

TEST_CASE("report JSON carries the first witness") {
  const Report r = check_quantum_commutative(pair_groupoid<Q>(QQ));
  const auto j = to_json(r);
  CHECK(j["result"] == "fail");
  CHECK(j["witness"]["axiom"] == "elementwise");
  CHECK(j["witness"].contains("h"));
  CHECK(j["witness"]["delta"].size() == 4);
}
