#include <doctest.h>

#include "generators.hpp"
#include "liepf/json_io.hpp"
#include "liepf/pfaffian.hpp"
#include "oracles.hpp"

using namespace liepf;

namespace {

RationalMatrix standard_symplectic(std::size_t n) {
  RationalMatrix i = RationalMatrix::identity(n);
  return RationalMatrix::block(RationalMatrix(n, n), i, -i, RationalMatrix(n, n));
}

Rational pf(const RationalMatrix& m) { return pfaffian(SkewMatrix(m)); }

}  // namespace

TEST_CASE("pfaffian on definitions and degenerate sizes") {
  CHECK(pf(RationalMatrix(0, 0)) == 1);
  CHECK(pf(RationalMatrix{{0, Rational(3, 7)}, {Rational(-3, 7), 0}}) == Rational(3, 7));
  // a12 a34 - a13 a24 + a14 a23
  RationalMatrix four{{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}};
  CHECK(pf(four) == 1 * 6 - 2 * 5 + 3 * 4);
  CHECK_THROWS_AS(pf(RationalMatrix(3, 3)), DomainError);
  CHECK_THROWS_AS(SkewMatrix(RationalMatrix{{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(SkewMatrix(RationalMatrix{{1, 0}, {0, 0}}), DomainError);
  CHECK_THROWS_AS(SkewMatrix(RationalMatrix(2, 3)), DomainError);
  CHECK(SkewMatrix(RationalMatrix(3, 3)).size() == 3);
}

TEST_CASE("standard symplectic form") {
  for (std::size_t n = 1; n <= 4; ++n) {
    Rational expected = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
    CHECK(oracle::matching_pfaffian(standard_symplectic(n)) == expected);
    CHECK(pf(standard_symplectic(n)) == expected);
  }
}

TEST_CASE("pf^2 = det and agreement with the matching expansion") {
  gen::Rng rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 * gen::uniform(rng, 1, 4);
    RationalMatrix a = gen::skew(rng, n);
    Rational p = pf(a);
    CHECK(p * p == determinant(a));
    CHECK(p == oracle::matching_pfaffian(a));
    if (n <= 6) CHECK(determinant(a) == oracle::leibniz_det(a));
  }
  // Singular input has pfaffian zero.
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix a = gen::skew_of_rank(rng, 6, gen::uniform(rng, 0, 2));
    CHECK(pf(a) == 0);
  }
}

TEST_CASE("pf(B A B^T) = det(B) pf(A)") {
  gen::Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 * gen::uniform(rng, 1, 4);
    RationalMatrix a = gen::skew(rng, n);
    RationalMatrix b = gen::square(rng, n);
    CHECK(pf(b * a * b.transpose()) == determinant(b) * pf(a));
  }
}

TEST_CASE("zero pivots force row swaps") {
  // First row vanishes except in the last column.
  RationalMatrix a(6, 6);
  auto set = [&](int i, int j, Rational v) {
    a(i, j) = v;
    a(j, i) = -v;
  };
  set(0, 5, 2);
  set(1, 2, 3);
  set(3, 4, -1);
  set(1, 4, 7);
  CHECK(pf(a) == oracle::matching_pfaffian(a));
  CHECK(pf(a) * pf(a) == determinant(a));
}

TEST_CASE("graded lines and the Koszul sign") {
  GradedLine odd{3, 1};
  GradedLine even{2, 0};
  CHECK(koszul_sign(odd, odd) == -1);
  CHECK(koszul_sign(odd, even) == 1);
  CHECK(koszul_sign(even, even) == 1);
  CHECK(odd.tensor(odd) == GradedLine{6, 0});
  CHECK(odd.dual() == odd);
  CHECK(pfaffian_line(SkewComplex::zero(5)) == GradedLine{5, 1});
  CHECK(pfaffian_line(SkewComplex::zero(0)) == GradedLine{0, 0});
}

TEST_CASE("identity and zero-dimensional complexes") {
  gen::Rng rng(3);
  for (std::size_t n = 0; n <= 6; ++n) {
    SkewComplex e = gen::complex(rng, n);
    auto id = SkewComplexMorphism::identity(e);
    CHECK(pfaffian_of_morphism(id, RationalMatrix(n, n)) == 1);
    CHECK(determinant_of_morphism(id) == 1);
  }
  auto empty = SkewComplexMorphism::identity(SkewComplex::zero(0));
  CHECK(pfaffian_block_matrix(empty, RationalMatrix(0, 0)).rows() == 0);
}

TEST_CASE("gamma from a homotopy witness") {
  gen::Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    SkewComplex e = gen::complex(rng, 2);
    auto f = gen::morphism(rng, e, 4);
    REQUIRE(f.homotopy_holds());
    RationalMatrix gamma = gamma_from_homotopy(f);
    CHECK(gamma.is_skew());
    const std::size_t m = f.target().dim();
    CHECK(f.f1() * f.f0().transpose() + f.target().alpha() * gamma == RationalMatrix::identity(m));
  }
  // A symmetric witness antisymmetrises to zero.
  SkewComplex zero = SkewComplex::zero(2);
  RationalMatrix h{{1, 2}, {2, 5}};
  SkewComplexMorphism f(zero, zero, RationalMatrix::identity(2), RationalMatrix::identity(2), h);
  CHECK(gamma_from_homotopy(f).is_zero());
  CHECK_THROWS_AS(gamma_from_homotopy(SkewComplexMorphism(zero, zero, RationalMatrix::identity(2),
                                                          RationalMatrix::identity(2))),
                  DomainError);
}

TEST_CASE("morphisms homotopic to the identity have Pf = 1") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    SkewComplex e = gen::complex(rng, 2 * gen::uniform(rng, 0, 3));
    auto f = gen::homotopic_to_identity(rng, e);
    CHECK(f.homotopy_holds());
    CHECK(pfaffian_of_morphism(f, gamma_from_homotopy(f)) == 1);
  }
}

TEST_CASE("Pf does not depend on the admissible gamma") {
  gen::Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    SkewComplex e = gen::complex(rng, gen::uniform(rng, 1, 4));
    auto f = gen::morphism(rng, e, 6);
    RationalMatrix gamma = gamma_from_homotopy(f);
    RationalMatrix k = kernel_basis(f.target().alpha());
    RationalMatrix s = gen::skew(rng, k.cols());
    RationalMatrix other = gamma + k * s * k.transpose();
    REQUIRE(is_admissible_gamma(f, other));
    CHECK(pfaffian_of_morphism(f, other) == pfaffian_of_morphism(f, gamma));
  }
}

TEST_CASE("Pf squares to the determinant functor") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    SkewComplex e = gen::complex(rng, gen::uniform(rng, 1, 4));
    auto f = gen::morphism(rng, e, 6);
    Rational p = pfaffian_of_morphism(f, gamma_from_homotopy(f));
    CHECK(p != 0);
    CHECK(p * p == determinant_of_morphism(f));
  }
}

TEST_CASE("Pf is multiplicative") {
  gen::Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    SkewComplex e = gen::complex(rng, gen::uniform(rng, 0, 4));
    auto f = gen::morphism(rng, e, 6);
    auto g = gen::uniform(rng, 0, 3) == 0 && f.target().dim() > e.dim()
                 ? gen::projection(f.target(), f.target().dim() - e.dim())
                 : gen::morphism(rng, f.target(), 6);
    auto gf = compose(g, f);
    REQUIRE(gf.homotopy_holds());
    RationalMatrix gamma_f = gamma_from_homotopy(f);
    RationalMatrix gamma_g = gamma_from_homotopy(g);
    RationalMatrix gamma_gf = compose_gamma(g, gamma_f, gamma_g);
    REQUIRE(is_admissible_gamma(gf, gamma_gf));
    Rational lhs = pfaffian_of_morphism(gf, gamma_gf);
    CHECK(lhs == pfaffian_of_morphism(g, gamma_g) * pfaffian_of_morphism(f, gamma_f));
    CHECK(lhs == pfaffian_of_morphism(gf, gamma_from_homotopy(gf)));
  }
}

TEST_CASE("invalid morphisms are rejected") {
  SkewComplex e(RationalMatrix{{0, 1}, {-1, 0}});
  SkewComplex z = SkewComplex::zero(2);
  // Chain condition fails.
  CHECK_THROWS_AS(SkewComplexMorphism(e, z, RationalMatrix::identity(2), RationalMatrix::identity(2)), DomainError);
  // Wrong shapes.
  CHECK_THROWS_AS(SkewComplexMorphism(e, e, RationalMatrix::identity(3), RationalMatrix::identity(2)), DomainError);
  // Dimensions of different parity.
  auto odd = SkewComplexMorphism(SkewComplex::zero(1), SkewComplex::zero(2), RationalMatrix(2, 1),
                                 RationalMatrix(2, 1));
  CHECK_THROWS_AS(pfaffian_of_morphism(odd, RationalMatrix(2, 2)), DomainError);
  // Gamma fails the section identity.
  auto id = SkewComplexMorphism::identity(z);
  CHECK_FALSE(is_admissible_gamma(id, RationalMatrix{{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(pfaffian_of_morphism(SkewComplexMorphism(z, z, RationalMatrix(2, 2), RationalMatrix(2, 2)),
                                       RationalMatrix(2, 2)),
                  DomainError);
  CHECK_THROWS_AS(compose(id, SkewComplexMorphism::identity(e)), DomainError);
}

TEST_CASE("matrix JSON") {
  RationalMatrix m{{0, Rational(1, 2)}, {Rational(-1, 2), 0}};
  auto j = json_io::matrix_to_json(m);
  CHECK(j["entries"][0][1] == "1/2");
  CHECK(json_io::matrix_from_json(j) == m);
  CHECK(json_io::matrix_from_json(json_io::json::parse(R"({"n":2,"entries":[[0,3],[-3,0]]})")) ==
        RationalMatrix{{0, 3}, {-3, 0}});
  CHECK_THROWS_AS(json_io::matrix_from_json(json_io::json::parse(R"({"n":2,"entries":[[0,3]]})")), DomainError);
  CHECK_THROWS_AS(json_io::matrix_from_json(json_io::json::parse(R"({"entries":[]})")), DomainError);
  CHECK_THROWS_AS(json_io::matrix_from_json(json_io::json::parse(R"({"n":1,"entries":[[1.5]]})")), DomainError);
}
