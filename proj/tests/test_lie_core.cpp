#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "liepf/lie_algebra.hpp"
#include "oracles.hpp"

using namespace liepf;

namespace {

const std::vector<std::string> kSweep = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3",
                                         "C4", "D3", "D4", "F4", "G2"};
const std::vector<std::string> kAll = {"A1", "A2", "A5", "A8", "B2", "B3", "B6", "C2", "C3", "C7", "D3",
                                       "D4", "D5", "D8", "E6", "E7", "E8", "F4", "G2"};

std::size_t expected_positive_roots(char type, int n) {
  switch (type) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

// Bourbaki Cartan matrices written out by hand.
IntMatrix e8_cartan() {
  IntMatrix c(8, std::vector<std::int64_t>(8, 0));
  for (int i = 0; i < 8; ++i) c[i][i] = 2;
  auto bond = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
  bond(1, 3);
  bond(2, 4);
  bond(3, 4);
  bond(4, 5);
  bond(5, 6);
  bond(6, 7);
  bond(7, 8);
  return c;
}

IntMatrix truncate(const IntMatrix& m, std::size_t n) {
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin(), m[i].begin() + n);
  return out;
}

}  // namespace

TEST_CASE("designators parse and invalid types are rejected") {
  CHECK(build_algebra("e8").designator() == "E8");
  CHECK(build_algebra('G', 2).rank() == 2);
  for (const char* bad : {"F5", "E9", "E5", "B1", "C1", "D2", "A0", "G3", "X2", "", "A", "A-1", "Ax"})
    CHECK_THROWS_AS(build_algebra(bad), DomainError);
}

TEST_CASE("root counts and dimensions") {
  for (const auto& name : kAll) {
    auto alg = build_algebra(name);
    CAPTURE(name);
    CHECK(alg.positive_roots().size() == expected_positive_roots(alg.type_tag(), alg.rank()));
    CHECK(alg.dim_g() == alg.rank() + 2 * static_cast<std::int64_t>(alg.positive_roots().size()));
  }
  CHECK(build_algebra("E8").dim_g() == 248);
  CHECK(build_algebra("G2").dim_g() == 14);
  CHECK(build_algebra("F4").dim_g() == 52);
}

TEST_CASE("simply-laced root counts agree with a brute-force norm-2 search") {
  IntMatrix e8 = e8_cartan();
  CHECK(build_algebra("E8").cartan() == e8);
  CHECK(build_algebra("E7").cartan() == truncate(e8, 7));
  CHECK(build_algebra("E6").cartan() == truncate(e8, 6));
  CHECK(oracle::simply_laced_root_count(truncate(e8, 6), 3) == 36);
  CHECK(oracle::simply_laced_root_count(truncate(e8, 7), 4) == 63);
  CHECK(oracle::simply_laced_root_count(e8, 6) == 120);
  for (const auto& name : {"A4", "D5"}) {
    auto alg = build_algebra(name);
    CHECK(oracle::simply_laced_root_count(alg.cartan(), 2) ==
          static_cast<std::int64_t>(alg.positive_roots().size()));
  }
}

TEST_CASE("dual Coxeter numbers, comarks and Cartan determinants") {
  struct Row {
    const char* name;
    std::int64_t h_dual;
    std::int64_t det;
  };
  for (const Row& row : {Row{"A1", 2, 2}, Row{"A4", 5, 5}, Row{"B3", 5, 2}, Row{"C3", 4, 2}, Row{"D4", 6, 4},
                         Row{"D5", 8, 4}, Row{"E6", 12, 3}, Row{"E7", 18, 2}, Row{"E8", 30, 1}, Row{"F4", 9, 1},
                         Row{"G2", 4, 1}}) {
    auto alg = build_algebra(row.name);
    CAPTURE(row.name);
    CHECK(alg.dual_coxeter() == row.h_dual);
    CHECK(alg.cartan_determinant() == row.det);
  }
  CHECK(build_algebra("E8").comarks() == std::vector<std::int64_t>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(build_algebra("G2").comarks() == std::vector<std::int64_t>{1, 2});
  CHECK(build_algebra("F4").comarks() == std::vector<std::int64_t>{2, 3, 2, 1});
  CHECK(build_algebra("B3").comarks() == std::vector<std::int64_t>{1, 2, 1});
  CHECK(build_algebra("C3").comarks() == std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("highest root has squared length 2 and long roots are normalised") {
  for (const auto& name : kAll) {
    auto alg = build_algebra(name);
    const Weight& theta = alg.highest_root_theta();
    CHECK(inner(alg, theta, theta) == 2);
    for (std::size_t i = 0; i < alg.positive_roots().size(); ++i) {
      const Weight& r = alg.positive_roots()[i];
      Rational len = inner(alg, r, r);
      CHECK((len == 2) == alg.is_long_root(i));
      CHECK(len <= 2);
    }
  }
}

TEST_CASE("positive roots expand non-negatively over the simple roots") {
  for (const auto& name : kAll) {
    auto alg = build_algebra(name);
    const auto& roots = alg.positive_roots();
    const auto& simple = alg.positive_roots_simple();
    REQUIRE(roots.size() == simple.size());
    std::set<Weight> unique(roots.begin(), roots.end());
    CHECK(unique.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      Weight rebuilt(static_cast<std::size_t>(alg.rank()));
      for (int k = 0; k < alg.rank(); ++k) {
        CHECK(simple[i][k] >= 0);
        rebuilt += simple[i][k] * alg.simple_root(k + 1);
      }
      CHECK(rebuilt == roots[i]);
    }
    CHECK(roots.back() == alg.highest_root_theta());
  }
}

TEST_CASE("theta pairing equals the comark sum on a sweep of dominant weights") {
  for (const auto& name : kSweep) {
    auto alg = build_algebra(name);
    gen::Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      Weight lambda = gen::dominant_weight(rng, alg.rank(), 3);
      Rational expected = 0;
      for (int i = 0; i < alg.rank(); ++i) expected += lambda[i] * alg.comarks()[i];
      CHECK(inner(alg, lambda, alg.highest_root_theta()) == expected);
      CHECK(alg.theta_coroot_pairing(lambda) == expected);
    }
  }
}

TEST_CASE("Weyl orbits have one dominant element and the closed-form size") {
  for (const auto& name : kSweep) {
    auto alg = build_algebra(name);
    gen::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
      Weight lambda = gen::dominant_weight(rng, alg.rank(), 2);
      Weight mu = lambda;
      for (int step = 0; step < 6; ++step) mu = reflect(alg, mu, gen::uniform(rng, 1, alg.rank()));
      CHECK(dominant_representative(alg, mu) == lambda);
      auto orbit = weyl_orbit(alg, mu);
      CHECK(std::count_if(orbit.begin(), orbit.end(), [](const Weight& w) { return w.is_dominant(); }) == 1);
      CHECK(std::is_sorted(orbit.begin(), orbit.end()));
      CHECK(std::find(orbit.begin(), orbit.end(), lambda) != orbit.end());
      CHECK(BigInt(orbit.size()) == orbit_size(alg, lambda));
    }
    // Regular orbits are simply transitive.
    CHECK(BigInt(weyl_orbit(alg, alg.rho()).size()) == weyl_group_order(alg));
  }
  CHECK(weyl_group_order(build_algebra("E8")) == BigInt("696729600"));
  CHECK(orbit_size(build_algebra("E8"), Weight::fundamental(8, 8)) == 240);
  CHECK_THROWS_AS(weyl_orbit(build_algebra("E8"), build_algebra("E8").rho(), 1000), CapExceeded);
}

TEST_CASE("reflections are involutions preserving the form") {
  auto alg = build_algebra("F4");
  gen::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Weight x = gen::dominant_weight(rng, 4, 3) - gen::dominant_weight(rng, 4, 3);
    Weight y = gen::dominant_weight(rng, 4, 3);
    for (std::size_t node = 1; node <= 4; ++node) {
      CHECK(reflect(alg, reflect(alg, x, node), node) == x);
      CHECK(inner(alg, reflect(alg, x, node), reflect(alg, y, node)) == inner(alg, x, y));
    }
  }
}

TEST_CASE("alcoves start at zero and grow with the level") {
  for (const auto& name : kSweep) {
    auto alg = build_algebra(name);
    auto zero = alcove(alg, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero.front().is_zero());
    std::size_t previous = 1;
    for (int level = 1; level <= 4; ++level) {
      auto points = alcove(alg, level);
      CHECK(points.size() >= previous);
      CHECK(std::is_sorted(points.begin(), points.end()));
      for (const auto& w : points) {
        CHECK(w.is_dominant());
        CHECK(alg.theta_coroot_pairing(w) <= level);
      }
      previous = points.size();
    }
  }
  // Binomial closed form for type A: |P_l| = C(l + r, r).
  for (int r = 1; r <= 4; ++r)
    for (int level = 0; level <= 5; ++level)
      CHECK(BigInt(alcove(build_algebra('A', r), level).size()) == oracle::binomial(level + r, r));
  auto g2 = alcove(build_algebra("G2"), 1);
  CHECK(g2 == std::vector<Weight>{Weight{0, 0}, Weight{1, 0}});
  CHECK_THROWS_AS(alcove(build_algebra("A2"), -1), DomainError);
}

TEST_CASE("weight parsing") {
  CHECK(parse_weight("1,0,2") == Weight{1, 0, 2});
  CHECK(parse_weight(" 3 ") == Weight{3});
  CHECK_THROWS_AS(parse_weight(""), DomainError);
  CHECK_THROWS_AS(parse_weight("1,,2"), DomainError);
  CHECK_THROWS_AS(parse_weight("a"), DomainError);
  CHECK_THROWS_AS(build_algebra("A2").require_rank(Weight{1, 0, 0}), DomainError);
  CHECK(Weight::fundamental(3, 2).to_string() == "[0,1,0]");
}
