#include <doctest.h>

#include <random>

#include "hpt/errors.hpp"
#include "hpt/linrec.hpp"

using hpt::BinaryCoeffs;
using hpt::CoupledSystem;
using hpt::Rational;
using hpt::TernaryCoeffs;

TEST_SUITE("linrec") {
  TEST_CASE("count and sum systems") {
    for (int q = 5; q <= 12; ++q) {
      CAPTURE(q);
      CHECK(hpt::eliminate({1, 1, 1, q - 4, q - 3, 0}) == TernaryCoeffs{q - 1, 1 - q, 1});
      CHECK(hpt::eliminate({2, 2, 2, q - 4, q - 3, 0}) == TernaryCoeffs{q, -q - 1, 2});
      CHECK(hpt::eliminate_homogeneous({1, 1, 0, q - 4, q - 3, 0}) == BinaryCoeffs{q - 2, -1});
      CHECK(hpt::eliminate_homogeneous({2, 2, 0, q - 4, q - 3, 0}) == BinaryCoeffs{q - 1, -2});
    }
  }

  TEST_CASE("influence system stabilises") {
    CHECK(hpt::eliminate({-4, -8, -6, 2, 4, 2}) == TernaryCoeffs{1, 0, 0});
  }

  TEST_CASE("swap system") {
    CHECK(hpt::eliminate_homogeneous({0, 1, 0, 1, 0, 0}) == BinaryCoeffs{0, 1});
  }

  TEST_CASE("hypothesis a2 * b1 != 0") {
    const CoupledSystem euclid{1, 1, 1, 0, 1, 0};  // q = 4
    CHECK_THROWS_AS(hpt::eliminate(euclid), hpt::HypothesisViolated);
    CHECK_THROWS_AS(hpt::eliminate_homogeneous({1, 0, 0, 1, 1, 0}), hpt::HypothesisViolated);
    const TernaryCoeffs waived = hpt::eliminate(euclid, hpt::Hypothesis::Waive);
    CHECK(waived == TernaryCoeffs{3, -3, 1});
    const auto [xs, ys] = hpt::iterate(euclid, 0, 0, 10);
    CHECK(hpt::check_satisfies(xs, waived));
    CHECK(hpt::check_satisfies(ys, waived));
  }

  TEST_CASE("homogeneous elimination needs zero constants") {
    CHECK_THROWS_AS(hpt::eliminate_homogeneous({1, 1, 1, 1, 1, 0}), std::invalid_argument);
  }

  TEST_CASE("check_satisfies") {
    const std::vector<Rational> s{2, 3, 5, 10, 23, 57, 146};
    CHECK(hpt::check_satisfies(s, TernaryCoeffs{4, -4, 1}));
    const std::vector<Rational> ones(6, 1);
    CHECK(hpt::check_satisfies(ones, TernaryCoeffs{1, 0, 0}));
    const std::vector<Rational> bad{1, 2, 4, 10};
    CHECK_FALSE(hpt::check_satisfies(bad, TernaryCoeffs{4, -4, 1}));
    CHECK_THROWS_AS(hpt::check_satisfies(std::vector<Rational>{1, 2, 3}, TernaryCoeffs{1, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(hpt::check_satisfies(std::vector<Rational>{1, 2}, BinaryCoeffs{1, 0}),
                    std::invalid_argument);
  }

  TEST_CASE("iterate") {
    const auto [xs, ys] = hpt::iterate({1, 1, 1, 1, 2, 0}, 0, 0, 3);
    CHECK(xs == std::vector<Rational>{0, 1, 2, 4});
    CHECK(ys == std::vector<Rational>{0, 0, 1, 4});
  }

  TEST_CASE("round trip on random rational systems") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 5);
    auto r = [&] { return hpt::make_rational(num(rng), den(rng)); };
    int tested = 0;
    while (tested < 200) {
      CoupledSystem sys{r(), r(), r(), r(), r(), r()};
      if (sys.a2 * sys.b1 == 0) continue;
      ++tested;
      const auto [xs, ys] = hpt::iterate(sys, r(), r(), 12);
      const TernaryCoeffs t = hpt::eliminate(sys);
      CHECK(hpt::check_satisfies(xs, t));
      CHECK(hpt::check_satisfies(ys, t));
      sys.c1 = sys.c2 = 0;
      const auto [hx, hy] = hpt::iterate(sys, r(), r(), 12);
      const BinaryCoeffs b = hpt::eliminate_homogeneous(sys);
      CHECK(hpt::check_satisfies(hx, b));
      CHECK(hpt::check_satisfies(hy, b));
    }
  }

  TEST_CASE("waived elimination still holds for triangular systems") {
    std::mt19937_64 rng(100);
    std::uniform_int_distribution<int> num(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
      CoupledSystem sys{num(rng), num(rng), num(rng), 0, num(rng), num(rng)};
      if (trial % 2) std::swap(sys.a2, sys.b1);
      const auto [xs, ys] = hpt::iterate(sys, num(rng), num(rng), 12);
      const TernaryCoeffs t = hpt::eliminate(sys, hpt::Hypothesis::Waive);
      CHECK(hpt::check_satisfies(xs, t));
      CHECK(hpt::check_satisfies(ys, t));
    }
  }
}
