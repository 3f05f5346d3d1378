#include <doctest.h>

#include <random>

#include "hpt/errors.hpp"
#include "hpt/quadfield.hpp"
#include "hpt/sequences.hpp"
#include "hpt/triangle.hpp"

using hpt::BigInt;
using hpt::CountTriple;
using hpt::SumTriple;

TEST_SUITE("sequences") {
  TEST_CASE("q = 5 row sizes") {
    const std::vector<CountTriple> want{
        {0, 0, 2},  {1, 0, 3},   {2, 1, 5},    {4, 4, 10},    {9, 12, 23},
        {22, 33, 57}, {56, 88, 146}, {145, 232, 379}, {378, 609, 989}, {988, 1596, 2586},
    };
    for (std::size_t n = 1; n <= want.size(); ++n) {
      CAPTURE(n);
      CHECK(hpt::counts_coupled(5, n) == want[n - 1]);
      CHECK(hpt::counts_ternary(5, n) == want[n - 1]);
      CHECK(hpt::counts_closed(5, n) == want[n - 1]);
    }
  }

  TEST_CASE("q = 7 row sizes and sums") {
    CHECK(hpt::counts_coupled(7, 8) == CountTriple{2641, 10008, 12651});
    CHECK(hpt::sums_closed(7, 8) == SumTriple{24482, 44622, 69106});
    CHECK(hpt::sums_ternary(7, 5) == SumTriple{138, 246, 386});
  }

  TEST_CASE("q = 5 row sums") {
    const std::vector<SumTriple> want{
        {0, 0, 2},    {2, 0, 4},     {6, 2, 10},     {18, 10, 30},    {58, 38, 98},
        {194, 134, 330}, {658, 462, 1122}, {2242, 1582, 3826}, {7650, 5406, 13058},
    };
    for (std::size_t n = 1; n <= want.size(); ++n) {
      CAPTURE(n);
      CHECK(hpt::sums_coupled(5, n) == want[n - 1]);
      CHECK(hpt::sums_ternary(5, n) == want[n - 1]);
      CHECK(hpt::sums_closed(5, n) == want[n - 1]);
    }
  }

  TEST_CASE("row 60 needs big integers") {
    const CountTriple c = hpt::counts_closed(5, 60);
    CHECK(c.s == BigInt("2046711111473984623691761"));
    CHECK(c.a == BigInt("781774079430987230203438"));
    const SumTriple s = hpt::sums_closed(5, 60);
    CHECK(s.sum == BigInt("20589002634887215939725952024578"));
    CHECK(s.sum_b == BigInt("8528244127105674125498407452670"));
  }

  TEST_CASE("all routes agree for q = 4..10") {
    for (int q = 4; q <= 10; ++q) {
      for (std::size_t n = 1; n <= 40; ++n) {
        CAPTURE(q);
        CAPTURE(n);
        const CountTriple c = hpt::counts_coupled(q, n);
        CHECK(c == hpt::counts_ternary(q, n));
        if (q > 4) CHECK(c == hpt::counts_closed(q, n));
        CHECK(c.s == c.a + c.b + 2);
        const SumTriple s = hpt::sums_coupled(q, n);
        CHECK(s == hpt::sums_ternary(q, n));
        CHECK(s == hpt::sums_closed(q, n));  // q = 4 has D = 1 here, still fine
      }
    }
  }

  TEST_CASE("generated rows agree with the formulas") {
    for (int q : {4, 5, 6, 8}) {
      for (const hpt::Row& row : hpt::generate_rows(hpt::TriangleParams(q), q == 5 ? 12 : 7)) {
        if (row.index() == 0) continue;
        CHECK(hpt::row_counts(row) == hpt::counts_coupled(q, row.index()));
        CHECK(hpt::row_sums(row) == hpt::sums_coupled(q, row.index()));
      }
    }
  }

  TEST_CASE("q = 4 has no closed count form") {
    CHECK_THROWS_AS(hpt::counts_closed(4, 3), hpt::DegenerateDiscriminant);
    CHECK_THROWS_AS(hpt::count_closed_forms(4), hpt::DegenerateDiscriminant);
    // Euclidean sums are 2^n.
    CHECK(hpt::sums_closed(4, 10).sum == 1024);
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(hpt::counts_coupled(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(hpt::counts_ternary(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(hpt::sums_closed(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(hpt::parity_s(0), std::invalid_argument);
    CHECK_THROWS_AS(hpt::weighted_sum(0, 1, 1), std::invalid_argument);
  }

  TEST_CASE("series start at row 1") {
    const auto counts = hpt::counts_series(6, 30);
    const auto sums = hpt::sums_series(6, 30);
    REQUIRE(counts.size() == 30);
    for (std::size_t k = 0; k < 30; ++k) {
      CHECK(counts[k] == hpt::counts_coupled(6, k + 1));
      CHECK(sums[k] == hpt::sums_coupled(6, k + 1));
    }
  }

  TEST_CASE("closed forms live in the right fields") {
    const auto c = hpt::count_closed_forms(5);
    CHECK(c.s.root.disc() == 5);  // q^2 - 4q
    CHECK(c.s.root * c.s.root.conj() == hpt::QuadElem::one(5));
    const auto s = hpt::sum_closed_forms(6);
    CHECK(s.s.root.disc() == 17);  // q^2 - 2q - 7
    CHECK(s.s.root * s.s.root.conj() == hpt::QuadElem::rational(2, 17));
  }

  TEST_CASE("growth rate of the q = 5 rows tends to alpha") {
    // |s_41 / s_40 - alpha| < 1e-6, decided exactly:
    // alpha - s_41/s_40 - 1e-6 < 0 < alpha - s_41/s_40 + 1e-6.
    const BigInt s40 = hpt::counts_coupled(5, 40).s, s41 = hpt::counts_coupled(5, 41).s;
    const hpt::QuadElem alpha(hpt::Rational(3, 2), hpt::Rational(1, 2), 5);
    const hpt::Rational ratio = hpt::make_rational(s41, s40);
    const hpt::Rational eps(1, 1'000'000);
    CHECK((alpha - hpt::QuadElem::rational(ratio + eps, 5)).sign() < 0);
    CHECK((alpha - hpt::QuadElem::rational(ratio - eps, 5)).sign() > 0);
  }

  TEST_CASE("parity of row sizes") {
    const auto series = hpt::counts_series(5, 300);
    for (std::size_t n = 1; n <= 300; ++n) {
      CHECK(hpt::parity_s(n) == (mpz_odd_p(series[n - 1].s.get_mpz_t()) ? 1 : 0));
      CHECK(hpt::parity_s(n) == (n % 3 == 1 ? 0 : 1));
    }
  }

  TEST_CASE("alternating sums") {
    const int want[] = {1, 0, 0, -2, 0, 2, 2, 0, 2, 2, 0, 2, 2};
    for (std::size_t n = 0; n < 13; ++n) CHECK(hpt::alt_sum(n) == want[n]);
    CHECK(hpt::alt_sum(1000) == 0);  // 1000 = 3 * 333 + 1
    CHECK(hpt::alt_sum(1001) == 2);
  }

  TEST_CASE("alternating triples from rows") {
    const auto rows = hpt::generate_rows(hpt::TriangleParams(5), 14);
    CHECK(hpt::alt_triple_from_row(rows[3]) == hpt::AltTriple{-6, 2, -2});
    CHECK(hpt::alt_triple_from_row(rows[6]) == hpt::AltTriple{2, -2, 2});
    CHECK(hpt::alt_triple_from_row(rows[2]) == hpt::AltTriple{-2, 0, 0});
    CHECK(hpt::alt_triple_from_row(rows[0]) == hpt::AltTriple{0, 0, 1});
    for (const hpt::Row& row : rows) {
      CAPTURE(row.index());
      const hpt::AltTriple t = hpt::alt_triple_from_row(row);
      CHECK(t == hpt::alt_triple_by_influence(row.index()));
      CHECK(t.total == hpt::alt_sum(row.index()));
    }
  }

  TEST_CASE("influence step") {
    CHECK(hpt::alt_influence_step({0, 0}) == hpt::AltPair{-6, 2});
    CHECK(hpt::alt_influence_step({-2, 0}) == hpt::AltPair{2, -2});
    CHECK(hpt::alt_influence_step({2, -2}) == hpt::AltPair{2, -2});
    CHECK(hpt::alt_influence_step({-6, 2}) == hpt::AltPair{2, -2});
  }

  TEST_CASE("weighted sums agree with the rows") {
    const auto rows = hpt::generate_rows(hpt::TriangleParams(5), 13);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> weight(-50, 50);
    for (std::size_t n = 1; n < rows.size(); ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        const BigInt v = weight(rng), w = weight(rng);
        CHECK(hpt::weighted_sum(n, v, w) == hpt::weighted_sum_direct(rows[n], v, w));
      }
    }
    // v = w = 1 is the row sum, v = 1, w = -1 the alternating sum.
    CHECK(hpt::weighted_sum(20, 1, 1) == hpt::sums_coupled(5, 20).sum);
    CHECK(hpt::weighted_sum(20, 1, -1) == hpt::alt_sum(20));
  }
}
