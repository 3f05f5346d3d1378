#include <doctest.h>

#include <vector>

#include "hpt/errors.hpp"
#include "hpt/kernels.hpp"
#include "hpt/triangle.hpp"
#include "oracles.hpp"

using hpt::BigInt;
using hpt::CellKind;
using hpt::Row;
using hpt::TriangleParams;

namespace {

std::vector<BigInt> big(std::initializer_list<unsigned> xs) { return {xs.begin(), xs.end()}; }

std::string kinds_string(const Row& row) {
  std::string out;
  for (CellKind kind : row.kinds())
    out += kind == CellKind::Winger ? 'W' : (kind == CellKind::TypeA ? 'A' : 'B');
  return out;
}

}  // namespace

TEST_SUITE("triangle") {
  TEST_CASE("q below 4 is not a {4,q} triangle") {
    CHECK_THROWS_AS(TriangleParams(3), std::invalid_argument);
    CHECK_NOTHROW(TriangleParams(4));
  }

  TEST_CASE("private children per kind") {
    const TriangleParams p(7);
    CHECK(p.private_children(CellKind::TypeA) == 3);
    CHECK(p.private_children(CellKind::TypeB) == 4);
  }

  TEST_CASE("first rows of the {4,5} triangle") {
    const auto rows = hpt::generate_rows(TriangleParams(5), 5);
    CHECK(rows[0].values() == big({1}));
    CHECK(rows[1].values() == big({1, 1}));
    CHECK(rows[2].values() == big({1, 2, 1}));
    CHECK(rows[3].values() == big({1, 3, 2, 3, 1}));
    CHECK(rows[4].values() == big({1, 4, 3, 5, 2, 2, 5, 3, 4, 1}));
    CHECK(rows[5].values() ==
          big({1, 5, 4, 7, 3, 3, 8, 5, 7, 2, 2, 4, 2, 2, 7, 5, 8, 3, 3, 7, 4, 5, 1}));
    CHECK(kinds_string(rows[0]) == "W");
    CHECK(kinds_string(rows[3]) == "WABAW");
    CHECK(kinds_string(rows[4]) == "WABABBABAW");
  }

  TEST_CASE("rows agree with the edge-list construction") {
    for (int q : {4, 5, 6, 7, 9}) {
      CAPTURE(q);
      const std::size_t n_max = q == 5 ? 11 : 8;
      const auto oracle = hpt::test::oracle_rows(q, n_max);
      const auto rows = hpt::generate_rows(TriangleParams(q), n_max);
      for (std::size_t n = 0; n <= n_max; ++n) {
        CAPTURE(n);
        CHECK(rows[n].values() == oracle[n].values);
        CHECK(kinds_string(rows[n]) == oracle[n].kinds);
      }
    }
  }

  TEST_CASE("q = 4 rows are binomial coefficients") {
    const auto rows = hpt::generate_rows(TriangleParams(4), 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      REQUIRE(rows[n].size() == n + 1);
      for (std::size_t k = 0; k <= n; ++k) CHECK(rows[n].value(k) == hpt::test::binomial(n, k));
    }
  }

  TEST_CASE("rows are palindromes") {
    for (int q : {4, 5, 6, 8}) {
      for (const Row& row : hpt::generate_rows(TriangleParams(q), q == 5 ? 12 : 7))
        CHECK(row.is_palindrome());
    }
  }

  TEST_CASE("adjacency grammar of the {4,5} rows") {
    // Wingers only at the ends, an A next to each winger, and never more
    // than q - 3 = 2 B cells in a row.
    for (const Row& row : hpt::generate_rows(TriangleParams(5), 12)) {
      if (row.size() < 3) continue;
      CHECK(row.kind(0) == CellKind::Winger);
      CHECK(row.kind(row.size() - 1) == CellKind::Winger);
      CHECK(row.kind(1) == CellKind::TypeA);
      std::size_t run = 0;
      for (std::size_t k = 1; k + 1 < row.size(); ++k) {
        CHECK(row.kind(k) != CellKind::Winger);
        run = row.kind(k) == CellKind::TypeB ? run + 1 : 0;
        CHECK(run <= 2);
      }
    }
  }

  TEST_CASE("child labels follow their parents") {
    for (int q : {5, 6}) {
      const TriangleParams params(q);
      const auto rows = hpt::generate_rows(params, 8);
      for (std::size_t n = 1; n < rows.size(); ++n) {
        const auto parents = hpt::child_parents(rows[n - 1], params);
        REQUIRE(parents.size() == rows[n].size());
        for (std::size_t k = 0; k < parents.size(); ++k) {
          BigInt expect = rows[n - 1].value(parents[k].first);
          if (parents[k].second) expect += rows[n - 1].value(*parents[k].second);
          CHECK(rows[n].value(k) == expect);
          CHECK(parents[k].second.has_value() == (rows[n].kind(k) == CellKind::TypeA));
        }
      }
    }
  }

  TEST_CASE("next_row_size predicts the row") {
    const TriangleParams params(6);
    Row row = hpt::initial_row();
    for (int n = 0; n < 8; ++n) {
      const std::size_t predicted = hpt::next_row_size(row, params);
      row = hpt::next_row(row, params);
      CHECK(row.size() == predicted);
    }
  }

  TEST_CASE("counts and sums of generated rows") {
    const auto rows = hpt::generate_rows(TriangleParams(5), 4);
    CHECK_THROWS_AS(hpt::row_counts(rows[0]), std::invalid_argument);
    CHECK_THROWS_AS(hpt::row_sums(rows[0]), std::invalid_argument);
    CHECK(hpt::row_counts(rows[4]) == hpt::CountTriple{4, 4, 10});
    CHECK(hpt::row_sums(rows[4]) == hpt::SumTriple{18, 10, 30});
    CHECK(hpt::row_counts(rows[1]) == hpt::CountTriple{0, 0, 2});
  }

  TEST_CASE("central cell") {
    const auto rows = hpt::generate_rows(TriangleParams(5), 6);
    CHECK_THROWS_AS(hpt::central_cell(rows[4]), hpt::NoCentralCell);
    const hpt::Cell c = hpt::central_cell(rows[3]);
    CHECK(c.value == 2);
    CHECK(c.kind == CellKind::TypeB);
    CHECK(hpt::central_cell(rows[0]).kind == CellKind::Winger);
  }

  TEST_CASE("kth_cell streams to one cell") {
    const TriangleParams params(5);
    CHECK(hpt::kth_cell(params, 5, 6).value == 8);
    CHECK(hpt::kth_cell(params, 5, 6).kind == CellKind::TypeA);
    CHECK_THROWS_AS(hpt::kth_cell(params, 5, 23), std::out_of_range);
    CHECK_THROWS_AS(hpt::kth_cell(params, 19, 0), hpt::BudgetExceeded);
  }

  TEST_CASE("budget names the offending row and keeps earlier rows") {
    std::size_t delivered = 0;
    try {
      hpt::for_each_row(TriangleParams(5), 10, 100, [&](const Row&) { ++delivered; });
      FAIL("expected BudgetExceeded");
    } catch (const hpt::BudgetExceeded& e) {
      CHECK(e.row() == 7);  // row 7 has 146 cells, row 6 has 57
      CHECK(e.cells() == 146);
      CHECK(e.budget() == 100);
    }
    CHECK(delivered == 7);

    hpt::RowCache cache(TriangleParams(5), 57);
    CHECK(cache.row(6).size() == 57);
    CHECK_THROWS_AS(cache.row(7), hpt::BudgetExceeded);
    CHECK(cache.row(3).size() == 5);
  }

  TEST_CASE("rows widen to big integers once labels leave 64 bits") {
    // C(68, 34) is the first central binomial coefficient above 2^64.
    const auto rows = hpt::generate_rows(TriangleParams(4), 90);
    CHECK_FALSE(rows[67].is_wide());
    CHECK(rows[68].is_wide());
    CHECK_THROWS_AS(rows[68].narrow_values(), std::logic_error);
    CHECK_THROWS_AS(rows[67].wide_values(), std::logic_error);
    for (std::size_t n : {66, 67, 68, 69, 90})
      for (std::size_t k = 0; k <= n; ++k) CHECK(rows[n].value(k) == hpt::test::binomial(n, k));
    CHECK(rows[90].is_palindrome());
  }

  TEST_CASE("generation is identical on every kernel backend") {
    namespace k = hpt::kernels;
    const k::Backend saved = k::active_backend();
    k::set_backend(k::Backend::Scalar);
    const auto ref = hpt::generate_rows(TriangleParams(5), 12);
    for (k::Backend b : k::supported_backends()) {
      k::set_backend(b);
      const auto rows = hpt::generate_rows(TriangleParams(5), 12);
      for (std::size_t n = 0; n < rows.size(); ++n) CHECK(rows[n].values() == ref[n].values());
    }
    k::set_backend(saved);
  }
}
