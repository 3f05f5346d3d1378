#include <doctest.h>

#include <limits>
#include <random>
#include <vector>

#include "hpt/kernels.hpp"

namespace k = hpt::kernels;

namespace {

struct BackendGuard {
  k::Backend saved = k::active_backend();
  ~BackendGuard() { k::set_backend(saved); }
};

std::vector<hpt::CellKind> random_kinds(std::mt19937_64& rng, std::size_t n) {
  std::vector<hpt::CellKind> kinds(n);
  for (auto& kind : kinds) kind = static_cast<hpt::CellKind>(rng() % 3);
  return kinds;
}

// Mostly small labels, some near the top of the 64-bit range.
std::vector<std::uint64_t> random_values(std::mt19937_64& rng, std::size_t n, bool huge) {
  std::vector<std::uint64_t> values(n);
  for (auto& v : values) v = huge && rng() % 4 == 0 ? rng() : rng() % 1'000'000;
  return values;
}

template <class F>
void for_each_vector_backend(F&& body) {
  BackendGuard guard;
  for (k::Backend b : k::supported_backends()) {
    if (b == k::Backend::Scalar) continue;
    CAPTURE(k::backend_name(b));
    body(b);
  }
}

template <class F>
auto on(k::Backend b, F&& f) {
  k::set_backend(b);
  return f();
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar backend is always available and listed first") {
    const auto backends = k::supported_backends();
    REQUIRE_FALSE(backends.empty());
    CHECK(backends.front() == k::Backend::Scalar);
    CHECK(k::backend_supported(k::best_backend()));
  }

  TEST_CASE("unsupported backend is rejected") {
    BackendGuard guard;
    for (k::Backend b : {k::Backend::Avx2, k::Backend::Neon})
      if (!k::backend_supported(b)) CHECK_THROWS_AS(k::set_backend(b), std::invalid_argument);
  }

  TEST_CASE("pair_sums matches scalar, including overflow and tails") {
    std::mt19937_64 rng(1);
    for_each_vector_backend([&](k::Backend b) {
      for (std::size_t n = 0; n < 80; ++n) {
        for (bool huge : {false, true}) {
          const auto in = random_values(rng, n, huge);
          const std::size_t out_n = n == 0 ? 0 : n - 1;
          std::vector<std::uint64_t> ref(out_n), got(out_n);
          const bool ref_ok = on(k::Backend::Scalar, [&] { return k::pair_sums(in, ref); });
          const bool got_ok = on(b, [&] { return k::pair_sums(in, got); });
          CHECK(ref_ok == got_ok);
          if (ref_ok) CHECK(ref == got);
        }
      }
    });
  }

  TEST_CASE("pair_sums reports overflow in the last lane") {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    BackendGuard guard;
    for (k::Backend b : k::supported_backends()) {
      CAPTURE(k::backend_name(b));
      k::set_backend(b);
      for (std::size_t n = 2; n < 20; ++n) {
        std::vector<std::uint64_t> in(n, 1), out(n - 1);
        in[n - 1] = max;
        CHECK_FALSE(k::pair_sums(in, out));
        in[n - 1] = max - 1;
        CHECK(k::pair_sums(in, out));
        CHECK(out.back() == max);
      }
    }
  }

  TEST_CASE("pair_sums rejects mismatched spans") {
    std::vector<std::uint64_t> in(4), out(4);
    CHECK_THROWS_AS(k::pair_sums(in, out), std::invalid_argument);
  }

  TEST_CASE("kind_parity_sums matches scalar") {
    std::mt19937_64 rng(2);
    for_each_vector_backend([&](k::Backend b) {
      for (std::size_t n = 0; n < 70; ++n) {
        const auto values = random_values(rng, n, true);
        const auto kinds = random_kinds(rng, n);
        const auto ref = on(k::Backend::Scalar, [&] { return k::kind_parity_sums(values, kinds); });
        const auto got = on(b, [&] { return k::kind_parity_sums(values, kinds); });
        CHECK(ref == got);
      }
    });
  }

  TEST_CASE("kind_parity_sums carries past 64 bits") {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::vector<std::uint64_t> values(9, max);
    const std::vector<hpt::CellKind> kinds(9, hpt::CellKind::TypeB);
    BackendGuard guard;
    for (k::Backend b : k::supported_backends()) {
      k::set_backend(b);
      const auto sums = k::kind_parity_sums(values, kinds);
      CHECK(sums.at(hpt::CellKind::TypeB, 0) == static_cast<unsigned __int128>(max) * 5);
      CHECK(sums.at(hpt::CellKind::TypeB, 1) == static_cast<unsigned __int128>(max) * 4);
      CHECK(sums.at(hpt::CellKind::TypeA, 0) == 0);
    }
  }

  TEST_CASE("find_adjacent returns the leftmost hit on every backend") {
    std::mt19937_64 rng(3);
    for_each_vector_backend([&](k::Backend b) {
      for (std::size_t n = 0; n < 90; ++n) {
        std::vector<std::uint64_t> values(n);
        for (auto& v : values) v = rng() % 4;  // dense: many hits
        for (std::uint64_t x = 0; x < 4; ++x) {
          for (std::uint64_t y = 0; y < 5; ++y) {
            const auto ref = on(k::Backend::Scalar, [&] { return k::find_adjacent(values, x, y); });
            const auto got = on(b, [&] { return k::find_adjacent(values, x, y); });
            CHECK(ref == got);
          }
        }
      }
    });
  }

  TEST_CASE("find_adjacent on a known row") {
    const std::vector<std::uint64_t> row{1, 5, 4, 7, 3, 3, 8, 5, 7, 2, 2, 4, 2, 2, 7, 5, 8, 3, 3, 7, 4, 5, 1};
    CHECK(k::find_adjacent(row, 8, 5) == 6u);
    CHECK(k::find_adjacent(row, 5, 8) == 15u);
    CHECK(k::find_adjacent(row, 2, 2) == 9u);
    CHECK_FALSE(k::find_adjacent(row, 1, 1).has_value());
    CHECK_FALSE(k::find_adjacent(std::span<const std::uint64_t>{}, 1, 1).has_value());
  }

  TEST_CASE("pack_pattern_bits matches scalar across word boundaries") {
    std::mt19937_64 rng(4);
    for_each_vector_backend([&](k::Backend b) {
      for (std::size_t n : {0, 1, 5, 63, 64, 65, 127, 128, 129, 200, 1000}) {
        const auto kinds = random_kinds(rng, n);
        const std::size_t words = (n + 63) / 64;
        std::vector<std::uint64_t> ref(words, 0xdead), got(words, 0xbeef);
        on(k::Backend::Scalar, [&] { k::pack_pattern_bits(kinds, ref); return 0; });
        on(b, [&] { k::pack_pattern_bits(kinds, got); return 0; });
        CHECK(ref == got);
      }
    });
  }

  TEST_CASE("pack_pattern_bits: leftmost cell is the most significant bit") {
    using hpt::CellKind;
    // W A B A B A W  ->  1010101
    const std::vector<CellKind> kinds{CellKind::Winger, CellKind::TypeA, CellKind::TypeB,
                                      CellKind::TypeA,  CellKind::TypeB, CellKind::TypeA,
                                      CellKind::Winger};
    std::vector<std::uint64_t> words(1);
    k::pack_pattern_bits(kinds, words);
    CHECK(words[0] == 0b1010101u);
  }
}
