#include "hpt/locator.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "hpt/errors.hpp"
#include "hpt/kernels.hpp"

namespace hpt {
namespace {

Side flip(Side side) { return side == Side::Left ? Side::Right : Side::Left; }

std::optional<std::size_t> scan(const Row& row, const BigInt& first, const BigInt& second) {
  if (!row.is_wide()) {
    constexpr unsigned long kMax = std::numeric_limits<std::uint64_t>::max();
    if (first > kMax || second > kMax) return std::nullopt;
    return kernels::find_adjacent(row.narrow_values(), to_u64(first), to_u64(second));
  }
  const auto values = row.wide_values();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] == first && values[i + 1] == second) return i;
  }
  return std::nullopt;
}

void coprime_trace(const EuclidChain& chain, std::vector<DescentStep>& out) {
  out.push_back({chain.penultimate, Side::Left});
  Side side = Side::Right;
  for (std::size_t k = chain.steps(); k-- > 0;) {
    out.push_back({chain.quotients[k], side});
    side = flip(side);
  }
}

}  // namespace

EuclidChain euclid_chain(const BigInt& u, const BigInt& v) {
  if (u < 1 || v < 1) throw std::invalid_argument("euclid_chain needs positive integers");
  if (u > v) throw std::invalid_argument("euclid_chain needs u <= v");
  EuclidChain chain{u, v, {}, {}, 0, 0, 0};
  BigInt prev2 = v, prev = u;  // t_{k-2}, t_{k-1}
  while (true) {
    BigInt r = prev2 / prev;
    BigInt t = prev2 - r * prev;
    chain.quotients.push_back(r);
    if (t == 0) break;
    chain.remainders.push_back(t);
    prev2 = std::move(prev);
    prev = std::move(t);
  }
  chain.gcd = prev;
  chain.penultimate = prev2;
  for (std::size_t k = 0; k + 1 < chain.quotients.size(); ++k) chain.quotient_sum += chain.quotients[k];
  return chain;
}

BigInt locate_row(const BigInt& u, const BigInt& v) {
  if (u < 1 || u > v) throw std::invalid_argument("locate_row needs 1 <= u <= v");
  if (u == 1) return v;
  if (u == v) return v + 2;
  const EuclidChain chain = euclid_chain(u, v);
  if (chain.gcd == 1) return chain.penultimate + chain.quotient_sum;
  return chain.gcd + 1 + chain.penultimate / chain.gcd + chain.quotient_sum;
}

std::vector<DescentStep> descent_trace(const BigInt& u, const BigInt& v) {
  if (u < 1 || u > v) throw std::invalid_argument("descent_trace needs 1 <= u <= v");
  const EuclidChain chain = euclid_chain(u, v);
  std::vector<DescentStep> out;
  if (chain.gcd == 1) {
    coprime_trace(chain, out);
    return out;
  }
  // Enter the gcd-scaled copy rooted at row gcd + 1, then descend as for
  // the reduced pair.
  out.push_back({chain.gcd + 1, Side::Left});
  const BigInt d = chain.gcd;
  coprime_trace(euclid_chain(BigInt(u / d), BigInt(v / d)), out);
  return out;
}

std::string_view side_name(Side side) noexcept { return side == Side::Left ? "left" : "right"; }

std::string_view verification_name(Verification v) noexcept {
  return v == Verification::FullRow ? "full-row" : "unverified";
}

std::string_view orientation_name(Orientation o) noexcept {
  return o == Orientation::Forward ? "forward" : "mirrored";
}

bool row_within_budget(const BigInt& n, std::size_t cell_budget) {
  if (n < 0) throw std::invalid_argument("negative row index");
  if (n == 0) return cell_budget >= 1;
  // Coupled count system for q = 5 from row 1; sizes grow, so stop early.
  unsigned __int128 a = 0, b = 0;
  BigInt row = 1;
  while (true) {
    const unsigned __int128 s = a + b + 2;
    if (s > cell_budget) return false;
    if (row == n) return true;
    const unsigned __int128 next_a = a + b + 1;
    b = a + 2 * b;
    a = next_a;
    ++row;
  }
}

PairLocation locate_pair(const BigInt& u, const BigInt& v, RowCache& cache) {
  if (cache.params().q() != 5)
    throw std::invalid_argument("pair location is stated for the {4,5} triangle only");
  if (u < 1 || v < 1) throw std::invalid_argument("locate_pair needs positive integers");
  const BigInt& lo = u <= v ? u : v;
  const BigInt& hi = u <= v ? v : u;

  PairLocation out;
  out.u = u;
  out.v = v;
  out.row = locate_row(lo, hi);
  out.trace = descent_trace(lo, hi);
  if (!row_within_budget(out.row, cache.budget())) return out;

  const Row& row = cache.row(to_size(out.row));
  std::optional<std::size_t> hit = scan(row, u, v);
  Orientation orientation = Orientation::Forward;
  if (!hit) {
    hit = scan(row, v, u);
    orientation = Orientation::Mirrored;
  }
  if (!hit)
    throw LocationFailure("(" + u.get_str() + ", " + v.get_str() + ") not adjacent in row " +
                          out.row.get_str());

  // col is where u sits.
  out.col = orientation == Orientation::Forward ? *hit : *hit + 1;
  out.orientation = orientation;
  out.verified = Verification::FullRow;
  const std::size_t v_col = orientation == Orientation::Forward ? *out.col + 1 : *hit;
  out.kinds = std::array<CellKind, 2>{row.kind(*out.col), row.kind(v_col)};
  return out;
}

PairLocation locate_pair(const BigInt& u, const BigInt& v, std::size_t cell_budget) {
  RowCache cache(TriangleParams(5), cell_budget);
  return locate_pair(u, v, cache);
}

std::vector<PairLocation> embed_recurrence(const BigInt& f0, const BigInt& f1, const BigInt& eta,
                                           std::size_t m, RowCache& cache) {
  if (!(0 < f0 && f0 < f1)) throw std::invalid_argument("embed_recurrence needs 0 < f0 < f1");
  if (gcd(f0, f1) != 1) throw std::invalid_argument("embed_recurrence needs gcd(f0, f1) = 1");
  if (eta < 1) throw std::invalid_argument("embed_recurrence needs eta >= 1");
  if (m < 1) throw std::invalid_argument("embed_recurrence needs m >= 1");
  std::vector<PairLocation> out;
  BigInt prev = f0, cur = f1;
  for (std::size_t j = 0; j < m; ++j) {
    out.push_back(locate_pair(prev, cur, cache));
    BigInt next = eta * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

std::vector<PairLocation> embed_recurrence(const BigInt& f0, const BigInt& f1, const BigInt& eta,
                                           std::size_t m, std::size_t cell_budget) {
  RowCache cache(TriangleParams(5), cell_budget);
  return embed_recurrence(f0, f1, eta, m, cache);
}

}  // namespace hpt
