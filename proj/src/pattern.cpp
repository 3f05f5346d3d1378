#include "hpt/pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hpt/kernels.hpp"
#include "hpt/sequences.hpp"

namespace hpt {
namespace {

void require_q5(const RowCache& cache) {
  if (cache.params().q() != 5)
    throw std::invalid_argument("pattern results are stated for the {4,5} triangle only");
}

bool is_b(CellKind kind) { return kind != CellKind::TypeA; }

bool same_pattern(std::span<const CellKind> a, std::span<const CellKind> b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(),
                    [](CellKind x, CellKind y) { return is_b(x) == is_b(y); });
}

}  // namespace

std::string PatternCode::binary() const {
  std::string out = phi.get_str(2);
  if (out.size() < length) out.insert(0, length - out.size(), '0');
  return out;
}

PatternCode encode_row(const Row& row) {
  std::vector<std::uint64_t> words((row.size() + 63) / 64);
  kernels::pack_pattern_bits(row.kinds(), words);
  PatternCode code;
  code.n = row.index();
  code.length = row.size();
  mpz_import(code.phi.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
  return code;
}

std::string pattern_string(const Row& row) {
  std::string out;
  out.reserve(row.size());
  for (CellKind k : row.kinds()) out.push_back(is_b(k) ? 'B' : 'A');
  return out;
}

BigInt phi(RowCache& cache, std::size_t n) {
  require_q5(cache);
  return encode_row(cache.row(n)).phi;
}

BigInt big_phi(RowCache& cache, std::size_t n) {
  require_q5(cache);
  return phi(cache, n + 1) - phi(cache, n);
}

std::uint64_t cap_s_exponent(std::size_t n) {
  if (n < 1) throw std::invalid_argument("S_n needs n >= 1");
  const auto s = counts_series(5, n + 1);
  return to_u64(s[n].s - s[n - 1].s);
}

BigInt cap_s(std::size_t n) { return pow2(cap_s_exponent(n)); }

bool verify_phi_recurrence(RowCache& cache, std::size_t n) {
  require_q5(cache);
  if (n < 3) throw std::invalid_argument("the Phi recurrence is stated for n >= 3");
  const std::uint64_t e_n = cap_s_exponent(n);
  const std::uint64_t e_prev = cap_s_exponent(n - 1);
  if (e_n < e_prev) return false;

  const BigInt phi_prev2 = big_phi(cache, n - 2);
  const BigInt phi_prev = big_phi(cache, n - 1);
  const BigInt phi_n = big_phi(cache, n);

  // Every S is a power of two, so the products are shifts.
  const BigInt rhs = (phi_prev << (e_n - e_prev)) + (phi_prev << e_n) + (phi_prev << e_prev) -
                     (phi_prev2 << (2 * e_prev));
  return phi_n == rhs;
}

bool check_prefix(RowCache& cache, std::size_t n) {
  require_q5(cache);
  if (n == 1) throw std::invalid_argument("the prefix property excludes n = 1");
  const Row& row = cache.row(n);
  const Row& next = cache.row(n + 1);
  if (next.size() < row.size()) return false;
  return same_pattern(next.kinds().first(row.size()), row.kinds());
}

bool check_central_copy(RowCache& cache, std::size_t n) {
  require_q5(cache);
  const Row& row = cache.row(n);
  const Row& later = cache.row(n + 3);
  if (later.size() < row.size() || (later.size() - row.size()) % 2 != 0) return false;
  const std::size_t offset = (later.size() - row.size()) / 2;
  return same_pattern(later.kinds().subspan(offset, row.size()), row.kinds());
}

bool check_central_value(RowCache& cache, std::size_t k) {
  require_q5(cache);
  if (k < 1) throw std::invalid_argument("central value check needs k >= 1");
  const Row& row = cache.row(3 * k);
  if (row.size() % 2 == 0) return false;
  const Cell middle = central_cell(row);
  return middle.kind == CellKind::TypeB && middle.value == pow2(k);
}

}  // namespace hpt
