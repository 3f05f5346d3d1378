#include "hpt/sequences.hpp"

#include <stdexcept>
#include <string>

#include "hpt/errors.hpp"

namespace hpt {
namespace {

void check_args(int q, std::size_t n) {
  if (q < 4) throw std::invalid_argument("q must be at least 4, got " + std::to_string(q));
  if (n < 1) throw std::invalid_argument("row index must be at least 1");
}

struct Affine {
  // next = (a1 x + b1 y + c1, a2 x + b2 y + c2)
  long a1, b1, c1, a2, b2, c2;
};

std::pair<BigInt, BigInt> iterate_coupled(const Affine& sys, std::size_t n) {
  BigInt x = 0, y = 0;  // row 1
  for (std::size_t i = 1; i < n; ++i) {
    BigInt nx = sys.a1 * x + sys.b1 * y + sys.c1;
    BigInt ny = sys.a2 * x + sys.b2 * y + sys.c2;
    x = std::move(nx);
    y = std::move(ny);
  }
  return {x, y};
}

// x_n = c1 x_{n-1} + c2 x_{n-2} + c3 x_{n-3} from x_1, x_2, x_3.
std::vector<BigInt> ternary_series(long c1, long c2, long c3, BigInt x1, BigInt x2, BigInt x3,
                                   std::size_t n_max) {
  std::vector<BigInt> out{std::move(x1), std::move(x2), std::move(x3)};
  for (std::size_t n = 4; n <= n_max; ++n) {
    const std::size_t i = n - 1;
    out.push_back(c1 * out[i - 1] + c2 * out[i - 2] + c3 * out[i - 3]);
  }
  out.resize(n_max);
  return out;
}

std::vector<CountTriple> count_ternary_series(int q, std::size_t n_max) {
  const long k = q - 1;
  const auto a = ternary_series(k, -k, 1, 0, 1, 2, n_max);
  const auto b = ternary_series(k, -k, 1, 0, 0, q - 4, n_max);
  const auto s = ternary_series(k, -k, 1, 2, 3, q, n_max);
  std::vector<CountTriple> out;
  for (std::size_t i = 0; i < n_max; ++i) out.push_back({a[i], b[i], s[i]});
  return out;
}

std::vector<SumTriple> sum_ternary_series(int q, std::size_t n_max) {
  const long c1 = q, c2 = -(q + 1), c3 = 2;
  const auto a = ternary_series(c1, c2, c3, 0, 2, 6, n_max);
  const auto b = ternary_series(c1, c2, c3, 0, 0, 2 * (q - 4), n_max);
  const auto s = ternary_series(c1, c2, c3, 2, 4, 2 * q, n_max);
  std::vector<SumTriple> out;
  for (std::size_t i = 0; i < n_max; ++i) out.push_back({a[i], b[i], s[i]});
  return out;
}

Rational frac(long num, long den) { return make_rational(num, den); }

}  // namespace

CountTriple counts_coupled(int q, std::size_t n) {
  check_args(q, n);
  auto [a, b] = iterate_coupled({1, 1, 1, q - 4, q - 3, 0}, n);
  BigInt s = a + b + 2;
  return {std::move(a), std::move(b), std::move(s)};
}

CountTriple counts_ternary(int q, std::size_t n) {
  check_args(q, n);
  return count_ternary_series(q, n).back();
}

std::vector<CountTriple> counts_series(int q, std::size_t n_max) {
  check_args(q, n_max);
  return count_ternary_series(q, n_max);
}

ClosedFormTriple count_closed_forms(int q) {
  check_args(q, 1);
  if (q == 4)
    throw DegenerateDiscriminant("closed form for q = 4 has D = q^2 - 4q = 0 and divides by q(q-4)");
  const BigInt disc = q * q - 4 * q;
  const QuadElem alpha(frac(q - 2, 2), frac(1, 2), disc);
  const long qq4 = 2L * q * (q - 4);
  return {
      {QuadElem(frac(2 - q, 2), frac(q * q - 4 * q + 2, qq4), disc), alpha, 1},
      {QuadElem(frac(q - 3, 2), frac(1 - q, 2L * q), disc), alpha, -1},
      {QuadElem(frac(-1, 2), frac(q - 2, qq4), disc), alpha, 2},
  };
}

CountTriple counts_closed(int q, std::size_t n) {
  check_args(q, n);
  const ClosedFormTriple f = count_closed_forms(q);
  return {f.a.evaluate(n), f.b.evaluate(n), f.s.evaluate(n)};
}

SumTriple sums_coupled(int q, std::size_t n) {
  check_args(q, n);
  auto [a, b] = iterate_coupled({2, 2, 2, q - 4, q - 3, 0}, n);
  BigInt s = a + b + 2;
  return {std::move(a), std::move(b), std::move(s)};
}

SumTriple sums_ternary(int q, std::size_t n) {
  check_args(q, n);
  return sum_ternary_series(q, n).back();
}

std::vector<SumTriple> sums_series(int q, std::size_t n_max) {
  check_args(q, n_max);
  return sum_ternary_series(q, n_max);
}

ClosedFormTriple sum_closed_forms(int q) {
  check_args(q, 1);
  const long d = static_cast<long>(q) * q - 2L * q - 7;
  const BigInt disc = d;
  const QuadElem alpha(frac(q - 1, 2), frac(1, 2), disc);
  return {
      {QuadElem(frac(1 - q, 2), frac(q * q - 2 * q - 3, 2 * d), disc), alpha, 2},
      {QuadElem(frac(q - 2, 2), frac(-(q * q - 3 * q - 2), 2 * d), disc), alpha, -2},
      {QuadElem(frac(-1, 2), frac(q - 1, 2 * d), disc), alpha, 2},
  };
}

SumTriple sums_closed(int q, std::size_t n) {
  check_args(q, n);
  const ClosedFormTriple f = sum_closed_forms(q);
  return {f.a.evaluate(n), f.b.evaluate(n), f.s.evaluate(n)};
}

BigInt ClosedForm::evaluate(std::size_t n) const {
  const QuadElem value = coeff * pow(root, n) + coeff.conj() * pow(root.conj(), n) +
                         QuadElem::rational(constant, root.disc());
  return as_integer(value);
}

int parity_s(std::size_t n) {
  if (n < 1) throw std::invalid_argument("parity_s needs n >= 1");
  return n % 3 == 1 ? 0 : 1;
}

BigInt alt_sum(std::size_t n) {
  if (n == 0) return 1;
  if (n % 3 == 1) return 0;
  if (n == 2) return 0;
  if (n == 3) return -2;
  return 2;
}

AltTriple alt_triple_from_row(const Row& row) {
  const KindParityTotals t = kind_parity_totals(row);
  const auto alternating = [&t](CellKind kind) {
    const auto& by_parity = t[static_cast<std::size_t>(kind)];
    return BigInt(by_parity[0] - by_parity[1]);
  };
  AltTriple out{alternating(CellKind::TypeA), alternating(CellKind::TypeB), 0};
  out.total = out.alt_a + out.alt_b + alternating(CellKind::Winger);
  return out;
}

AltPair alt_influence_step(const AltPair& current) {
  return {-4 * current.alt_a - 8 * current.alt_b - 6, 2 * current.alt_a + 4 * current.alt_b + 2};
}

AltTriple alt_triple_by_influence(std::size_t n) {
  if (n % 3 == 1) return {0, 0, 0};
  AltPair pair = (n % 3 == 0) ? AltPair{0, 0} : AltPair{-2, 0};
  for (std::size_t m = n % 3; m < n; m += 3) pair = alt_influence_step(pair);
  // Row 0 is a single winger; every other odd-length row has two.
  const BigInt wingers = (n == 0) ? 1 : 2;
  BigInt total = pair.alt_a + pair.alt_b + wingers;
  return {std::move(pair.alt_a), std::move(pair.alt_b), std::move(total)};
}

BigInt weighted_sum(std::size_t n, const BigInt& v, const BigInt& w) {
  if (n < 1) throw std::invalid_argument("weighted_sum needs n >= 1");
  const BigInt total = sums_coupled(5, n).sum;
  const BigInt alternating = alt_sum(n);
  const BigInt even_part = total + alternating;
  const BigInt odd_part = total - alternating;
  if (even_part % 2 != 0 || odd_part % 2 != 0)
    throw NotIntegral("row sum and alternating sum of row " + std::to_string(n) +
                      " differ in parity");
  return BigInt(even_part / 2) * v + BigInt(odd_part / 2) * w;
}

BigInt weighted_sum_direct(const Row& row, const BigInt& v, const BigInt& w) {
  const KindParityTotals t = kind_parity_totals(row);
  BigInt even = 0, odd = 0;
  for (const auto& by_parity : t) {
    even += by_parity[0];
    odd += by_parity[1];
  }
  return even * v + odd * w;
}

}  // namespace hpt
