#include "hpt/linrec.hpp"

#include <stdexcept>

#include "hpt/errors.hpp"

namespace hpt {
namespace {

void require_coupling(const CoupledSystem& sys, Hypothesis h) {
  if (h == Hypothesis::Enforce && sys.a2 * sys.b1 == 0)
    throw HypothesisViolated("elimination needs a2 * b1 != 0 (got a2 = " + to_string(sys.a2) +
                             ", b1 = " + to_string(sys.b1) + ")");
}

}  // namespace

TernaryCoeffs eliminate(const CoupledSystem& sys, Hypothesis h) {
  require_coupling(sys, h);
  const Rational cross = sys.a1 * sys.b2 - sys.a2 * sys.b1;
  return {sys.a1 + sys.b2 + 1, -cross - sys.a1 - sys.b2, cross};
}

BinaryCoeffs eliminate_homogeneous(const CoupledSystem& sys, Hypothesis h) {
  if (sys.c1 != 0 || sys.c2 != 0)
    throw std::invalid_argument("homogeneous elimination needs c1 = c2 = 0");
  require_coupling(sys, h);
  return {sys.a1 + sys.b2, sys.a2 * sys.b1 - sys.a1 * sys.b2};
}

bool check_satisfies(std::span<const Rational> seq, const TernaryCoeffs& coeffs) {
  if (seq.size() < 4) throw std::invalid_argument("need at least 4 terms");
  for (std::size_t n = 0; n + 3 < seq.size(); ++n) {
    if (seq[n + 3] != coeffs.A * seq[n + 2] + coeffs.B * seq[n + 1] + coeffs.C * seq[n])
      return false;
  }
  return true;
}

bool check_satisfies(std::span<const Rational> seq, const BinaryCoeffs& coeffs) {
  if (seq.size() < 3) throw std::invalid_argument("need at least 3 terms");
  for (std::size_t n = 0; n + 2 < seq.size(); ++n) {
    if (seq[n + 2] != coeffs.A * seq[n + 1] + coeffs.B * seq[n]) return false;
  }
  return true;
}

std::pair<std::vector<Rational>, std::vector<Rational>> iterate(const CoupledSystem& sys,
                                                                const Rational& x0,
                                                                const Rational& y0,
                                                                std::size_t steps) {
  std::vector<Rational> xs{x0}, ys{y0};
  for (std::size_t k = 0; k < steps; ++k) {
    const Rational& x = xs.back();
    const Rational& y = ys.back();
    Rational nx = sys.a1 * x + sys.b1 * y + sys.c1;
    Rational ny = sys.a2 * x + sys.b2 * y + sys.c2;
    xs.push_back(std::move(nx));
    ys.push_back(std::move(ny));
  }
  return {std::move(xs), std::move(ys)};
}

}  // namespace hpt
