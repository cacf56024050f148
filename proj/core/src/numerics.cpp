#include "qphase/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qphase {

LogScaled LogScaled::from_value(double v) {
  if (v == 0.) return zero();
  return {v > 0. ? 1 : -1, std::log(std::fabs(v))};
}

double LogScaled::value() const {
  if (sign == 0) return 0.;
  return sign * std::exp(log_magnitude);
}

LogScaled operator*(const LogScaled& a, const LogScaled& b) {
  if (a.sign == 0 || b.sign == 0) return LogScaled::zero();
  return {a.sign * b.sign, a.log_magnitude + b.log_magnitude};
}

LogScaled operator/(const LogScaled& a, const LogScaled& b) {
  if (b.sign == 0) throw std::domain_error("LogScaled: division by zero");
  if (a.sign == 0) return LogScaled::zero();
  return {a.sign * b.sign, a.log_magnitude - b.log_magnitude};
}

long double log_factorial(std::uint32_t k) {
  if (k < 2) return 0.L;
  return std::lgamma(static_cast<long double>(k) + 1.L);
}

namespace {

// Runs a three-term recurrence p_{j+1} = a_j p_j - b_j p_{j-1} starting from
// (p_0, p_1), keeping the last two terms divided by a running scale.
template <class Step>
LogScaled scaled_recurrence(std::uint32_t n, double p0, double p1, Step step) {
  if (n == 0) return LogScaled::from_value(p0);
  double prev = p0;
  double cur = p1;
  double log_scale = 0.;
  for (std::uint32_t j = 1; j < n; ++j) {
    const double next = step(j, cur, prev);
    prev = cur;
    cur = next;
    const double norm = cur != 0. ? std::fabs(cur) : std::fabs(prev);
    if (norm != 0.) {
      prev /= norm;
      cur /= norm;
      log_scale += std::log(norm);
    }
  }
  if (cur == 0.) return LogScaled::zero();
  return {cur > 0. ? 1 : -1, log_scale + std::log(std::fabs(cur))};
}

}  // namespace

LogScaled hermite(std::uint32_t n, double x) {
  return scaled_recurrence(n, 1., 2. * x, [x](std::uint32_t j, double cur, double prev) {
    return 2. * x * cur - 2. * static_cast<double>(j) * prev;
  });
}

LogScaled laguerre_assoc(std::uint32_t n, std::uint32_t k, double x) {
  const double kk = static_cast<double>(k);
  return scaled_recurrence(n, 1., 1. + kk - x, [kk, x](std::uint32_t j, double cur, double prev) {
    const double jj = static_cast<double>(j);
    return ((2. * jj + 1. + kk - x) * cur - (jj + kk) * prev) / (jj + 1.);
  });
}

double full_angle(double y, double x) {
  if (x == 0. && y == 0.) throw std::domain_error("full_angle: undefined at the origin");
  const double a = std::atan2(y, x);
  // atan2(-0., x<0) gives -pi; fold onto the half-open range (-pi, pi].
  return a <= -std::numbers::pi ? std::numbers::pi : a;
}

}  // namespace qphase
