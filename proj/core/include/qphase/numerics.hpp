#pragma once

#include <cstdint>

namespace qphase {

/// A real number stored as sign * exp(log_magnitude).
///
/// Factorials, Hermite values and powers of the displacement overflow double
/// long before the photon numbers we care about (m ~ 2000), so every such
/// quantity is carried in this form and exponentiated once at the end.
struct LogScaled {
  int sign = 0;               // -1, 0 or +1; 0 means exactly zero
  double log_magnitude = 0.;  // ignored when sign == 0

  static LogScaled zero() { return {}; }
  static LogScaled one() { return {1, 0.}; }
  static LogScaled from_value(double v);

  double value() const;
  bool is_zero() const { return sign == 0; }
};

LogScaled operator*(const LogScaled& a, const LogScaled& b);
LogScaled operator/(const LogScaled& a, const LogScaled& b);

/// ln(k!). Long double so that the result stays within 1e-12 of the true
/// value for k up to 1e4, where ln(k!) is ~8e4.
long double log_factorial(std::uint32_t k);

/// Physicists' Hermite polynomial H_n(x) from the three-term recurrence,
/// renormalised into log form at every step.
LogScaled hermite(std::uint32_t n, double x);

/// Associated Laguerre polynomial L_n^{(k)}(x).
LogScaled laguerre_assoc(std::uint32_t n, std::uint32_t k, double x);

/// Angle of the point (x, y) in (-pi, pi]. Note the (y, x) argument order,
/// as in atan2. Throws std::domain_error at the origin.
double full_angle(double y, double x);

}  // namespace qphase
