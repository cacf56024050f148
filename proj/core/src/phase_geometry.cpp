#include "qphase/phase_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qphase/numerics.hpp"

namespace qphase {

using std::numbers::pi;

double RingBand::area() const {
  const double outer = m + 0.5;
  const double inner = m == 0 ? 0. : m - 0.5;
  return pi * (outer - inner);
}

RingBand ring_band(std::uint32_t m) {
  return {m, m == 0 ? 0. : std::sqrt(m - 0.5), std::sqrt(m + 0.5)};
}

namespace {

void require_positive_beta(double beta) {
  if (!(beta > 0.) || !std::isfinite(beta)) throw std::invalid_argument("displacement beta must be > 0");
}

// m - x0^2 can come out as -1e-16 at exact tangency.
std::optional<double> tangent_sqrt(double d, double scale) {
  if (d >= 0.) return std::sqrt(d);
  if (d > -1e-12 * std::max(1., scale)) return 0.;
  return std::nullopt;
}

}  // namespace

std::optional<CircleIntersection> circle_intersection(std::uint32_t m, std::uint32_t n, double beta) {
  require_positive_beta(beta);
  const double mm = m, nn = n;
  const double x0 = (beta * beta + mm - nn) / (2. * beta);
  const auto y0 = tangent_sqrt(mm - x0 * x0, mm);
  if (!y0) return std::nullopt;
  return CircleIntersection{x0, *y0};
}

LensArea lens_area_sq(double r_sq, double R_sq, double beta) {
  require_positive_beta(beta);
  if (!(r_sq > 0.) || !(R_sq > 0.)) return {0., LensConfig::disjoint};
  const double r = std::sqrt(r_sq), R = std::sqrt(R_sq);
  if (beta >= r + R) return {0., LensConfig::disjoint};
  if (beta <= std::fabs(r - R)) return {pi * std::min(r_sq, R_sq), LensConfig::contained};
  const double x1 = (r_sq + beta * beta - R_sq) / (2. * beta);
  const double y1 = std::sqrt(std::max(0., r_sq - x1 * x1));
  const double delta = full_angle(y1, x1);
  const double gamma = full_angle(y1, beta - x1);
  return {r_sq * delta + R_sq * gamma - beta * y1, LensConfig::crossing};
}

LensArea lens_area(double r, double R, double beta) {
  if (r < 0. || R < 0.) throw std::invalid_argument("lens_area: radii must be non-negative");
  return lens_area_sq(r * r, R * R, beta);
}

double band_overlap_area(std::uint32_t m, std::uint32_t n, double beta) {
  require_positive_beta(beta);
  const double m_out = m + 0.5, n_out = n + 0.5;
  const double m_in = m == 0 ? 0. : m - 0.5;
  const double n_in = n == 0 ? 0. : n - 0.5;
  const auto a = [beta](double r_sq, double R_sq) { return lens_area_sq(r_sq, R_sq, beta).area; };
  const double total = a(m_out, n_out) - a(m_in, n_out) - a(m_out, n_in) + a(m_in, n_in);
  return std::max(0., 0.5 * total);
}

double displaced_phase(std::uint32_t m, std::uint32_t n, double beta) {
  const auto p = circle_intersection(m, n, beta);
  if (!p) throw std::domain_error("displaced_phase: circles do not intersect");
  double psi = -beta * p->y0;
  if (m > 0) psi += m * full_angle(p->y0, p->x0);
  if (n > 0) psi -= n * full_angle(p->y0, p->x0 - beta);
  return psi;
}

double displaced_phase_geometric(std::uint32_t m, std::uint32_t n, double beta) {
  if (!circle_intersection(m, n, beta)) {
    throw std::domain_error("displaced_phase_geometric: circles do not intersect");
  }
  return lens_area_sq(m, n, beta).area - n * pi;
}

double wkb_phase(std::uint32_t m, std::uint32_t n, double beta) {
  require_positive_beta(beta);
  const double s2b = std::numbers::sqrt2 * beta;
  const double mm = m, nn = n;
  const double xc = (mm - nn) / s2b + s2b / 2.;
  const double a1 = xc / std::sqrt(2. * mm + 1.);
  const double a2 = (xc - s2b) / std::sqrt(2. * nn + 1.);
  constexpr double kSlack = 1e-12;
  if (std::fabs(a1) > 1. + kSlack || std::fabs(a2) > 1. + kSlack) {
    throw std::domain_error("wkb_phase: turning point outside the classically allowed range");
  }
  const double s1 = std::asin(std::clamp(a1, -1., 1.));
  const double s2 = std::asin(std::clamp(a2, -1., 1.));
  return -(mm + 0.5) * s1 + (nn + 0.5) * s2 - s2b / 2. * std::sqrt(std::max(0., 2. * mm + 1. - xc * xc)) -
         (nn - mm) * pi / 2. + pi / 4.;
}

EllipseSpec ellipse_spec(const TwoPhotonCoherentState& st) {
  if (!(st.r >= 0.)) throw std::invalid_argument("two-photon coherent state needs r >= 0");
  return {st.beta * std::exp(-st.r), std::exp(-st.r), std::exp(st.r)};
}

double x2_position(const TwoPhotonCoherentState& st, X2Mode mode) {
  return st.beta * std::exp(mode == X2Mode::consistent ? -st.r : -2. * st.r);
}

std::optional<TpcsIntersection> tpcs_intersection(std::uint32_t m, const TwoPhotonCoherentState& st,
                                                  X2Mode mode) {
  const double x2 = x2_position(st, mode);
  const double d = m - x2 * x2;
  if (d < 0.) return std::nullopt;
  const bool regime = std::exp(-st.r) <= 0.2 * std::sqrt(static_cast<double>(m));
  return TpcsIntersection{x2, std::sqrt(d), regime};
}

namespace {

TpcsIntersection require_tpcs_intersection(std::uint32_t m, const TwoPhotonCoherentState& st, X2Mode mode) {
  const auto p = tpcs_intersection(m, st, mode);
  if (!p) throw std::domain_error("tpcs phase: circle does not reach the ellipse");
  return *p;
}

double fock_angle_term(std::uint32_t m, const TpcsIntersection& p) {
  return m == 0 ? 0. : m * full_angle(p.y2, p.x2);
}

}  // namespace

double tpcs_phase(std::uint32_t m, const TwoPhotonCoherentState& st, X2Mode mode) {
  const auto p = require_tpcs_intersection(m, st, mode);
  return fock_angle_term(m, p) - p.y2 * st.beta / std::cosh(st.r) + p.x2 * p.y2 * std::tanh(st.r);
}

double tpcs_phase_reduced(std::uint32_t m, const TwoPhotonCoherentState& st, X2Mode mode) {
  const auto p = require_tpcs_intersection(m, st, mode);
  return fock_angle_term(m, p) - p.x2 * p.y2;
}

double tpcs_phase_high_r(std::uint32_t m, const TwoPhotonCoherentState& st, X2Mode mode) {
  const auto p = require_tpcs_intersection(m, st, mode);
  return m * pi / 2. - 2. * p.x2 * p.y2;
}

TpcsArea tpcs_overlap_area(std::uint32_t m, const TwoPhotonCoherentState& st) {
  const double shift = st.beta * st.beta * std::exp(-2. * st.r);
  const double mm = m;
  if (mm - 0.5 < shift) return {0., AreaClamp::below_band};
  const double reach = (mm - shift) * std::exp(-2. * st.r);
  if (reach > 1.) return {0., AreaClamp::beyond_tip};
  const double dy = std::sqrt(mm + 0.5 - shift) - std::sqrt(mm - 0.5 - shift);
  const double dx = 2. * std::exp(-st.r) * std::sqrt(1. - reach);
  return {dx * dy, AreaClamp::none};
}

}  // namespace qphase
