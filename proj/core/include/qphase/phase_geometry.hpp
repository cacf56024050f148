#pragma once

#include <cstdint>
#include <optional>

#include "qphase/states.hpp"

namespace qphase {

/// Annulus sqrt(m - 1/2) <= |alpha| <= sqrt(m + 1/2) standing in for |m>.
/// For m = 0 the inner radius is clamped to 0, giving the disk of area pi/2.
struct RingBand {
  std::uint32_t m = 0;
  double r_inner = 0.;
  double r_outer = 0.;

  double area() const;
};

RingBand ring_band(std::uint32_t m);

/// Upper intersection point x0 + i y0 of |alpha| = sqrt(m) and |alpha - beta| = sqrt(n).
struct CircleIntersection {
  double x0 = 0.;
  double y0 = 0.;
};

/// Empty when the two circles do not meet. Throws std::invalid_argument unless beta > 0.
std::optional<CircleIntersection> circle_intersection(std::uint32_t m, std::uint32_t n, double beta);

enum class LensConfig { crossing, disjoint, contained };

struct LensArea {
  double area = 0.;
  LensConfig config = LensConfig::disjoint;
};

/// Area shared by the disks of radius r (centre 0) and R (centre beta).
/// Disjoint or tangent-from-outside gives 0; containment gives the smaller
/// disk, flagged as such.
LensArea lens_area(double r, double R, double beta);

/// Same as lens_area but with squared radii, which avoids a sqrt/square
/// round trip when the radii are sqrt of integers.
LensArea lens_area_sq(double r_sq, double R_sq, double beta);

/// One of the two symmetric components of the intersection of ring bands m
/// (centre 0) and n (centre beta).
double band_overlap_area(std::uint32_t m, std::uint32_t n, double beta);

/// psi = m angle(alpha+) - n angle(alpha+ - beta) - beta y0 at the upper
/// circle intersection, unreduced. Throws std::domain_error without one.
double displaced_phase(std::uint32_t m, std::uint32_t n, double beta);

/// a(sqrt m, sqrt n) - n pi. Equal to displaced_phase; the two are computed
/// independently so the identity can be checked.
double displaced_phase_geometric(std::uint32_t m, std::uint32_t n, double beta);

/// Semiclassical phase with turning point x_c = (m - n)/(sqrt2 beta) + sqrt2 beta / 2.
/// Throws std::domain_error when an arcsin argument leaves [-1, 1].
double wkb_phase(std::uint32_t m, std::uint32_t n, double beta);

/// Region where the squeezed state's Q function concentrates.
struct EllipseSpec {
  double center_x = 0.;
  double semi_x = 1.;
  double semi_y = 1.;
};

EllipseSpec ellipse_spec(const TwoPhotonCoherentState& st);

/// Abscissa used for the vertical-line intersection. `consistent` puts it at
/// the ellipse centre beta e^{-r}; `paper_literal` uses beta e^{-2r}.
enum class X2Mode { consistent, paper_literal };

double x2_position(const TwoPhotonCoherentState& st, X2Mode mode);

struct TpcsIntersection {
  double x2 = 0.;
  double y2 = 0.;
  bool vertical_line_regime = true;  // ellipse half-width <= 0.2 sqrt(m)
};

std::optional<TpcsIntersection> tpcs_intersection(std::uint32_t m, const TwoPhotonCoherentState& st,
                                                  X2Mode mode = X2Mode::consistent);

/// m angle(alpha+) - Y2 beta sech r + X2 Y2 tanh r. Throws std::domain_error
/// without an intersection.
double tpcs_phase(std::uint32_t m, const TwoPhotonCoherentState& st, X2Mode mode = X2Mode::consistent);

/// m angle(alpha+) - X2 Y2; equals tpcs_phase when X2 = beta e^{-r}.
double tpcs_phase_reduced(std::uint32_t m, const TwoPhotonCoherentState& st, X2Mode mode = X2Mode::consistent);

/// m pi / 2 - 2 X2 Y2, the strong-squeezing form.
double tpcs_phase_high_r(std::uint32_t m, const TwoPhotonCoherentState& st, X2Mode mode = X2Mode::consistent);

enum class AreaClamp { none, below_band, beyond_tip };

struct TpcsArea {
  double area = 0.;
  AreaClamp clamp = AreaClamp::none;
};

/// Rectangle approximation dy * dx of one band/ellipse overlap component.
TpcsArea tpcs_overlap_area(std::uint32_t m, const TwoPhotonCoherentState& st);

}  // namespace qphase
