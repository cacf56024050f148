#pragma once

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include "qphase/states.hpp"

namespace qphase {

/// alpha = x + i y.
struct PhasePoint {
  double x = 0.;
  double y = 0.;
};

/// Modulus and phase of a phase-plane amplitude; phase in (-pi, pi].
struct PolarAmplitude {
  double modulus = 0.;
  double phase = 0.;

  std::complex<double> value() const { return std::polar(modulus, phase); }
};

/// Uniform node grid, nodes at x_min + i (x_max - x_min)/(nx - 1).
struct GridSpec {
  double x_min = -1., x_max = 1.;
  double y_min = -1., y_max = 1.;
  std::uint32_t nx = 2, ny = 2;

  void validate() const;  // throws std::invalid_argument
  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dy() const { return (y_max - y_min) / (ny - 1); }
  double x(std::uint32_t i) const { return x_min + i * dx(); }
  double y(std::uint32_t j) const { return y_min + j * dy(); }
  double cell_area() const { return dx() * dy(); }

  /// Smallest grid covering the window with node spacing <= step.
  static GridSpec covering(double x_min, double x_max, double y_min, double y_max, double step);
};

/// Wraps an angle onto (-pi, pi].
double wrap_angle(double a);

/// <m|alpha>; phase m * angle(alpha). Zero modulus carries phase 0.
PolarAmplitude fock_projection(std::uint32_t m, PhasePoint p);

/// <alpha|n,beta>. For real beta the phase is -(beta y + n angle(alpha - beta)).
PolarAmplitude displaced_projection(const DisplacedNumberState& st, PhasePoint p);

/// <alpha|beta,r>; phase -y beta sech r + x y tanh r.
PolarAmplitude tpcs_projection(const TwoPhotonCoherentState& st, PhasePoint p);

/// <alpha|psi> for either state family.
PolarAmplitude state_projection(const State& st, PhasePoint p);

/// Q = |<alpha|psi>|^2 / pi.
double q_value(double projection_modulus);

struct FockSelector {
  std::uint32_t m = 0;
};
/// |<m|alpha><alpha|n,beta>|, the product surface of two overlapping states.
struct ProductSelector {
  std::uint32_t m = 0;
  DisplacedNumberState state;
};
using QGridSelector = std::variant<FockSelector, DisplacedNumberState, TwoPhotonCoherentState, ProductSelector>;

struct QSample {
  double x, y, q;
};

/// Row-major samples (y outer, x inner). Q for single states; product of
/// moduli for ProductSelector.
std::vector<QSample> q_grid(const QGridSelector& sel, const GridSpec& g);

/// Window and step wide enough that Q of the selected state is below ~1e-12
/// of its peak on the boundary. Step is 0.05, tightened for strong squeezing.
GridSpec default_q_grid(const QGridSelector& sel);

/// Sum of q * cell area.
double grid_integral(const std::vector<QSample>& samples, const GridSpec& g);

struct OracleResult {
  std::vector<std::complex<double>> amplitudes;  // index m = 0..m_max
  double boundary_ratio = 0.;  // max boundary |integrand| / max |integrand|
  bool window_adequate = true; // boundary_ratio <= 1e-10
};

/// <m|psi> = (1/pi) int d^2alpha <m|alpha><alpha|psi> on the node grid with
/// equal cell weights, for every m up to m_max in one pass.
OracleResult overlap_amplitudes_oracle(std::uint32_t m_max, const State& st, const GridSpec& g);

/// Single-index convenience form.
std::complex<double> overlap_amplitude_oracle(std::uint32_t m, const State& st, const GridSpec& g,
                                              bool* window_adequate = nullptr);

/// Square window of radius max(sqrt m + |beta| + e^r + 6, state extent), step 0.05
/// (0.5 e^{-r} when smaller).
GridSpec default_oracle_grid(std::uint32_t m_max, const State& st);

}  // namespace qphase
