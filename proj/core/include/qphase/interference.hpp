#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qphase/phase_geometry.hpp"
#include "qphase/states.hpp"

namespace qphase {

/// Two readings of the area prefactor. `amplitude` squares the two-branch
/// amplitude (sqrt(A)/pi) (e^{i psi} + e^{-i psi}) giving 4 A cos^2(psi) / pi^2;
/// `paper_final` is A cos^2(psi) / pi. They differ by the constant 4/pi.
enum class PrefactorMode { amplitude, paper_final };

double prefactor(PrefactorMode mode);

/// Which expression supplies the squeezed-state interference phase.
enum class TpcsPhaseForm { full, high_r };

struct TpcsApproxOptions {
  PrefactorMode prefactor = PrefactorMode::amplitude;
  X2Mode x2 = X2Mode::consistent;
  TpcsPhaseForm phase = TpcsPhaseForm::full;
};

/// Area-and-phase estimate of P_mn(beta); 0 where the bands do not overlap.
/// Not normalised.
double approx_displaced_pmf(std::uint32_t m, std::uint32_t n, double beta,
                            PrefactorMode mode = PrefactorMode::amplitude);

/// Area-and-phase estimate of |<m|beta,r>|^2 in the vertical-line picture.
double approx_tpcs_pmf(std::uint32_t m, const TwoPhotonCoherentState& st, const TpcsApproxOptions& opt = {});

/// (A_m / 2 pi) [1 + (-1)^m cos(4 X2 Y2)].
double tpcs_parity_limit_pmf(std::uint32_t m, const TwoPhotonCoherentState& st, X2Mode mode = X2Mode::consistent);

Pmf approx_pmf_table(const DisplacedNumberState& st, std::uint32_t truncation,
                     PrefactorMode mode = PrefactorMode::amplitude);
Pmf approx_pmf_table(const TwoPhotonCoherentState& st, std::uint32_t truncation, const TpcsApproxOptions& opt = {});
Pmf parity_limit_table(const TwoPhotonCoherentState& st, std::uint32_t truncation,
                       X2Mode mode = X2Mode::consistent);

/// Interior strict local minima. A run of equal values counts once, at its
/// leftmost index, when both outer neighbours are larger.
std::vector<std::size_t> interior_minima(std::span<const double> v);

struct ComparisonRow {
  std::size_t m = 0;
  double p_exact = 0.;
  double p_approx = 0.;
  double area = 0.;
  std::optional<double> phase;  // empty where no intersection exists
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  double max_abs_diff = 0.;  // over indices where both values exceed 1e-15
  std::vector<std::size_t> exact_minima;
  std::vector<std::size_t> approx_minima;
};

/// Throws std::invalid_argument when the truncations differ.
ComparisonReport compare(const Pmf& exact, const Pmf& approx);

/// compare() plus the per-index overlap area and interference phase.
ComparisonReport compare_displaced(const DisplacedNumberState& st, std::uint32_t truncation,
                                   PrefactorMode mode = PrefactorMode::amplitude);
ComparisonReport compare_tpcs(const TwoPhotonCoherentState& st, std::uint32_t truncation,
                              const TpcsApproxOptions& opt = {});

}  // namespace qphase
