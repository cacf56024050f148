#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

namespace qphase {

/// |n, beta> = D(beta)|n>, real displacement.
struct DisplacedNumberState {
  std::uint32_t n = 0;
  double beta = 0.;
};

/// |beta, r> = S(r)|beta> with S(r) = exp{(r/2) a^2 - (r/2) a^dagger^2}; r >= 0.
struct TwoPhotonCoherentState {
  double beta = 0.;
  double r = 0.;
};

using State = std::variant<DisplacedNumberState, TwoPhotonCoherentState>;

enum class PmfMethod { exact, approx, oracle, parity_limit };

std::string_view to_string(PmfMethod m);

/// Photon-number distribution truncated at index `truncation()`.
struct Pmf {
  std::vector<double> values;
  PmfMethod method = PmfMethod::exact;

  std::size_t truncation() const { return values.empty() ? 0 : values.size() - 1; }
  double total() const;
  double mean() const;
  double variance() const;
};

}  // namespace qphase
