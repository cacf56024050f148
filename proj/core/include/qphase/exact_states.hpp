#pragma once

#include <cstdint>

#include "qphase/states.hpp"

namespace qphase {

/// <m|n,beta>, real for real beta. Production path: associated Laguerre
/// closed form in log space. For m < n the element is obtained from
/// <m|D(beta)|n> = (-1)^{n-m} <n|D(beta)|m>, which reproduces the sign of the
/// generating-function construction.
double displaced_amplitude(std::uint32_t m, const DisplacedNumberState& st);

/// P_mn(beta) = <m|n,beta>^2.
double displaced_pmf(std::uint32_t m, const DisplacedNumberState& st);

/// <m|n,beta> from the n-th alpha-derivative of exp(alpha^2/2) <m|alpha+beta>
/// at alpha = 0, expanded as a finite binomial sum and evaluated in 50-digit
/// floating point. Validation oracle; intended for n <= 10, m <= 300.
double displaced_amplitude_via_derivative(std::uint32_t m, const DisplacedNumberState& st);

/// <n|beta,r>, signed. Below r = 1e-8 the coherent-state limit is used.
double tpcs_amplitude(std::uint32_t n, const TwoPhotonCoherentState& st);

/// P_n = tanh^n r / (2^n n! cosh r) exp{beta^2 (tanh r - 1)} H_n(beta / sqrt(2 cosh r sinh r))^2.
double tpcs_pmf(std::uint32_t n, const TwoPhotonCoherentState& st);

inline constexpr double kTpcsPoissonLimitR = 1e-8;

/// Truncation that leaves a negligible tail: ceil((sqrt n + |beta|)^2 + 12 (sqrt n + |beta|)).
std::uint32_t default_truncation(const DisplacedNumberState& st);

/// Smallest N >= ceil(8 (sinh^2 r + beta^2 e^{-2r} + 10)) whose cumulative
/// mass is within 1e-11 of one. Strongly squeezed states have a tail that
/// decays like tanh(r)^n, so the closed-form guess alone is not enough.
std::uint32_t default_truncation(const TwoPhotonCoherentState& st);

std::uint32_t default_truncation(const State& st);

Pmf pmf_table(const DisplacedNumberState& st, std::uint32_t truncation);
Pmf pmf_table(const TwoPhotonCoherentState& st, std::uint32_t truncation);
Pmf pmf_table(const State& st, std::uint32_t truncation);

}  // namespace qphase
