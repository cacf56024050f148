#include "qphase/exact_states.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <stdexcept>

#include "qphase/numerics.hpp"

namespace qphase {

std::string_view to_string(PmfMethod m) {
  switch (m) {
    case PmfMethod::exact: return "exact";
    case PmfMethod::approx: return "approx";
    case PmfMethod::oracle: return "oracle";
    case PmfMethod::parity_limit: return "parity-limit";
  }
  return "unknown";
}

double Pmf::total() const {
  double s = 0.;
  for (double p : values) s += p;
  return s;
}

double Pmf::mean() const {
  double s = 0.;
  for (std::size_t k = 0; k < values.size(); ++k) s += static_cast<double>(k) * values[k];
  return s;
}

double Pmf::variance() const {
  const double mu = mean();
  double s = 0.;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double d = static_cast<double>(k) - mu;
    s += d * d * values[k];
  }
  return s;
}

double displaced_amplitude(std::uint32_t m, const DisplacedNumberState& st) {
  const double beta = st.beta;
  if (beta == 0.) return m == st.n ? 1. : 0.;

  const std::uint32_t lo = std::min(m, st.n);
  const std::uint32_t hi = std::max(m, st.n);
  const std::uint32_t k = hi - lo;

  const LogScaled lag = laguerre_assoc(lo, k, beta * beta);
  if (lag.is_zero()) return 0.;

  const long double log_mag = 0.5L * (log_factorial(lo) - log_factorial(hi)) +
                              static_cast<long double>(k) * std::log(std::fabs(beta)) -
                              0.5L * beta * beta + lag.log_magnitude;
  // beta^k for m >= n, (-beta)^k for m < n
  const bool negative_base = (beta < 0.) != (m < st.n);
  int sign = lag.sign;
  if (negative_base && (k % 2 == 1)) sign = -sign;
  return sign * static_cast<double>(std::exp(log_mag));
}

double displaced_pmf(std::uint32_t m, const DisplacedNumberState& st) {
  const double a = displaced_amplitude(m, st);
  return a * a;
}

double displaced_amplitude_via_derivative(std::uint32_t m, const DisplacedNumberState& st) {
  using big = boost::multiprecision::cpp_bin_float_50;
  const std::uint32_t n = st.n;
  const big beta = st.beta;

  // d^n/dalpha^n [ e^{-alpha beta} (alpha + beta)^m ] at alpha = 0
  //   = sum_j C(n, j) (-beta)^{n-j} m!/(m-j)! beta^{m-j}
  big sum = 0;
  big binom = 1;    // C(n, j)
  big falling = 1;  // m!/(m-j)!
  for (std::uint32_t j = 0; j <= std::min(n, m); ++j) {
    if (j > 0) {
      binom = binom * (n - j + 1) / j;
      falling *= (m - j + 1);
    }
    const big term = binom * boost::multiprecision::pow(-beta, static_cast<int>(n - j)) * falling *
                     boost::multiprecision::pow(beta, static_cast<int>(m - j));
    sum += term;
  }
  big fact_n = 1, fact_m = 1;
  for (std::uint32_t j = 2; j <= n; ++j) fact_n *= j;
  for (std::uint32_t j = 2; j <= m; ++j) fact_m *= j;
  const big result = sum * boost::multiprecision::exp(-beta * beta / 2) / boost::multiprecision::sqrt(fact_n * fact_m);
  return result.convert_to<double>();
}

namespace {

// ln cosh r and tanh r - 1 without overflow or cancellation for large r.
double log_cosh(double r) { return r + std::log1p(std::exp(-2. * r)) - std::log(2.); }
double tanh_minus_one(double r) {
  const double e = std::exp(-2. * r);
  return -2. * e / (1. + e);
}

double hermite_argument(const TwoPhotonCoherentState& st) {
  return st.beta / std::sqrt(std::sinh(2. * st.r));
}

// log|<n|beta,r>| without the Hermite factor.
long double tpcs_log_prefactor(std::uint32_t n, const TwoPhotonCoherentState& st) {
  const double r = st.r;
  return 0.5L * static_cast<long double>(n) * std::log(std::tanh(r) / 2.) - 0.5L * log_factorial(n) -
         0.5L * log_cosh(r) + 0.5L * st.beta * st.beta * tanh_minus_one(r);
}

double coherent_amplitude(std::uint32_t n, double beta) {
  if (beta == 0.) return n == 0 ? 1. : 0.;
  const long double log_mag =
      static_cast<long double>(n) * std::log(std::fabs(beta)) - 0.5L * log_factorial(n) - 0.5L * beta * beta;
  const int sign = (beta < 0. && n % 2 == 1) ? -1 : 1;
  return sign * static_cast<double>(std::exp(log_mag));
}

void check_squeeze(const TwoPhotonCoherentState& st) {
  if (!(st.r >= 0.)) throw std::invalid_argument("two-photon coherent state needs r >= 0");
}

}  // namespace

double tpcs_amplitude(std::uint32_t n, const TwoPhotonCoherentState& st) {
  check_squeeze(st);
  if (st.r < kTpcsPoissonLimitR) return coherent_amplitude(n, st.beta);
  const LogScaled h = hermite(n, hermite_argument(st));
  if (h.is_zero()) return 0.;
  return h.sign * static_cast<double>(std::exp(tpcs_log_prefactor(n, st) + h.log_magnitude));
}

double tpcs_pmf(std::uint32_t n, const TwoPhotonCoherentState& st) {
  const double a = tpcs_amplitude(n, st);
  return a * a;
}

std::uint32_t default_truncation(const DisplacedNumberState& st) {
  const double s = std::sqrt(static_cast<double>(st.n)) + std::fabs(st.beta);
  return static_cast<std::uint32_t>(std::ceil(s * s + 12. * s));
}

namespace {

std::uint32_t tpcs_base_truncation(const TwoPhotonCoherentState& st) {
  const double sh = std::sinh(st.r);
  return static_cast<std::uint32_t>(
      std::ceil(8. * (sh * sh + st.beta * st.beta * std::exp(-2. * st.r) + 10.)));
}

// Streams H_0, H_1, ... at a fixed argument, scaled into log form each step.
class HermiteStream {
 public:
  explicit HermiteStream(double x) : x_(x) {}

  // Advances to the next degree; the first call yields H_0.
  void advance() {
    if (degree_ < 0) {
      cur_ = 1.;
    } else {
      const double next = 2. * x_ * cur_ - 2. * static_cast<double>(degree_) * prev_;
      prev_ = cur_;
      cur_ = next;
      const double norm = cur_ != 0. ? std::fabs(cur_) : std::fabs(prev_);
      if (norm != 0.) {
        prev_ /= norm;
        cur_ /= norm;
        log_scale_ += std::log(norm);
      }
    }
    ++degree_;
  }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(degree_); }
  bool is_zero() const { return cur_ == 0.; }
  double log_magnitude() const { return log_scale_ + std::log(std::fabs(cur_)); }

 private:
  double x_;
  long degree_ = -1;
  double prev_ = 0.;
  double cur_ = 0.;
  double log_scale_ = 0.;
};

double streamed_pmf(const HermiteStream& h, const TwoPhotonCoherentState& st) {
  if (h.is_zero()) return 0.;
  const long double log_amp = tpcs_log_prefactor(h.degree(), st) + h.log_magnitude();
  return static_cast<double>(std::exp(2.L * log_amp));
}

}  // namespace

std::uint32_t default_truncation(const TwoPhotonCoherentState& st) {
  check_squeeze(st);
  const std::uint32_t base = tpcs_base_truncation(st);
  if (st.r < kTpcsPoissonLimitR) return base;
  constexpr std::uint32_t kCap = 50'000'000;
  HermiteStream h(hermite_argument(st));
  long double mass = 0.L;
  for (std::uint32_t n = 0; n <= base; ++n) {
    h.advance();
    mass += streamed_pmf(h, st);
  }
  while (1.L - mass > 1e-11L && h.degree() < kCap) {
    h.advance();
    mass += streamed_pmf(h, st);
  }
  return h.degree();
}

std::uint32_t default_truncation(const State& st) {
  return std::visit([](const auto& s) { return default_truncation(s); }, st);
}

Pmf pmf_table(const DisplacedNumberState& st, std::uint32_t truncation) {
  Pmf out;
  out.values.resize(static_cast<std::size_t>(truncation) + 1);
  for (std::uint32_t m = 0; m <= truncation; ++m) out.values[m] = displaced_pmf(m, st);
  return out;
}

Pmf pmf_table(const TwoPhotonCoherentState& st, std::uint32_t truncation) {
  check_squeeze(st);
  Pmf out;
  out.values.resize(static_cast<std::size_t>(truncation) + 1);
  if (st.r < kTpcsPoissonLimitR) {
    for (std::uint32_t n = 0; n <= truncation; ++n) out.values[n] = tpcs_pmf(n, st);
    return out;
  }
  HermiteStream h(hermite_argument(st));
  for (std::uint32_t n = 0; n <= truncation; ++n) {
    h.advance();
    out.values[n] = streamed_pmf(h, st);
  }
  return out;
}

Pmf pmf_table(const State& st, std::uint32_t truncation) {
  return std::visit([truncation](const auto& s) { return pmf_table(s, truncation); }, st);
}

}  // namespace qphase
