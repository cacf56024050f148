#include "qphase/husimi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qphase/numerics.hpp"

namespace qphase {

namespace {

constexpr double kDefaultStep = 0.05;

// Runs body(j) for every row j, split into contiguous blocks across threads.
// Each row writes only its own slot, so results do not depend on the split.
template <class Body>
void for_each_row(std::uint32_t rows, Body body) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint32_t workers = std::min<std::uint32_t>(hw, std::max<std::uint32_t>(1, rows / 16));
  if (workers <= 1) {
    for (std::uint32_t j = 0; j < rows; ++j) body(j);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::uint32_t chunk = (rows + workers - 1) / workers;
  for (std::uint32_t w = 0; w < workers; ++w) {
    const std::uint32_t lo = w * chunk;
    const std::uint32_t hi = std::min(rows, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::uint32_t j = lo; j < hi; ++j) body(j);
    });
  }
}

// (1/sqrt k!) e^{-d^2/2} d^k for d >= 0.
double ring_modulus(std::uint32_t k, double d) {
  if (k == 0) return std::exp(-0.5 * d * d);
  if (d == 0.) return 0.;
  const long double lm = static_cast<long double>(k) * std::log(d) - 0.5L * d * d - 0.5L * log_factorial(k);
  return static_cast<double>(std::exp(lm));
}

double step_for(const State& st) {
  if (const auto* t = std::get_if<TwoPhotonCoherentState>(&st)) {
    return std::min(kDefaultStep, 0.5 * std::exp(-t->r));
  }
  return kDefaultStep;
}

// Half widths (about the state centre) beyond which Q < ~1e-12 of its peak.
struct Extent {
  double cx, hx, hy;
};

Extent state_extent(const State& st) {
  if (const auto* d = std::get_if<DisplacedNumberState>(&st)) {
    const double h = std::sqrt(static_cast<double>(d->n)) + 6.5;
    return {d->beta, h, h};
  }
  const auto& t = std::get<TwoPhotonCoherentState>(st);
  // Q ~ exp(-(1 + tanh r)(x - c)^2 - (1 - tanh r) y^2)
  const double th = std::tanh(t.r);
  const double e2 = std::exp(-2. * t.r);
  const double one_minus = 2. * e2 / (1. + e2);
  constexpr double kLog = 28.;
  return {t.beta * std::exp(-t.r), std::sqrt(kLog / (1. + th)) + 0.5, std::sqrt(kLog / one_minus) + 0.5};
}

}  // namespace

void GridSpec::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max)) throw std::invalid_argument("grid window must have min < max");
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid needs at least 2 nodes per axis");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) || !std::isfinite(y_max)) {
    throw std::invalid_argument("grid window must be finite");
  }
}

GridSpec GridSpec::covering(double x_min, double x_max, double y_min, double y_max, double step) {
  if (!(step > 0.)) throw std::invalid_argument("grid step must be positive");
  GridSpec g{x_min, x_max, y_min, y_max, 2, 2};
  g.nx = std::max<std::uint32_t>(2, static_cast<std::uint32_t>(std::ceil((x_max - x_min) / step)) + 1);
  g.ny = std::max<std::uint32_t>(2, static_cast<std::uint32_t>(std::ceil((y_max - y_min) / step)) + 1);
  return g;
}

double wrap_angle(double a) {
  double w = std::remainder(a, 2. * std::numbers::pi);
  if (w <= -std::numbers::pi) w += 2. * std::numbers::pi;
  return w;
}

PolarAmplitude fock_projection(std::uint32_t m, PhasePoint p) {
  const double rho = std::hypot(p.x, p.y);
  const double mod = ring_modulus(m, rho);
  if (mod == 0. || (p.x == 0. && p.y == 0.)) return {mod, 0.};
  return {mod, wrap_angle(m * full_angle(p.y, p.x))};
}

PolarAmplitude displaced_projection(const DisplacedNumberState& st, PhasePoint p) {
  const double dx = p.x - st.beta;
  const double d = std::hypot(dx, p.y);
  const double mod = ring_modulus(st.n, d);
  if (mod == 0.) return {0., 0.};
  double phase = -st.beta * p.y;
  if (st.n > 0) phase -= st.n * full_angle(p.y, dx);
  return {mod, wrap_angle(phase)};
}

PolarAmplitude tpcs_projection(const TwoPhotonCoherentState& st, PhasePoint p) {
  if (!(st.r >= 0.)) throw std::invalid_argument("two-photon coherent state needs r >= 0");
  const double sech = 1. / std::cosh(st.r);
  const double th = std::tanh(st.r);
  const double b = st.beta;
  const double x = p.x, y = p.y;
  const double expo =
      -0.5 * (x * x + y * y + b * b) + x * b * sech - 0.5 * th * (x * x - y * y - b * b);
  const double mod = std::sqrt(sech) * std::exp(expo);
  if (mod == 0.) return {0., 0.};
  return {mod, wrap_angle(-y * b * sech + x * y * th)};
}

PolarAmplitude state_projection(const State& st, PhasePoint p) {
  if (const auto* d = std::get_if<DisplacedNumberState>(&st)) return displaced_projection(*d, p);
  return tpcs_projection(std::get<TwoPhotonCoherentState>(st), p);
}

double q_value(double projection_modulus) {
  return projection_modulus * projection_modulus / std::numbers::pi;
}

std::vector<QSample> q_grid(const QGridSelector& sel, const GridSpec& g) {
  g.validate();
  std::vector<QSample> out(static_cast<std::size_t>(g.nx) * g.ny);
  auto eval = [&sel](PhasePoint p) -> double {
    return std::visit(
        [p](const auto& s) -> double {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, FockSelector>) {
            return q_value(fock_projection(s.m, p).modulus);
          } else if constexpr (std::is_same_v<T, DisplacedNumberState>) {
            return q_value(displaced_projection(s, p).modulus);
          } else if constexpr (std::is_same_v<T, TwoPhotonCoherentState>) {
            return q_value(tpcs_projection(s, p).modulus);
          } else {
            return fock_projection(s.m, p).modulus * displaced_projection(s.state, p).modulus;
          }
        },
        sel);
  };
  for_each_row(g.ny, [&](std::uint32_t j) {
    const double y = g.y(j);
    for (std::uint32_t i = 0; i < g.nx; ++i) {
      const double x = g.x(i);
      out[static_cast<std::size_t>(j) * g.nx + i] = {x, y, eval({x, y})};
    }
  });
  return out;
}

GridSpec default_q_grid(const QGridSelector& sel) {
  return std::visit(
      [](const auto& s) -> GridSpec {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FockSelector>) {
          const double h = std::sqrt(static_cast<double>(s.m)) + 6.5;
          return GridSpec::covering(-h, h, -h, h, kDefaultStep);
        } else if constexpr (std::is_same_v<T, ProductSelector>) {
          const double h = std::sqrt(static_cast<double>(s.m)) + 6.5;
          const Extent e = state_extent(State{s.state});
          return GridSpec::covering(std::min(-h, e.cx - e.hx), std::max(h, e.cx + e.hx),
                                    -std::max(h, e.hy), std::max(h, e.hy), kDefaultStep);
        } else {
          const State st{s};
          const Extent e = state_extent(st);
          return GridSpec::covering(e.cx - e.hx, e.cx + e.hx, -e.hy, e.hy, step_for(st));
        }
      },
      sel);
}

double grid_integral(const std::vector<QSample>& samples, const GridSpec& g) {
  double s = 0.;
  for (const auto& q : samples) s += q.q;
  return s * g.cell_area();
}

OracleResult overlap_amplitudes_oracle(std::uint32_t m_max, const State& st, const GridSpec& g) {
  g.validate();
  const std::size_t nm = static_cast<std::size_t>(m_max) + 1;
  std::vector<std::complex<double>> row_sums(static_cast<std::size_t>(g.ny) * nm);
  std::vector<double> row_max(g.ny, 0.), row_boundary_max(g.ny, 0.);

  std::vector<double> inv_sqrt(nm, 1.);
  for (std::size_t k = 1; k < nm; ++k) inv_sqrt[k] = 1. / std::sqrt(static_cast<double>(k));

  for_each_row(g.ny, [&](std::uint32_t j) {
    const double y = g.y(j);
    const bool edge_row = (j == 0 || j + 1 == g.ny);
    std::complex<double>* acc = &row_sums[static_cast<std::size_t>(j) * nm];
    for (std::uint32_t i = 0; i < g.nx; ++i) {
      const double x = g.x(i);
      // <m|alpha> = e^{-|alpha|^2/2} alpha^m / sqrt(m!), built up in m. The
      // Gaussian is split between both factors so it underflows later.
      const double half_gauss = std::exp(-0.25 * (x * x + y * y));
      const std::complex<double> psi = state_projection(st, {x, y}).value() * half_gauss;
      const std::complex<double> alpha{x, y};
      std::complex<double> fock = half_gauss;
      for (std::size_t m = 0; m < nm; ++m) {
        if (m > 0) fock *= alpha * inv_sqrt[m];
        const std::complex<double> v = fock * psi;
        acc[m] += v;
        const double a = std::abs(v);
        row_max[j] = std::max(row_max[j], a);
        if (edge_row || i == 0 || i + 1 == g.nx) row_boundary_max[j] = std::max(row_boundary_max[j], a);
      }
    }
  });

  OracleResult res;
  res.amplitudes.assign(nm, {0., 0.});
  double peak = 0., boundary = 0.;
  for (std::uint32_t j = 0; j < g.ny; ++j) {
    for (std::size_t m = 0; m < nm; ++m) res.amplitudes[m] += row_sums[static_cast<std::size_t>(j) * nm + m];
    peak = std::max(peak, row_max[j]);
    boundary = std::max(boundary, row_boundary_max[j]);
  }
  const double w = g.cell_area() / std::numbers::pi;
  for (auto& a : res.amplitudes) a *= w;
  res.boundary_ratio = peak > 0. ? boundary / peak : 0.;
  res.window_adequate = res.boundary_ratio <= 1e-10;
  return res;
}

std::complex<double> overlap_amplitude_oracle(std::uint32_t m, const State& st, const GridSpec& g,
                                              bool* window_adequate) {
  OracleResult r = overlap_amplitudes_oracle(m, st, g);
  if (window_adequate != nullptr) *window_adequate = r.window_adequate;
  return r.amplitudes[m];
}

GridSpec default_oracle_grid(std::uint32_t m_max, const State& st) {
  const double sm = std::sqrt(static_cast<double>(m_max));
  double beta = 0., er = 1.;
  if (const auto* d = std::get_if<DisplacedNumberState>(&st)) {
    beta = std::fabs(d->beta);
    er = std::sqrt(static_cast<double>(d->n));
  } else {
    const auto& t = std::get<TwoPhotonCoherentState>(st);
    beta = std::fabs(t.beta);
    er = std::exp(t.r);
  }
  const Extent e = state_extent(st);
  const double rad = std::max({sm + beta + er + 6., std::fabs(e.cx) + e.hx, e.hy, sm + 6.5});
  return GridSpec::covering(-rad, rad, -rad, rad, step_for(st));
}

}  // namespace qphase
