#include "qphase/interference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qphase/exact_states.hpp"

namespace qphase {

using std::numbers::pi;

double prefactor(PrefactorMode mode) {
  return mode == PrefactorMode::amplitude ? 4. / (pi * pi) : 1. / pi;
}

double approx_displaced_pmf(std::uint32_t m, std::uint32_t n, double beta, PrefactorMode mode) {
  if (!circle_intersection(m, n, beta)) return 0.;
  const double area = band_overlap_area(m, n, beta);
  if (area == 0.) return 0.;
  const double c = std::cos(displaced_phase(m, n, beta));
  return std::max(0., prefactor(mode) * area * c * c);
}

namespace {

double tpcs_phase_for(std::uint32_t m, const TwoPhotonCoherentState& st, const TpcsApproxOptions& opt) {
  return opt.phase == TpcsPhaseForm::full ? tpcs_phase(m, st, opt.x2) : tpcs_phase_high_r(m, st, opt.x2);
}

}  // namespace

double approx_tpcs_pmf(std::uint32_t m, const TwoPhotonCoherentState& st, const TpcsApproxOptions& opt) {
  if (!tpcs_intersection(m, st, opt.x2)) return 0.;
  const double area = tpcs_overlap_area(m, st).area;
  if (area == 0.) return 0.;
  const double c = std::cos(tpcs_phase_for(m, st, opt));
  return std::max(0., prefactor(opt.prefactor) * area * c * c);
}

double tpcs_parity_limit_pmf(std::uint32_t m, const TwoPhotonCoherentState& st, X2Mode mode) {
  const auto p = tpcs_intersection(m, st, mode);
  if (!p) return 0.;
  const double area = tpcs_overlap_area(m, st).area;
  if (area == 0.) return 0.;
  const double parity = m % 2 == 0 ? 1. : -1.;
  return std::max(0., area / (2. * pi) * (1. + parity * std::cos(4. * p->x2 * p->y2)));
}

Pmf approx_pmf_table(const DisplacedNumberState& st, std::uint32_t truncation, PrefactorMode mode) {
  Pmf out{std::vector<double>(static_cast<std::size_t>(truncation) + 1), PmfMethod::approx};
  for (std::uint32_t m = 0; m <= truncation; ++m) out.values[m] = approx_displaced_pmf(m, st.n, st.beta, mode);
  return out;
}

Pmf approx_pmf_table(const TwoPhotonCoherentState& st, std::uint32_t truncation, const TpcsApproxOptions& opt) {
  Pmf out{std::vector<double>(static_cast<std::size_t>(truncation) + 1), PmfMethod::approx};
  for (std::uint32_t m = 0; m <= truncation; ++m) out.values[m] = approx_tpcs_pmf(m, st, opt);
  return out;
}

Pmf parity_limit_table(const TwoPhotonCoherentState& st, std::uint32_t truncation, X2Mode mode) {
  Pmf out{std::vector<double>(static_cast<std::size_t>(truncation) + 1), PmfMethod::parity_limit};
  for (std::uint32_t m = 0; m <= truncation; ++m) out.values[m] = tpcs_parity_limit_pmf(m, st, mode);
  return out;
}

std::vector<std::size_t> interior_minima(std::span<const double> v) {
  std::vector<std::size_t> out;
  std::size_t i = 1;
  while (i + 1 < v.size()) {
    if (!(v[i] < v[i - 1])) {
      ++i;
      continue;
    }
    std::size_t k = i;
    while (k + 1 < v.size() && v[k + 1] == v[i]) ++k;
    if (k + 1 < v.size() && v[k + 1] > v[i]) out.push_back(i);
    i = k + 1;
  }
  return out;
}

ComparisonReport compare(const Pmf& exact, const Pmf& approx) {
  if (exact.values.size() != approx.values.size()) {
    throw std::invalid_argument("compare: distributions have different truncations");
  }
  ComparisonReport rep;
  rep.rows.reserve(exact.values.size());
  for (std::size_t m = 0; m < exact.values.size(); ++m) {
    const double pe = exact.values[m], pa = approx.values[m];
    rep.rows.push_back({m, pe, pa, 0., std::nullopt});
    if (pe > 1e-15 && pa > 1e-15) rep.max_abs_diff = std::max(rep.max_abs_diff, std::fabs(pe - pa));
  }
  rep.exact_minima = interior_minima(exact.values);
  rep.approx_minima = interior_minima(approx.values);
  return rep;
}

ComparisonReport compare_displaced(const DisplacedNumberState& st, std::uint32_t truncation, PrefactorMode mode) {
  ComparisonReport rep = compare(pmf_table(st, truncation), approx_pmf_table(st, truncation, mode));
  for (auto& row : rep.rows) {
    const auto m = static_cast<std::uint32_t>(row.m);
    row.area = band_overlap_area(m, st.n, st.beta);
    if (circle_intersection(m, st.n, st.beta)) row.phase = displaced_phase(m, st.n, st.beta);
  }
  return rep;
}

ComparisonReport compare_tpcs(const TwoPhotonCoherentState& st, std::uint32_t truncation,
                              const TpcsApproxOptions& opt) {
  ComparisonReport rep = compare(pmf_table(st, truncation), approx_pmf_table(st, truncation, opt));
  for (auto& row : rep.rows) {
    const auto m = static_cast<std::uint32_t>(row.m);
    row.area = tpcs_overlap_area(m, st).area;
    if (tpcs_intersection(m, st, opt.x2)) row.phase = tpcs_phase_for(m, st, opt);
  }
  return rep;
}

}  // namespace qphase
