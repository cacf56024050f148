#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qphase/exact_states.hpp"
#include "qphase/interference.hpp"
#include "reference_values.hpp"

using namespace qphase;
namespace ref = qphase::reference;
using std::numbers::pi;

TEST_CASE("prefactor modes") {
  CHECK(prefactor(PrefactorMode::amplitude) == doctest::Approx(4. / (pi * pi)));
  CHECK(prefactor(PrefactorMode::paper_final) == doctest::Approx(1. / pi));
}

TEST_CASE("displaced approximation") {
  CHECK(approx_displaced_pmf(50, 3, 30.) == 0.);
  CHECK(approx_displaced_pmf(50, 3, 30., PrefactorMode::paper_final) == 0.);
  for (std::uint32_t m = 60; m < 150; ++m) {
    const double a = approx_displaced_pmf(m, 3, 10.1);
    CHECK(a >= 0.);
    if (!circle_intersection(m, 3, 10.1)) {
      CHECK(a == 0.);
      continue;
    }
    const double psi = displaced_phase(m, 3, 10.1);
    const double expect = 4. / (pi * pi) * band_overlap_area(m, 3, 10.1) * std::cos(psi) * std::cos(psi);
    CHECK(a == doctest::Approx(expect).epsilon(1e-12));
    CHECK(approx_displaced_pmf(m, 3, 10.1, PrefactorMode::paper_final) == doctest::Approx(a * pi / 4).epsilon(1e-12));
  }
  const Pmf t = approx_pmf_table(DisplacedNumberState{3, 10.1}, 200);
  CHECK(t.method == PmfMethod::approx);
  CHECK(t.values.size() == 201);
  CHECK(t.values[100] == approx_displaced_pmf(100, 3, 10.1));
}

TEST_CASE("squeezed-state approximation") {
  const TwoPhotonCoherentState st{5.1, 3.};
  CHECK(approx_tpcs_pmf(0, st) == 0.);
  for (std::uint32_t m = 1; m < 60; m += 2) CHECK(approx_tpcs_pmf(m, {0., 2.}) < 1e-30);
  const double psi = tpcs_phase(100, st);
  CHECK(approx_tpcs_pmf(100, st) ==
        doctest::Approx(4. / (pi * pi) * ref::kArea_100 * std::cos(psi) * std::cos(psi)).epsilon(1e-12));
}

TEST_CASE("parity limit") {
  const TwoPhotonCoherentState st{5.1, 3.};
  CHECK(tpcs_parity_limit_pmf(100, st) == doctest::Approx(ref::kParityLimit_100).epsilon(1e-12));
  CHECK(tpcs_parity_limit_pmf(100, st) ==
        doctest::Approx(ref::kArea_100 / (2 * pi) * (1 + std::cos(ref::kFourX2Y2_100))).epsilon(1e-12));
  for (std::uint32_t m = 1; m < 40; m += 2) CHECK(tpcs_parity_limit_pmf(m, {0., 2.}) == doctest::Approx(0.).epsilon(1e-30));
  const TpcsApproxOptions high_r{PrefactorMode::paper_final, X2Mode::consistent, TpcsPhaseForm::high_r};
  for (std::uint32_t m = 1; m <= 400; ++m) {
    CHECK(std::fabs(tpcs_parity_limit_pmf(m, st) - approx_tpcs_pmf(m, st, high_r)) < 1e-12);
  }
  CHECK(parity_limit_table(st, 50).method == PmfMethod::parity_limit);
  CHECK(to_string(PmfMethod::parity_limit) == "parity-limit");
}

TEST_CASE("interior minima") {
  const std::vector<double> v{3, 1, 2, 2, 0, 0, 5, 4, 4, 6, 1};
  CHECK(interior_minima(v) == std::vector<std::size_t>{1, 4, 7});
  CHECK(interior_minima(std::vector<double>{1, 2, 3}).empty());
  CHECK(interior_minima(std::vector<double>{}).empty());
  // a plateau running into the end is not a minimum
  CHECK(interior_minima(std::vector<double>{3, 1, 1}).empty());
}

TEST_CASE("comparison report") {
  const Pmf a{{0.1, 0.05, 0.2, 0.1, 0.3}, PmfMethod::exact};
  const ComparisonReport same = compare(a, a);
  CHECK(same.max_abs_diff == 0.);
  CHECK(same.exact_minima == same.approx_minima);
  CHECK(same.exact_minima == std::vector<std::size_t>{1, 3});

  const Pmf b{{0.1, 0.05, 0.25, 0.1, 0.}, PmfMethod::approx};
  const ComparisonReport d = compare(a, b);
  CHECK(d.max_abs_diff == doctest::Approx(0.05));  // index 4 skipped, b is 0 there
  CHECK_THROWS_AS(compare(a, Pmf{{0.1}, PmfMethod::approx}), std::invalid_argument);

  const ComparisonReport rep = compare_displaced({3, 10.1}, 200);
  REQUIRE(rep.rows.size() == 201);
  CHECK(rep.rows[100].area == doctest::Approx(ref::kBandArea_100_3).epsilon(1e-12));
  CHECK(rep.rows[100].phase.has_value());
  CHECK_FALSE(rep.rows[200].phase.has_value());
  CHECK(rep.rows[200].area == 0.);
  CHECK(rep.rows[100].p_exact == doctest::Approx(ref::kPmf_100_3_10_1).epsilon(1e-11));
}

TEST_CASE("squeezed comparison rows") {
  const ComparisonReport r = compare_tpcs({5.1, 3.}, 300);
  REQUIRE(r.rows.size() == 301);
  CHECK_FALSE(r.rows[0].phase.has_value());
  CHECK(r.rows[100].area == doctest::Approx(ref::kArea_100).epsilon(1e-12));
  CHECK(r.rows[100].p_exact == doctest::Approx(tpcs_pmf(100, {5.1, 3.})).epsilon(1e-13));
}

TEST_CASE("squeezed approximation minima follow the exact ones in each parity") {
  const ComparisonReport r = compare_tpcs({5.1, 3.}, 300);
  for (std::size_t parity : {0u, 1u}) {
    std::vector<double> e, a;
    for (std::size_t m = parity; m < r.rows.size(); m += 2) {
      e.push_back(r.rows[m].p_exact);
      a.push_back(r.rows[m].p_approx);
    }
    const auto me = interior_minima(e), ma = interior_minima(a);
    REQUIRE(me.size() == ma.size());
    for (std::size_t k = 0; k < me.size(); ++k) {
      const auto m = 2 * me[k] + parity;
      if (m < 60 || m > 140) continue;
      CHECK(std::abs(static_cast<long>(me[k]) - static_cast<long>(ma[k])) <= 1);  // +-2 in m
    }
  }
}
