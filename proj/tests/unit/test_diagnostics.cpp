#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "vlasol/diagnostics.hpp"
#include "vlasol/scenarios.hpp"

using namespace vlasol;
using testing_support::kPi;

namespace {

PhaseState filled(double value) {
  const Grid1D x(8, 0.0, 2.0, Boundary::Periodic);
  const Grid1D v(10, -1.0, 1.5, Boundary::Zero);
  return make_phase_state(x, v, std::vector<double>(80, value));
}

}  // namespace

TEST_CASE("norms of constant states") {
  const PhaseState zero = filled(0.0);
  for (auto k : {NormKind::L1, NormKind::L2, NormKind::Linf, NormKind::Mass, NormKind::Entropy}) {
    CHECK(phase_norm(zero, k) == 0.0);
  }
  const PhaseState one = filled(1.0);
  const double area = 2.0 * 2.5;
  CHECK(phase_norm(one, NormKind::Mass) == doctest::Approx(area).epsilon(1e-14));
  CHECK(phase_norm(one, NormKind::L1) == doctest::Approx(area).epsilon(1e-14));
  CHECK(phase_norm(one, NormKind::L2) == doctest::Approx(std::sqrt(area)).epsilon(1e-14));
  CHECK(phase_norm(one, NormKind::Linf) == 1.0);
  CHECK(phase_norm(one, NormKind::Entropy) == 0.0);
  CHECK_THROWS_AS(phase_norm(one, NormKind::Energy), InvalidArgument);

  // Energy of f = 1 with E = 0: the midpoint sum of v^2 over [-1, 1.5] times the x length.
  const FieldE e{std::vector<double>(8, 0.0), 0.0};
  double v2 = 0.0;
  for (int j = 0; j < 10; ++j) v2 += one.v.point(j) * one.v.point(j) * one.v.dx();
  CHECK(phase_norm(one, NormKind::Energy, &e) == doctest::Approx(2.0 * v2).epsilon(1e-14));
}

TEST_CASE("norms scale as expected") {
  const PhaseState a = filled(0.5);
  const PhaseState b = filled(-1.5);
  CHECK(phase_norm(b, NormKind::L1) == doctest::Approx(3.0 * phase_norm(a, NormKind::L1)));
  CHECK(phase_norm(b, NormKind::L2) == doctest::Approx(3.0 * phase_norm(a, NormKind::L2)));
  CHECK(phase_norm(b, NormKind::Mass) == doctest::Approx(-3.0 * phase_norm(a, NormKind::Mass)));
  // f log|f| at f = 0.5 is -0.5 log 2 per unit area.
  CHECK(phase_norm(a, NormKind::Entropy) == doctest::Approx(-0.5 * std::log(2.0) * 5.0));
}

TEST_CASE("landau mass is the box length times the captured Maxwellian mass") {
  const PhaseState s = build_initial_state(preset(ScenarioKind::Landau_Weak));
  const double captured = testing_support::maxwellian_midpoint_mass(s.v.dx(), 5.0);
  CHECK(std::abs(phase_norm(s, NormKind::Mass) - 4 * kPi * captured) < 1e-12);
  // The tail beyond |v| = 5 alone keeps the mass about 7e-6 below 4 pi.
  CHECK(std::abs(phase_norm(s, NormKind::Mass) - 4 * kPi) < 1e-5);
}

TEST_CASE("field norms") {
  const FieldE e{{3.0, -4.0, 0.0, 0.0}, 4.0};
  const auto [l2, linf] = field_norms(e, 0.25);
  CHECK(l2 == doctest::Approx(std::sqrt(25.0 * 0.25)));
  CHECK(linf == 4.0);
}

TEST_CASE("relative deviation") {
  const std::vector<double> s{2.0, 1.0, 3.0};
  const DeviationSeries d = relative_deviation(s);
  CHECK_FALSE(d.absolute);
  CHECK(d.values == std::vector<double>{0.0, -0.5, 0.5});
  const std::vector<double> z{0.0, 1e-3};
  const DeviationSeries dz = relative_deviation(z);
  CHECK(dz.absolute);
  CHECK(dz.values[1] == 1e-3);
  CHECK(relative_deviation(std::vector<double>{}).values.empty());
}

TEST_CASE("pairwise sum is exact on integers and order dependent only on input") {
  std::vector<double> xs(1000);
  for (int k = 0; k < 1000; ++k) xs[k] = k;
  CHECK(pairwise_sum(xs) == 499500.0);
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("rate fit recovers a synthetic damping rate") {
  const double gamma = -0.1533;
  const double omega = 1.4156;
  std::vector<double> t;
  std::vector<double> e;
  for (int k = 0; k <= 30000; ++k) {
    t.push_back(k * 1e-3);
    e.push_back(std::exp(gamma * t.back()) * std::abs(std::cos(omega * t.back())));
  }
  CHECK(fit_rate(t, e, {0.0, 30.0}) == doctest::Approx(gamma).epsilon(1e-3));

  std::vector<double> flat(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) flat[k] = 2.0 + std::cos(3.0 * t[k]);
  CHECK(std::abs(fit_rate(t, flat, {0.0, 30.0})) < 1e-6);

  // A single hump has no interior maxima to fit.
  std::vector<double> hump(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) hump[k] = std::exp(-(t[k] - 5) * (t[k] - 5));
  CHECK_THROWS_AS(fit_rate(t, hump, {0.0, 30.0}), FitError);
  CHECK_THROWS_AS(fit_rate(t, e, {0.0, 2.0}), FitError);
}

TEST_CASE("local maxima respect the window") {
  const std::vector<double> t{0, 1, 2, 3, 4, 5, 6};
  const std::vector<double> v{0, 2, 1, 3, 1, 4, 0};
  CHECK(local_maxima(t, v, 0, 6) == std::vector<std::size_t>{1, 3, 5});
  CHECK(local_maxima(t, v, 2, 4) == std::vector<std::size_t>{3});
  CHECK_THROWS_AS(local_maxima(t, std::vector<double>{1.0}, 0, 1), InvalidArgument);
}
