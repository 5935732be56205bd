#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <xsusy/models.hpp>
#include <xsusy/numerics.hpp>
#include <xsusy/susy.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace xsusy;
using std::numbers::pi;

namespace {

const std::vector<OscillatorParams> kOsc{{1.0, 0}, {1.0, 1}, {1.0, 2}, {2.0, 0}, {2.0, 1}, {2.0, 2}};
const std::vector<ScarfParams> kScarf{{3.0, 1.0}, {4.0, 1.5}, {5.0, 2.0}};

}  // namespace

TEST_CASE("factorization energies") {
  CHECK(factorization_energy(OscillatorParams{2.0, 1}) == energy_oscillator(0, {2.0, 1}));
  CHECK(factorization_energy(ScarfParams{4.0, 1.5}) == 16.0);
}

TEST_CASE("closed-form superpotential values") {
  const auto a = superpotential_closed(OscillatorParams{1.0, 0}, 1.0);
  CHECK(a.w1 == doctest::Approx(-0.5));
  CHECK(a.w2 == doctest::Approx(0.5));
  CHECK(a.total() == doctest::Approx(0.0));
  const auto b = superpotential_closed(OscillatorParams{1.0, 1}, 1.0);
  CHECK(b.w1 == doctest::Approx(-1.5));
  CHECK(b.w2 == doctest::Approx(1.0 / 6.0));
  CHECK(b.total() == doctest::Approx(-4.0 / 3.0));
  const auto c = superpotential_closed(ScarfParams{3.0, 1.0}, 0.0);
  CHECK(c.w1 == doctest::Approx(-1.0));
  CHECK(c.w2 == doctest::Approx(-4.0 / 35.0));
}

TEST_CASE("superpotential from the ground state") {
  CHECK(std::abs(superpotential_from_ground_state(OscillatorParams{1.0, 0}, 1.0)) <= 1e-7);
  CHECK(superpotential_from_ground_state(ScarfParams{3.0, 1.0}, 0.0) ==
        doctest::Approx(-1.0 - 4.0 / 35.0).epsilon(1e-7));
  for (const auto& p : kOsc)
    for (double x : linspace(0.2, 6.0, 50)) {
      const double w = superpotential_closed(p, x).total();
      CHECK(std::abs(superpotential_from_ground_state(p, x) - w) <= 1e-7 * (1.0 + std::abs(w)));
    }
  for (const auto& p : kScarf)
    for (double x : linspace(-1.3, 1.3, 50)) {
      const double w = superpotential_closed(p, x).total();
      CHECK(std::abs(superpotential_from_ground_state(p, x) - w) <= 1e-7 * (1.0 + std::abs(w)));
    }
}

TEST_CASE("analytic W' agrees with finite differences") {
  for (const auto& p : kOsc)
    for (double x : {0.3, 1.0, 2.5, 5.0}) {
      const auto d = superpotential_derivative(p, x);
      CHECK(d.w1 == doctest::Approx(fd_derivative([&](double t) { return superpotential_closed(p, t).w1; }, x, 1, 0.1))
                        .epsilon(1e-8));
      CHECK(d.w2 == doctest::Approx(fd_derivative([&](double t) { return superpotential_closed(p, t).w2; }, x, 1, 0.1))
                        .epsilon(1e-8).scale(1e-6));
    }
  for (const auto& p : kScarf)
    for (double x : {-1.2, -0.3, 0.0, 0.9}) {
      const auto d = superpotential_derivative(p, x);
      CHECK(d.total() ==
            doctest::Approx(fd_derivative([&](double t) { return superpotential_closed(p, t).total(); }, x, 1, 0.1))
                .epsilon(1e-8));
    }
}

TEST_CASE("V+ reconstruction and exact-SUSY ground state") {
  for (const auto& p : kOsc) {
    const double e0 = factorization_energy(p);
    for (double x : linspace(0.2, 6.0, 50)) {
      const double w = superpotential_closed(p, x).total();
      const double dw = superpotential_derivative(p, x).total();
      const double v = v_oscillator_extended(x, p);
      CHECK(std::abs(w * w - dw + e0 - v) <= 1e-7 * (1.0 + std::abs(v)));
      CHECK(partner_potential(p, x) == doctest::Approx(w * w + dw + e0).epsilon(1e-10));
    }
    const auto prob = make_problem(p, PotentialKind::extended);
    CHECK(schrodinger_residual(prob, 0, linspace(0.2, 6.0, 50)) <= 1e-6);
  }
  for (const auto& p : kScarf) {
    const double e0 = factorization_energy(p);
    for (double x : linspace(-1.3, 1.3, 50)) {
      const double w = superpotential_closed(p, x).total();
      const double dw = superpotential_derivative(p, x).total();
      const double v = v_scarf_extended(x, p);
      CHECK(std::abs(w * w - dw + e0 - v) <= 1e-7 * (1.0 + std::abs(v)));
    }
  }
}

TEST_CASE("partner potential offsets") {
  // Raw difference V-(x; a0) - V+(x; a1).
  const OscillatorParams o{1.0, 0};
  CHECK(partner_potential(o, 1.0) - v_oscillator_extended(1.0, shifted_parameters(o)) == doctest::Approx(o.omega));
  const ScarfParams s{3.0, 1.0};
  CHECK(std::abs(partner_potential(s, 0.3) - v_scarf_extended(0.3, shifted_parameters(s))) < 1e-10);
  // Referenced to each ground level the remainder is the first gap.
  const double zo = (partner_potential(o, 1.0) - factorization_energy(o)) -
                    (v_oscillator_extended(1.0, shifted_parameters(o)) - factorization_energy(shifted_parameters(o)));
  CHECK(zo == doctest::Approx(2.0));
  const double zs = (partner_potential(s, 0.3) - factorization_energy(s)) -
                    (v_scarf_extended(0.3, shifted_parameters(s)) - factorization_energy(shifted_parameters(s)));
  CHECK(zs == doctest::Approx(7.0));
  // 2W' tends to omega at large x.
  CHECK(2.0 * superpotential_derivative(o, 40.0).total() == doctest::Approx(o.omega).epsilon(1e-3));
}

TEST_CASE("shifted parameters") {
  const auto o = shifted_parameters(OscillatorParams{2.0, 1});
  CHECK(o.omega == 2.0);
  CHECK(o.l == 2);
  const auto s = shifted_parameters(ScarfParams{3.0, 1.0});
  CHECK(s.A == 4.0);
  CHECK(s.B == 1.0);
}

TEST_CASE("shape invariance") {
  const auto xo = linspace(0.2, 6.0, 50);
  const auto r1 = shape_invariance_report(OscillatorParams{1.0, 0}, xo);
  CHECK(r1.gap == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(r1.max_dev <= 1e-8);
  CHECK(r1.offset == doctest::Approx(1.0).epsilon(1e-8));
  const auto r2 = shape_invariance_report(OscillatorParams{2.0, 1}, xo);
  CHECK(r2.gap == doctest::Approx(4.0).epsilon(1e-8));
  CHECK(r2.max_dev <= 1e-8);
  const auto r3 = shape_invariance_report(ScarfParams{3.0, 1.0}, linspace(-1.3, 1.3, 50));
  CHECK(r3.gap == doctest::Approx(7.0).epsilon(1e-8));
  CHECK(r3.max_dev <= 1e-8);
  CHECK(std::abs(r3.offset) <= 1e-8);
  for (const auto& p : kOsc) {
    const auto r = shape_invariance_report(p, xo);
    CHECK(std::abs(r.gap - (energy_oscillator(1, p) - energy_oscillator(0, p))) <= 1e-8);
    CHECK(r.max_dev <= 1e-8 * (1.0 + r.gap));
  }
  for (const auto& p : kScarf) {
    const auto r = shape_invariance_report(p, linspace(-1.3, 1.3, 50));
    CHECK(std::abs(r.gap - (2.0 * p.A + 1.0)) <= 1e-8);
    CHECK(r.max_dev <= 1e-8 * (1.0 + r.gap));
  }
  CHECK_THROWS(shape_invariance_report(OscillatorParams{1.0, 0}, linspace(0.2, 6.0, 10)));
}

TEST_CASE("partner spectrum drops the ground level") {
  for (const auto& p : {OscillatorParams{1.0, 0}, OscillatorParams{2.0, 2}}) {
    const double b = 20.0 / std::sqrt(p.omega) + 4.0;
    const auto ev = solve_spectrum([&](double x) { return partner_potential(p, x); }, 0.0, b, 5);
    for (int k = 0; k < 5; ++k) CHECK(std::abs(ev[k] - energy_oscillator(k + 1, p)) <= 1e-4);
  }
  const ScarfParams s{3.0, 1.0};
  const auto ev = solve_spectrum([&](double x) { return partner_potential(s, x); }, -pi / 2, pi / 2, 5);
  for (int k = 0; k < 5; ++k) CHECK(std::abs(ev[k] - energy_scarf(k + 1, s)) <= 1e-3);
}
