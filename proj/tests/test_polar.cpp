#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "wedgeshock/polar.hpp"

using namespace wedgeshock;

namespace {

constexpr double kDeg = M_PI / 180.0;

// Oracle route: the scalar downstream equation evaluated through the vector
// jump function H, independent of the expanded closed form in the library.
double scalar_equation_via_H(const UpstreamSpec& spec, double theta_w, double u) {
  const double q = spec.in_plane_speed();
  const double m = spec.edge_speed();
  const Vec3 up{q * std::cos(theta_w), -q * std::sin(theta_w), m};
  return rh_jump(spec.gas, up, Vec3{u, 0.0, m});
}

// Brackets of sign changes of the oracle equation on (0, q0 sin theta_i).
std::vector<std::pair<double, double>> oracle_brackets(const UpstreamSpec& spec, double theta_w,
                                                       int n) {
  std::vector<std::pair<double, double>> out;
  const double q = spec.in_plane_speed();
  double prev_u = 1e-9;
  double prev_f = scalar_equation_via_H(spec, theta_w, prev_u);
  for (int i = 1; i <= n; ++i) {
    const double u = q * static_cast<double>(i) / n * (1.0 - 1e-12);
    const double f = scalar_equation_via_H(spec, theta_w, u);
    if ((prev_f > 0.0) != (f > 0.0)) out.emplace_back(prev_u, u);
    prev_u = u;
    prev_f = f;
  }
  return out;
}

// Independent 2D detachment scan (v3 = 0): coarse bisection on root existence.
double detachment_2d(const GasModel& gas, double q0) {
  auto has_roots = [&](double theta_w) {
    const double rho_up = gas.density(q0 * q0);
    double prev = rho_up * q0 * q0;  // value at u -> 0
    bool change = false;
    for (int i = 1; i <= 20000; ++i) {
      const double u = q0 * static_cast<double>(i) / 20000 * (1.0 - 1e-12);
      const double rho_dn = gas.density(u * u);
      const double f =
          rho_up * q0 * q0 - q0 * u * std::cos(theta_w) * (rho_up + rho_dn) + rho_dn * u * u;
      if ((prev > 0.0) != (f > 0.0)) change = true;
      prev = f;
    }
    return change;
  };
  double lo = 1e-4, hi = M_PI / 2 - 1e-4;
  REQUIRE(has_roots(lo));
  REQUIRE_FALSE(has_roots(hi));
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    (has_roots(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("jump function symmetry and diagonal") {
  const GasModel g(1.4);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-0.7, 0.7);
  for (int t = 0; t < 100; ++t) {
    const Vec3 u{dist(rng), dist(rng), dist(rng)};
    const Vec3 v{dist(rng), dist(rng), dist(rng)};
    CHECK(rh_jump(g, u, u) == doctest::Approx(0.0));
    CHECK(rh_jump(g, u, v) == doctest::Approx(rh_jump(g, v, u)).epsilon(1e-14));
  }
}

TEST_CASE("downstream roots against dense-scan oracle") {
  const UpstreamSpec spec(GasModel(1.4), 1.1, M_PI / 2);
  // q0 = 1.1 detaches near 6.1 deg; stay safely inside the attached range
  const double theta_w = 5.0 * kDeg;
  const auto roots = solve_downstream(spec, theta_w);
  CHECK(roots.u_strong < roots.u_weak);
  CHECK(std::abs(downstream_equation(spec, theta_w, roots.u_weak)) <= 1e-10);
  CHECK(std::abs(downstream_equation(spec, theta_w, roots.u_strong)) <= 1e-10);
  // the expanded scalar form and the vector H route agree
  CHECK(std::abs(scalar_equation_via_H(spec, theta_w, roots.u_weak)) <= 1e-10);
  CHECK(std::abs(scalar_equation_via_H(spec, theta_w, roots.u_strong)) <= 1e-10);

  const auto brackets = oracle_brackets(spec, theta_w, 20000);
  REQUIRE(brackets.size() == 2);
  CHECK(roots.u_strong >= brackets[0].first);
  CHECK(roots.u_strong <= brackets[0].second);
  CHECK(roots.u_weak >= brackets[1].first);
  CHECK(roots.u_weak <= brackets[1].second);
}

TEST_CASE("weak root converges to vanishing shock strength as theta_w -> 0") {
  const UpstreamSpec spec(GasModel(1.4), 1.1, M_PI / 2);
  const double q = spec.in_plane_speed();
  double prev_gap = q;
  for (double deg : {1.0, 0.1, 0.01}) {
    const auto roots = solve_downstream(spec, deg * kDeg);
    const double gap = q - roots.u_weak;
    CHECK(gap > 0.0);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 5e-4);
}

TEST_CASE("detached above the detachment angle") {
  const UpstreamSpec spec(GasModel(1.4), 1.1, M_PI / 2);
  const auto angles = critical_angles(spec);
  CHECK_THROWS_AS(solve_downstream(spec, angles.theta_w_star + 1e-4), DetachedError);
  CHECK_THROWS_AS(solve_downstream(spec, -0.1), DomainError);
  CHECK_NOTHROW(solve_downstream(spec, angles.theta_w_star - 1e-4));
}

TEST_CASE("critical angle ordering and sonic crossing") {
  const UpstreamSpec spec(GasModel(1.4), 1.1, M_PI / 2);
  const auto angles = critical_angles(spec);
  CHECK(angles.theta_s_star > 0.0);
  CHECK(angles.theta_s_star < angles.theta_w_star);

  const auto roots = solve_downstream(spec, angles.theta_s_star);
  const double m = spec.edge_speed();
  const double speed = std::sqrt(roots.u_weak * roots.u_weak + m * m);
  CHECK(std::abs(speed - spec.gas.critical_speed()) <= 1e-8);
  CHECK(spec.gas.classify(Vec3{roots.u_weak, 0.0, m}, 1e-7) == FlowRegime::Sonic);
}

TEST_CASE("normal-incidence detachment matches the 2D scan") {
  const GasModel g(1.4);
  const UpstreamSpec spec(g, 1.1, M_PI / 2);
  const auto angles = critical_angles(spec);
  const double theta_2d = detachment_2d(g, 1.1);
  CHECK(std::abs(angles.theta_w_star - theta_2d) <= 1e-6);
}

TEST_CASE("degenerate incidence rejected") {
  CHECK_THROWS_AS(UpstreamSpec(GasModel(1.4), 1.1, 0.0), DomainError);
  CHECK_THROWS_AS(UpstreamSpec(GasModel(1.4), 1.1, M_PI), DomainError);
  CHECK_THROWS_AS(UpstreamSpec(GasModel(1.4), 0.5, M_PI / 2), DomainError);  // subsonic upstream
}

TEST_CASE("background assembly invariants") {
  const UpstreamSpec spec(GasModel(1.4), 1.1, M_PI / 2);
  const auto angles = critical_angles(spec);
  const double theta_w = 0.5 * (angles.theta_s_star + angles.theta_w_star);
  const auto bg = background(spec, theta_w);

  CHECK(spec.gas.is_supersonic(bg.upstream));
  CHECK(spec.gas.is_subsonic(bg.downstream));
  CHECK(bg.rho_minus < bg.rho_plus);
  CHECK(bg.sigma > 0.0);
  CHECK(bg.upstream[2] == doctest::Approx(bg.downstream[2]).epsilon(1e-15));
  CHECK(std::abs(rh_jump(spec.gas, bg.upstream, bg.downstream)) <= 1e-10);

  // slope consistency with the defining formula
  const double q = spec.in_plane_speed();
  CHECK(bg.sigma ==
        doctest::Approx((q * std::cos(theta_w) - bg.u0) / (q * std::sin(theta_w))).epsilon(1e-14));

  // potential continuity on the shock plane x2 = sigma x1
  for (double x1 : {0.0, 0.3, 1.7, 8.0}) {
    for (double x3 : {-2.0, 0.0, 5.0}) {
      const Vec3 x{x1, bg.sigma * x1, x3};
      CHECK(bg.phi0_minus(x) == doctest::Approx(bg.phi0_plus(x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("window boundaries produce named errors") {
  const UpstreamSpec spec(GasModel(1.4), 1.1, M_PI / 2);
  const auto angles = critical_angles(spec);
  CHECK_THROWS_AS(background(spec, angles.theta_s_star * 0.5), NotTransonicError);
  CHECK_THROWS_AS(background(spec, angles.theta_w_star + 1e-3), DetachedError);
}

TEST_CASE("randomized transonic sweep satisfies jump and entropy conditions") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> ugamma(1.1, 2.0);
  std::uniform_real_distribution<double> utheta(60.0 * kDeg, 120.0 * kDeg);
  std::uniform_real_distribution<double> ufrac(0.15, 0.85);
  int done = 0;
  while (done < 12) {
    const double gamma = ugamma(rng);
    const GasModel gas(gamma);
    const double cs = gas.critical_speed();
    std::uniform_real_distribution<double> uq(cs * 1.05, std::min(1.6, cs * 1.6));
    const UpstreamSpec spec(gas, uq(rng), utheta(rng));
    const auto angles = critical_angles(spec);
    const double theta_w =
        angles.theta_s_star + ufrac(rng) * (angles.theta_w_star - angles.theta_s_star);
    const auto bg = background(spec, theta_w);
    CHECK(std::abs(rh_jump(gas, bg.upstream, bg.downstream)) <= 1e-10);
    CHECK(bg.rho_minus < bg.rho_plus);
    CHECK(gas.is_subsonic(bg.downstream));
    // strong branch is subsonic too, with the smaller in-plane speed
    const Vec3 strong{bg.u_strong, 0.0, bg.downstream[2]};
    CHECK(bg.u_strong < bg.u0);
    CHECK(gas.is_subsonic(strong));
    ++done;
  }
}

TEST_CASE("polar curve endpoints, positivity, slopes, concavity") {
  const UpstreamSpec spec(GasModel(1.4), 1.1, M_PI / 2);
  const auto angles = critical_angles(spec);
  const double theta_w = 0.5 * (angles.theta_s_star + angles.theta_w_star);
  const auto diag = polar_curve(spec, theta_w, 201);

  CHECK(diag.v_s < diag.v_w);
  CHECK(diag.curve.front().second == doctest::Approx(0.0));
  CHECK(diag.curve.back().second == doctest::Approx(0.0));
  for (std::size_t i = 1; i + 1 < diag.curve.size(); ++i) {
    CHECK(diag.curve[i].second > 0.0);
  }
  // slope signs near the endpoints
  const auto& c = diag.curve;
  CHECK(c[1].second - c[0].second > 0.0);
  CHECK(c[c.size() - 1].second - c[c.size() - 2].second < 0.0);
  // discrete concavity of v2(v1) on the uniform v1 sample
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    const double second_diff = c[i + 1].second - 2.0 * c[i].second + c[i - 1].second;
    CHECK(second_diff <= 1e-10);
  }
}
