#include "wedgeshock/polar.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace wedgeshock {

namespace {

constexpr int kScanSamples = 4000;
constexpr double kRootBisectTol = 1e-12;
constexpr double kAngleBracketTol = 1e-10;

double bisect(const std::function<double(double)>& f, double lo, double hi, double flo,
              double tol) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

UpstreamSpec::UpstreamSpec(GasModel g, double speed, double incidence)
    : gas(g), q0(speed), theta_i(incidence) {
  if (!(q0 > gas.critical_speed())) {
    throw DomainError("upstream speed must be supersonic: q0 = " + std::to_string(q0) +
                      " <= c* = " + std::to_string(gas.critical_speed()));
  }
  if (!(q0 * q0 < gas.vacuum_q2())) {
    throw DomainError("upstream speed above the vacuum bound");
  }
  const double s = std::sin(theta_i);
  if (!(theta_i > 0.0 && theta_i < M_PI) || s < 1e-12) {
    throw DomainError("incidence angle must lie strictly inside (0, pi): upstream parallel to "
                      "the edge degenerates the polar equation");
  }
}

double rh_jump(const GasModel& gas, const Vec3& u, const Vec3& v) {
  const Vec3 flux = gas.density(u.norm2()) * u - gas.density(v.norm2()) * v;
  return flux.dot(u - v);
}

Vec3 rh_jump_grad_v(const GasModel& gas, const Vec3& u, const Vec3& v) {
  const double rho_u = gas.density(u.norm2());
  const double rho_v = gas.density(v.norm2());
  const double drho_v = gas.density_deriv(v.norm2());
  const Vec3 diff = u - v;
  const double v_dot_diff = v.dot(diff);
  Vec3 mu;
  for (int j = 0; j < 3; ++j) {
    mu[j] = -2.0 * drho_v * v[j] * v_dot_diff - rho_v * diff[j] - (rho_u * u[j] - rho_v * v[j]);
  }
  return mu;
}

double downstream_equation(const UpstreamSpec& spec, double theta_w, double u) {
  const double q = spec.in_plane_speed();
  const double m = spec.edge_speed();
  const double rho_up = spec.gas.density(spec.q0 * spec.q0);
  const double rho_dn = spec.gas.density(u * u + m * m);
  return rho_up * q * q - q * u * std::cos(theta_w) * (rho_up + rho_dn) + rho_dn * u * u;
}

namespace {

double downstream_equation_deriv(const UpstreamSpec& spec, double theta_w, double u) {
  const double q = spec.in_plane_speed();
  const double m = spec.edge_speed();
  const double rho_up = spec.gas.density(spec.q0 * spec.q0);
  const double rho_dn = spec.gas.density(u * u + m * m);
  const double drho_dn = 2.0 * u * spec.gas.density_deriv(u * u + m * m);
  return -q * std::cos(theta_w) * (rho_up + rho_dn + u * drho_dn) + drho_dn * u * u +
         2.0 * rho_dn * u;
}

void check_wedge_angle(double theta_w) {
  if (!(theta_w > 0.0)) throw DomainError("wedge angle must be positive");
  if (!(theta_w < 0.5 * M_PI)) throw DomainError("wedge angle must be below pi/2");
}

std::vector<double> scan_roots(const UpstreamSpec& spec, double theta_w) {
  const double q = spec.in_plane_speed();
  std::vector<double> roots;
  const double lo = 1e-9 * q;
  double prev_u = lo;
  double prev_f = downstream_equation(spec, theta_w, prev_u);
  for (int i = 1; i <= kScanSamples; ++i) {
    const double u = lo + (q - lo) * static_cast<double>(i) / kScanSamples;
    const double f = downstream_equation(spec, theta_w, u);
    if ((prev_f > 0.0) != (f > 0.0)) {
      double root = bisect([&](double t) { return downstream_equation(spec, theta_w, t); }, prev_u,
                           u, prev_f, kRootBisectTol);
      for (int k = 0; k < 3; ++k) {
        const double d = downstream_equation_deriv(spec, theta_w, root);
        if (std::abs(d) < 1e-14) break;
        root -= downstream_equation(spec, theta_w, root) / d;
      }
      roots.push_back(root);
    }
    prev_u = u;
    prev_f = f;
  }
  return roots;
}

/// Minimum of the downstream equation over the scan range; the attached-shock
/// predicate is "this minimum is negative".
double scan_min(const UpstreamSpec& spec, double theta_w) {
  const double q = spec.in_plane_speed();
  double best = std::numeric_limits<double>::infinity();
  double arg = 0.5 * q;
  for (int i = 1; i < kScanSamples; ++i) {
    const double u = q * static_cast<double>(i) / kScanSamples;
    const double f = downstream_equation(spec, theta_w, u);
    if (f < best) {
      best = f;
      arg = u;
    }
  }
  // golden-section refinement around the scan minimum
  const double h = q / kScanSamples;
  double a = std::max(1e-12, arg - h), b = std::min(q, arg + h);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = downstream_equation(spec, theta_w, c);
  double fd = downstream_equation(spec, theta_w, d);
  for (int it = 0; it < 80; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = downstream_equation(spec, theta_w, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = downstream_equation(spec, theta_w, d);
    }
  }
  return std::min({best, fc, fd});
}

}  // namespace

DownstreamRoots solve_downstream(const UpstreamSpec& spec, double theta_w) {
  check_wedge_angle(theta_w);
  const auto roots = scan_roots(spec, theta_w);
  if (roots.size() < 2) {
    throw DetachedError("no attached plane shock at theta_w = " + std::to_string(theta_w) +
                        " rad (above the detachment angle)");
  }
  return DownstreamRoots{roots.back(), roots.front()};
}

CriticalAngles critical_angles(const UpstreamSpec& spec) {
  // Detachment: largest angle at which the downstream equation still dips
  // negative (two roots merging into a tangency).
  double lo = 1e-6, hi = 0.5 * M_PI - 1e-6;
  if (scan_min(spec, lo) >= 0.0) throw DomainError("no attached shock even at tiny wedge angle");
  while (hi - lo > kAngleBracketTol) {
    const double mid = 0.5 * (lo + hi);
    if (scan_min(spec, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double theta_w_star = lo;

  // Sonic angle: weak-branch downstream speed crosses the critical speed.
  const double m = spec.edge_speed();
  const double cs = spec.gas.critical_speed();
  auto weak_excess = [&](double theta_w) {
    const auto r = solve_downstream(spec, theta_w);
    return std::sqrt(r.u_weak * r.u_weak + m * m) - cs;
  };
  double alo = 1e-6, ahi = theta_w_star - 10.0 * kAngleBracketTol;
  const double flo = weak_excess(alo);
  const double fhi = weak_excess(ahi);
  if (!(flo > 0.0 && fhi < 0.0)) {
    throw DomainError("weak branch does not cross sonic inside (0, theta_w_star)");
  }
  while (ahi - alo > 1e-12) {
    const double mid = 0.5 * (alo + ahi);
    if (weak_excess(mid) > 0.0)
      alo = mid;
    else
      ahi = mid;
  }
  return CriticalAngles{theta_w_star, 0.5 * (alo + ahi)};
}

BackgroundSolution background(const UpstreamSpec& spec, double theta_w) {
  check_wedge_angle(theta_w);
  const auto angles = critical_angles(spec);
  if (theta_w >= angles.theta_w_star) {
    throw DetachedError("theta_w = " + std::to_string(theta_w) +
                        " at or above the detachment angle " +
                        std::to_string(angles.theta_w_star));
  }
  if (theta_w <= angles.theta_s_star) {
    throw NotTransonicError("theta_w = " + std::to_string(theta_w) +
                            " at or below the sonic angle " + std::to_string(angles.theta_s_star) +
                            ": weak-branch downstream is supersonic");
  }

  const auto roots = solve_downstream(spec, theta_w);
  const double q = spec.in_plane_speed();
  const double m = spec.edge_speed();

  BackgroundSolution bg{spec.gas,
                        spec.q0,
                        spec.theta_i,
                        theta_w,
                        Vec3{q * std::cos(theta_w), -q * std::sin(theta_w), m},
                        Vec3{roots.u_weak, 0.0, m},
                        roots.u_weak,
                        roots.u_strong,
                        0.0,
                        Vec3{},
                        Vec3{},
                        0.0,
                        0.0};
  bg.sigma = (q * std::cos(theta_w) - bg.u0) / (q * std::sin(theta_w));
  bg.phi_minus = bg.upstream;
  bg.phi_plus = bg.downstream;
  bg.rho_minus = spec.gas.density(bg.upstream.norm2());
  bg.rho_plus = spec.gas.density(bg.downstream.norm2());

  if (!spec.gas.is_supersonic(bg.upstream)) throw NotTransonicError("upstream not supersonic");
  if (!spec.gas.is_subsonic(bg.downstream)) {
    throw NotTransonicError("weak-branch downstream not subsonic at theta_w = " +
                            std::to_string(theta_w));
  }
  if (!(bg.rho_minus < bg.rho_plus)) throw NotTransonicError("entropy condition violated");
  if (!(bg.sigma > 0.0)) throw NotTransonicError("nonpositive shock slope");
  const double jump = rh_jump(spec.gas, bg.upstream, bg.downstream);
  if (std::abs(jump) > 1e-10) {
    throw NotTransonicError("Rankine-Hugoniot residual " + std::to_string(jump) +
                            " above tolerance");
  }
  return bg;
}

PolarDiagnostics polar_curve(const UpstreamSpec& spec, double theta_w, int n_samples) {
  if (n_samples < 3) throw DomainError("polar curve needs at least 3 samples");
  const auto roots = solve_downstream(spec, theta_w);
  const auto angles = critical_angles(spec);
  const double q = spec.in_plane_speed();
  const double m = spec.edge_speed();
  const Vec3 up{q * std::cos(theta_w), -q * std::sin(theta_w), m};

  PolarDiagnostics diag{roots.u_strong, roots.u_weak, angles.theta_w_star, angles.theta_s_star, {}};
  diag.curve.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double v1 =
        roots.u_strong + (roots.u_weak - roots.u_strong) * static_cast<double>(i) / (n_samples - 1);
    auto g = [&](double v2) { return rh_jump(spec.gas, up, Vec3{v1, v2, m}); };
    const double g0 = g(0.0);
    double v2 = 0.0;
    if (g0 < 0.0) {
      const double v2max =
          std::sqrt(std::max(0.0, spec.gas.vacuum_q2() * (1.0 - 1e-12) - v1 * v1 - m * m));
      v2 = bisect(g, 0.0, v2max, g0, 1e-13);
    }
    diag.curve.emplace_back(v1, v2);
  }
  diag.curve.front().second = 0.0;
  diag.curve.back().second = 0.0;
  return diag;
}

}  // namespace wedgeshock
