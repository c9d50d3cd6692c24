#pragma once

#include <utility>
#include <vector>

#include "wedgeshock/gas.hpp"

namespace wedgeshock {

/// Upstream description: speed q0 (supersonic) and the angle theta_i between
/// the incoming velocity and the wedge edge, in (0, pi).
struct UpstreamSpec {
  GasModel gas;
  double q0;
  double theta_i;

  UpstreamSpec(GasModel g, double speed, double incidence);

  /// In-plane upstream speed q0 sin(theta_i), the effective 2D polar speed.
  double in_plane_speed() const { return q0 * std::sin(theta_i); }
  /// Velocity component along the edge, shared by both sides of the shock.
  double edge_speed() const { return q0 * std::cos(theta_i); }
};

/// Jump function H(u, v) = (rho(|u|^2) u - rho(|v|^2) v) . (u - v).
/// Vanishes across admissible plane shocks; symmetric under swapping (u, v).
double rh_jump(const GasModel& gas, const Vec3& u, const Vec3& v);

/// Gradient of rh_jump in its second argument.
Vec3 rh_jump_grad_v(const GasModel& gas, const Vec3& u, const Vec3& v);

struct DownstreamRoots {
  double u_weak;    // larger root: weak branch
  double u_strong;  // smaller root: strong branch
};

/// Both roots of the scalar downstream equation for in-plane speed u0 at wedge
/// angle theta_w. Scans for sign changes, bisects to 1e-12 and polishes with
/// Newton steps; the residual of each returned root is below 1e-10.
DownstreamRoots solve_downstream(const UpstreamSpec& spec, double theta_w);

/// Residual of the scalar downstream equation at in-plane speed u.
double downstream_equation(const UpstreamSpec& spec, double theta_w, double u);

struct CriticalAngles {
  double theta_w_star;  // detachment angle: largest angle with attached roots
  double theta_s_star;  // sonic angle: weak branch exactly sonic
};

CriticalAngles critical_angles(const UpstreamSpec& spec);

/// Piecewise-constant transonic flow past the flat wedge in the rotated frame:
/// wedge surface = (x1,x3)-plane, edge = x3-axis, shock plane x2 = sigma x1.
struct BackgroundSolution {
  GasModel gas;
  double q0;
  double theta_i;
  double theta_w;

  Vec3 upstream;    // U0^- (supersonic)
  Vec3 downstream;  // U0^+ (subsonic, weak branch)
  double u0;        // downstream in-plane speed
  double u_strong;  // strong-branch root, kept for diagnostics
  double sigma;     // shock slope, > 0

  Vec3 phi_minus;  // coefficient triple of the linear upstream potential
  Vec3 phi_plus;   // coefficient triple of the linear downstream potential

  double rho_minus;
  double rho_plus;

  double phi0_minus(const Vec3& x) const { return phi_minus.dot(x); }
  double phi0_plus(const Vec3& x) const { return phi_plus.dot(x); }
};

/// Assemble and verify the weak transonic background for theta_w inside the
/// transonic window (theta_s_star, theta_w_star).
BackgroundSolution background(const UpstreamSpec& spec, double theta_w);

struct PolarDiagnostics {
  double v_s;  // strong-branch root of v2(v1) = 0
  double v_w;  // weak-branch root
  double theta_w_star;
  double theta_s_star;
  std::vector<std::pair<double, double>> curve;  // sampled (v1, v2(v1))
};

/// Sample the in-plane polar curve v2(v1) >= 0 over [v_s, v_w] at the given
/// wedge angle (the rotated frame depends on it).
PolarDiagnostics polar_curve(const UpstreamSpec& spec, double theta_w, int n_samples);

}  // namespace wedgeshock
