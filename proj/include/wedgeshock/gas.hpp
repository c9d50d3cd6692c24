#pragma once

#include "wedgeshock/errors.hpp"
#include "wedgeshock/mathutil.hpp"

namespace wedgeshock {

enum class FlowRegime { Supersonic, Subsonic, Sonic };

/// Polytropic gas in Bernoulli-normalized units (stagnation density 1).
/// Houses the density/sound-speed closures of steady potential flow and the
/// second-order coefficients of the non-divergence equation.
class GasModel {
 public:
  explicit GasModel(double gamma);

  double gamma() const { return gamma_; }

  /// Upper bound of admissible squared speed (vacuum limit), 2/(gamma-1).
  double vacuum_q2() const { return 2.0 / (gamma_ - 1.0); }

  /// rho(q^2) = (1 - (gamma-1) q^2 / 2)^(1/(gamma-1)); strictly decreasing.
  double density(double q2) const;

  /// d rho / d q2; equals -rho/(2 c^2) on the admissible range.
  double density_deriv(double q2) const;

  /// c^2(q^2) = 1 - (gamma-1) q^2 / 2.
  double sonic_speed_sq(double q2) const;

  /// The unique q > 0 with q^2 = c^2(q^2), i.e. sqrt(2/(gamma+1)).
  /// Speed comparisons against this value classify the flow regime.
  double critical_speed() const { return std::sqrt(2.0 / (gamma_ + 1.0)); }

  /// a_ij(U) = c^2(|U|^2) delta_ij - u_i u_j, symmetric.
  Mat3 coefficients(const Vec3& u) const;

  /// Strict comparison of |U| against the critical speed, with a tight
  /// relative band for "sonic" (guards degenerate inputs only).
  FlowRegime classify(const Vec3& u, double rel_tol = 1e-12) const;

  bool is_supersonic(const Vec3& u) const { return classify(u) == FlowRegime::Supersonic; }
  bool is_subsonic(const Vec3& u) const { return classify(u) == FlowRegime::Subsonic; }

 private:
  double gamma_;
  void require_admissible(double q2) const;
};

}  // namespace wedgeshock
