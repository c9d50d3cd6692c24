#include "wedgeshock/gas.hpp"

#include <cmath>
#include <string>

namespace wedgeshock {

GasModel::GasModel(double gamma) : gamma_(gamma) {
  if (!(gamma > 1.0)) {
    throw DomainError("adiabatic exponent must satisfy gamma > 1, got " + std::to_string(gamma));
  }
}

void GasModel::require_admissible(double q2) const {
  if (q2 < 0.0 || q2 > vacuum_q2() * (1.0 + 1e-14)) {
    throw DomainError("squared speed " + std::to_string(q2) + " outside [0, 2/(gamma-1)] = [0, " +
                      std::to_string(vacuum_q2()) + "]");
  }
}

double GasModel::density(double q2) const {
  require_admissible(q2);
  const double base = 1.0 - 0.5 * (gamma_ - 1.0) * q2;
  if (base <= 0.0) return 0.0;  // vacuum limit
  return std::pow(base, 1.0 / (gamma_ - 1.0));
}

double GasModel::density_deriv(double q2) const {
  require_admissible(q2);
  const double base = 1.0 - 0.5 * (gamma_ - 1.0) * q2;
  if (base <= 0.0) return 0.0;
  return -0.5 * std::pow(base, (2.0 - gamma_) / (gamma_ - 1.0));
}

double GasModel::sonic_speed_sq(double q2) const {
  require_admissible(q2);
  return 1.0 - 0.5 * (gamma_ - 1.0) * q2;
}

Mat3 GasModel::coefficients(const Vec3& u) const {
  const double q2 = u.norm2();
  const double c2 = sonic_speed_sq(q2);
  Mat3 a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      a(i, j) = (i == j ? c2 : 0.0) - u[i] * u[j];
    }
  }
  return a;
}

FlowRegime GasModel::classify(const Vec3& u, double rel_tol) const {
  const double speed = u.norm();
  const double cs = critical_speed();
  if (std::abs(speed - cs) <= rel_tol * cs) return FlowRegime::Sonic;
  return speed > cs ? FlowRegime::Supersonic : FlowRegime::Subsonic;
}

}  // namespace wedgeshock
