#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace wedgeshock {

struct Vec3 {
  double v[3]{0.0, 0.0, 0.0};

  Vec3() = default;
  Vec3(double a, double b, double c) : v{a, b, c} {}

  double& operator[](int i) { return v[i]; }
  double operator[](int i) const { return v[i]; }

  Vec3 operator+(const Vec3& o) const { return {v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2]}; }
  Vec3 operator-(const Vec3& o) const { return {v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2]}; }
  Vec3 operator*(double s) const { return {v[0] * s, v[1] * s, v[2] * s}; }
  Vec3& operator+=(const Vec3& o) {
    v[0] += o.v[0];
    v[1] += o.v[1];
    v[2] += o.v[2];
    return *this;
  }

  double dot(const Vec3& o) const { return v[0] * o.v[0] + v[1] * o.v[1] + v[2] * o.v[2]; }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }
};

inline Vec3 operator*(double s, const Vec3& a) { return a * s; }

/// Symmetric 3x3 matrix stored densely; used for coefficient arrays and Hessians.
struct Mat3 {
  double m[3][3]{};

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }

  static Mat3 identity() {
    Mat3 a;
    a(0, 0) = a(1, 1) = a(2, 2) = 1.0;
    return a;
  }

  Vec3 apply(const Vec3& x) const {
    Vec3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i] += m[i][j] * x[j];
    return r;
  }

  Mat3 transpose() const {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = m[j][i];
    return t;
  }
};

// C^infinity bump on (-1,1): b(0)=1, b=0 outside. Derivatives are analytic and
// vanish to all orders at |t|=1.
struct SmoothBump {
  static double value(double t) {
    const double s = 1.0 - t * t;
    if (s <= 0.0) return 0.0;
    return std::exp(1.0 - 1.0 / s);
  }
  static double deriv(double t) {
    const double s = 1.0 - t * t;
    if (s <= 0.0) return 0.0;
    return value(t) * (-2.0 * t / (s * s));
  }
  static double deriv2(double t) {
    const double s = 1.0 - t * t;
    if (s <= 0.0) return 0.0;
    const double g = -2.0 * t / (s * s);            // (log b)'
    const double gp = (-2.0 * s - 8.0 * t * t) / (s * s * s);  // (log b)''
    return value(t) * (g * g + gp);
  }
};

// Quintic smoothstep cutoff: 1 on [-1,1], 0 outside [-2,2], C^2 transitions.
struct Cutoff {
  static double smoothstep(double u) {  // 0 at u=0, 1 at u=1
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
  }
  static double smoothstep_d(double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    return u * u * (30.0 + u * (-60.0 + 30.0 * u));
  }
  static double smoothstep_d2(double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    return u * (60.0 + u * (-180.0 + 120.0 * u));
  }
  static double value(double t) {
    const double a = std::abs(t);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    return smoothstep(2.0 - a);
  }
  static double deriv(double t) {
    const double a = std::abs(t);
    if (a <= 1.0 || a >= 2.0) return 0.0;
    const double sgn = (t > 0.0) ? 1.0 : -1.0;
    return -sgn * smoothstep_d(2.0 - a);
  }
  static double deriv2(double t) {
    const double a = std::abs(t);
    if (a <= 1.0 || a >= 2.0) return 0.0;
    return smoothstep_d2(2.0 - a);
  }
};

/// Gauss-Legendre nodes/weights on [-1,1], computed once by Newton iteration
/// on the Legendre recurrence.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(int n) : nodes(n), weights(n) {
    for (int i = 0; i < n; ++i) {
      // Chebyshev initial guess
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

/// Cubic Lagrange interpolation on a sorted, possibly non-uniform axis.
/// Uses the 4 nodes bracketing q (clamped near the ends); C^0 across cells.
class CubicInterp1D {
 public:
  static int bracket(const std::vector<double>& xs, double q) {
    // first index of the 4-point window
    int lo = 0, hi = static_cast<int>(xs.size()) - 1;
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      if (xs[static_cast<std::size_t>(mid)] <= q)
        lo = mid;
      else
        hi = mid;
    }
    int first = lo - 1;
    const int n = static_cast<int>(xs.size());
    if (first < 0) first = 0;
    if (first > n - 4) first = n - 4;
    return first;
  }

  static std::array<double, 4> basis(const std::vector<double>& xs, int first, double q) {
    std::array<double, 4> w{};
    for (int a = 0; a < 4; ++a) {
      double num = 1.0, den = 1.0;
      const double xa = xs[static_cast<std::size_t>(first + a)];
      for (int b = 0; b < 4; ++b) {
        if (b == a) continue;
        const double xb = xs[static_cast<std::size_t>(first + b)];
        num *= (q - xb);
        den *= (xa - xb);
      }
      w[static_cast<std::size_t>(a)] = num / den;
    }
    return w;
  }
};

inline double sqr(double x) { return x * x; }

}  // namespace wedgeshock
