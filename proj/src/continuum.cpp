#include "ctqw/continuum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ctqw {

namespace {

// Below this argument the power series converges in a handful of terms with
// no cancellation trouble.
constexpr double kSeriesArgMax = 2.0;

double bessel_series(int n, double x) {
  const double half = 0.5 * x;
  double prefactor = 1.0;
  for (int i = 1; i <= n; ++i) prefactor *= half / i;
  if (prefactor == 0.0) return 0.0;
  double term = 1.0;
  double sum = 1.0;
  const double half2 = half * half;
  for (int k = 1; k <= 64; ++k) {
    term *= -half2 / (static_cast<double>(k) * (n + k));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return prefactor * sum;
}

// Miller's algorithm: run the three-term recurrence downward from a start
// order well inside the decaying regime and normalize with
// J_0 + 2 sum_k J_{2k} = 1.
double bessel_miller(int n, double x) {
  const int start = n + static_cast<int>(std::ceil(10.0 + 2.0 * x));
  constexpr double kRescaleAt = 1e100;
  constexpr double kRescaleBy = 1e-100;

  double above = 0.0;   // f_{k+1}
  double current = 1e-30;  // f_k seeded arbitrarily small
  double norm = 0.0;
  double target = 0.0;
  for (int k = start; k >= 1; --k) {
    const double below = (2.0 * k / x) * current - above;
    above = current;
    current = below;
    if (k - 1 == n) target = current;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0 ? 1.0 : 2.0) * current;
    if (std::abs(current) > kRescaleAt) {
      current *= kRescaleBy;
      above *= kRescaleBy;
      norm *= kRescaleBy;
      target *= kRescaleBy;
    }
  }
  return target / norm;
}

}  // namespace

double bessel_j(int order, double x, int max_order) {
  if (!(x >= 0.0)) throw std::invalid_argument("bessel_j needs x >= 0");
  const int n = std::abs(order);
  if (n > max_order) {
    throw std::invalid_argument("Bessel order " + std::to_string(order) +
                                " above maximum " + std::to_string(max_order));
  }
  const double sign = (order < 0 && n % 2 == 1) ? -1.0 : 1.0;
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  if (x <= kSeriesArgMax) return sign * bessel_series(n, x);
  return sign * bessel_miller(n, x);
}

ContinuumAmplitude continuum_amplitude(int dx, int dy, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
  // i^d for integer d of either sign.
  auto ipow = [](int d) {
    static const std::complex<double> cycle[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return cycle[((d % 4) + 4) % 4];
  };
  return {dx, dy, t,
          ipow(dx) * ipow(dy) * std::polar(1.0, -4.0 * t) *
              bessel_j(dx, 2.0 * t) * bessel_j(dy, 2.0 * t)};
}

double continuum_probability(int dx, int dy, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
  const double amplitude = bessel_j(dx, 2.0 * t) * bessel_j(dy, 2.0 * t);
  return amplitude * amplitude;
}

bool continuum_comparison_valid(int displacement, double t, int extent) {
  return 2.0 * t + std::abs(displacement) < 0.5 * extent - 2.0;
}

}  // namespace ctqw
