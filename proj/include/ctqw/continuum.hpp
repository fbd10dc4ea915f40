#pragma once

#include <complex>

namespace ctqw {

inline constexpr int kDefaultMaxBesselOrder = 200;

// Bessel function of the first kind, J_n(x) for x >= 0. Power series at
// small argument, Miller's downward recurrence with normalization otherwise;
// J_{-n} = (-1)^n J_n. Throws when |n| exceeds max_order.
double bessel_j(int order, double x, int max_order = kDefaultMaxBesselOrder);

// Transition amplitude of the infinite square lattice for displacement
// (dx, dy): i^dx i^dy exp(-i 4 t) J_dx(2t) J_dy(2t).
struct ContinuumAmplitude {
  int dx = 0;
  int dy = 0;
  double time = 0.0;
  std::complex<double> value;
};

ContinuumAmplitude continuum_amplitude(int dx, int dy, double t);

// [J_dx(2t) J_dy(2t)]^2.
double continuum_probability(int dx, int dy, double t);

// Whether a finite torus of the given extent still mimics the infinite
// lattice at displacement d and time t: the ballistic front moves at speed
// about 2 sites per unit time, so require 2t + |d| < extent/2 - 2.
bool continuum_comparison_valid(int displacement, double t, int extent);

}  // namespace ctqw
