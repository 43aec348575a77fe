#pragma once

#include "ncflow/rational.hpp"
#include "ncflow/scalar.hpp"

namespace ncflow {

// Quadratic IR profile r_N(a,b) = Z (N^2/(a^2+b^2) - 1) on the disk
// a^2 + b^2 <= N^2, zero outside. Z drops out of every h_k here.
double regulator_profile(int a, int b, int N, double Z);

// Lattice moment Z^k h~_k(N) / N^2: the double sum over the disk of
// dt r / (Z + r)^{k+1}, with dt acting on the explicit N^2 and on Z
// (dt Z = -eta Z), boundary term dropped. For eta = 0 this converges to
// pi/4, pi/6, pi/8 for k = 1, 2, 3 at rate O(1/N).
double h_tilde_numeric(int k, int N, double eta);

// Continuum limit of the same lattice sum (quarter-disk integral in
// polar coordinates, done in closed form). Second oracle for the
// numeric sum; its eta slope differs from the published closed form.
double h_continuum_naive(int k, double eta);

// Published closed forms: h1 = pi(6-5eta)/24, h2 = pi(8-7eta)/48,
// h3 = pi(10-9eta)/80. These are authoritative for the fixed-point
// pipeline. Returned as the pair (c0, c1) meaning pi*(c0 + c1*eta).
struct HClosedForm {
  Rational c0;
  Rational c1;
  double at(double eta) const;
};
HClosedForm h_closed_form(int k);

// |lattice - closed| at eta = 0 for convergence checks.
double h_closed_minus_numeric(int k, int N);

}  // namespace ncflow
