#include "ncflow/regulator.hpp"

#include <cmath>
#include <stdexcept>

namespace ncflow {

double regulator_profile(int a, int b, int N, double Z) {
  double s = double(a) * a + double(b) * b;
  double NN = double(N) * N;
  if (s > NN) return 0.0;
  return Z * (NN / s - 1.0);
}

double h_tilde_numeric(int k, int N, double eta) {
  if (k < 1 || k > 3) throw std::invalid_argument("h_tilde_numeric: k in 1..3");
  if (N < 2) throw std::invalid_argument("h_tilde_numeric: N >= 2");
  // dt r = Z [ 2 N^2/s - eta (N^2/s - 1) ],  Z + r = Z N^2/s  on the disk,
  // so dt r / (Z+r)^{k+1} = Z^{-k} [ (2 - eta)(s/N^2)^k + eta (s/N^2)^{k+1} ].
  const double NN = double(N) * N;
  double acc = 0.0;
  for (int a = 1; a <= N; ++a) {
    for (int b = 1; b <= N; ++b) {
      double s = double(a) * a + double(b) * b;
      if (s > NN) break;
      double u = s / NN;
      double uk = std::pow(u, k);
      acc += (2.0 - eta) * uk + eta * uk * u;
    }
  }
  return acc / NN;
}

double h_continuum_naive(int k, double eta) {
  // N^-2 sum -> (pi/4) int_0^1 [(2-eta) u^k + eta u^{k+1}] du
  return M_PI / 4.0 * ((2.0 - eta) / (k + 1) + eta / (k + 2));
}

double HClosedForm::at(double eta) const {
  return M_PI * (c0.to_double() + c1.to_double() * eta);
}

HClosedForm h_closed_form(int k) {
  switch (k) {
    case 1: return {Rational(6, 24), Rational(-5, 24)};
    case 2: return {Rational(8, 48), Rational(-7, 48)};
    case 3: return {Rational(10, 80), Rational(-9, 80)};
    default: throw std::invalid_argument("h_closed_form: k in 1..3");
  }
}

double h_closed_minus_numeric(int k, int N) {
  return std::abs(h_closed_form(k).at(0.0) - h_tilde_numeric(k, N, 0.0));
}

}  // namespace ncflow
