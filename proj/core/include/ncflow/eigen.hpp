#pragma once

#include <complex>
#include <vector>

namespace ncflow {

// Dense real matrix in row-major storage.
struct DMatrix {
  int n = 0;
  std::vector<double> a;

  explicit DMatrix(int n_ = 0) : n(n_), a(size_t(n_) * size_t(n_), 0.0) {}
  double& at(int i, int j) { return a[size_t(i) * size_t(n) + size_t(j)]; }
  double at(int i, int j) const { return a[size_t(i) * size_t(n) + size_t(j)]; }
};

// Eigenvalues of a general real matrix: balancing, Householder reduction
// to Hessenberg form, then the implicitly shifted double-step QR
// iteration. Throws on non-convergence.
std::vector<std::complex<double>> eigenvalues(DMatrix m);

}  // namespace ncflow
