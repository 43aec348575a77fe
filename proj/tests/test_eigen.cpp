#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "ncflow/eigen.hpp"

using namespace ncflow;

namespace {

// A = P D P^{-1} built by applying random elementary row/column
// operations to D, so the spectrum is known exactly.
DMatrix similarity_scramble(std::mt19937& rng, const DMatrix& d, int rounds) {
  DMatrix a = d;
  const int n = a.n;
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int r = 0; r < rounds; ++r) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    double c = coeff(rng);
    // row_i += c row_j ; col_j -= c col_i  (an elementary similarity)
    for (int k = 0; k < n; ++k) a.at(i, k) += c * a.at(j, k);
    for (int k = 0; k < n; ++k) a.at(k, j) -= c * a.at(k, i);
  }
  return a;
}

void check_spectrum(const std::vector<std::complex<double>>& got,
                    std::vector<std::complex<double>> want, double tol) {
  REQUIRE(got.size() == want.size());
  for (const auto& g : got) {
    double best = 1e300;
    size_t at = 0;
    for (size_t i = 0; i < want.size(); ++i) {
      double d = std::abs(g - want[i]);
      if (d < best) {
        best = d;
        at = i;
      }
    }
    CHECK(best < tol);
    want.erase(want.begin() + long(at));
  }
}

}  // namespace

TEST_CASE("eigenvalues of scrambled diagonal matrices") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n : {1, 2, 5, 13, 26}) {
    for (int rep = 0; rep < 6; ++rep) {
      DMatrix d(n);
      std::vector<std::complex<double>> want;
      for (int i = 0; i < n; ++i) {
        d.at(i, i) = u(rng);
        want.push_back(d.at(i, i));
      }
      DMatrix a = similarity_scramble(rng, d, 4 * n);
      check_spectrum(eigenvalues(a), want, 1e-8);
    }
  }
}

TEST_CASE("eigenvalues of scrambled rotation blocks") {
  // complex pairs a +- bi from 2x2 blocks [[a, b], [-b, a]]
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 8;
    DMatrix d(n);
    std::vector<std::complex<double>> want;
    for (int b = 0; b < n / 2; ++b) {
      double re = u(rng), im = std::abs(u(rng)) + 0.1;
      d.at(2 * b, 2 * b) = re;
      d.at(2 * b, 2 * b + 1) = im;
      d.at(2 * b + 1, 2 * b) = -im;
      d.at(2 * b + 1, 2 * b + 1) = re;
      want.push_back({re, im});
      want.push_back({re, -im});
    }
    DMatrix a = similarity_scramble(rng, d, 3 * n);
    check_spectrum(eigenvalues(a), want, 1e-8);
  }
}

TEST_CASE("eigenvalues of defective and triangular cases") {
  // Jordan-type block: double eigenvalue 2 (defective)
  DMatrix j(2);
  j.at(0, 0) = 2.0;
  j.at(0, 1) = 1.0;
  j.at(1, 1) = 2.0;
  check_spectrum(eigenvalues(j), {{2.0, 0.0}, {2.0, 0.0}}, 1e-6);
  // strictly triangular (nilpotent)
  DMatrix nil(3);
  nil.at(0, 1) = 5.0;
  nil.at(1, 2) = -3.0;
  check_spectrum(eigenvalues(nil), {{0, 0}, {0, 0}, {0, 0}}, 1e-6);
  // empty and 1x1
  CHECK(eigenvalues(DMatrix(0)).empty());
  DMatrix one(1);
  one.at(0, 0) = -7.5;
  check_spectrum(eigenvalues(one), {{-7.5, 0.0}}, 1e-12);
}
