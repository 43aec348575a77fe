#pragma once

#include <string>
#include <vector>

#include "ncflow/flow.hpp"
#include "ncflow/regulator.hpp"

namespace ncflow {

// A beta system compiled to doubles, with the anomalous dimension
// eliminated analytically: residual_I(g) = beta_I(g, eta(g), h(eta(g)))
// where eta(g) solves its defining equation with the closed-form
// h_k(eta) inserted, by an inner scalar Newton iteration.
class PolySystem {
 public:
  // Compiles the (possibly duality-reduced) system. The system must have
  // a single eta equation.
  static PolySystem compile(const BetaSystem& sys);

  int dim() const { return int(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;

  // eta(g) via the inner solve (tolerance 1e-13).
  double eta_of(const double* g) const;

  void residual(const double* g, double* out) const;
  double max_residual(const double* g) const;

  // Full Jacobian of the residual map, including the implicit
  // eta-dependence, dim x dim row-major. This is what Newton uses.
  void jacobian(const double* g, double* out) const;

  // Stability matrix of the flow: d beta_I / d g_J with the anomalous
  // dimension frozen at eta(g) (the critical exponents are minus its
  // eigenvalues).
  void stability_jacobian(const double* g, double* out) const;

 private:
  struct Term {
    double coeff;
    // variable-index/exponent factors; indices: 0..n-1 couplings,
    // n = eta, n+1..n+3 = h1..h3
    std::vector<std::pair<int, int>> factors;
  };
  struct Poly {
    std::vector<Term> terms;
    double eval(const double* x) const;
  };

  Poly compile_scalar(const Scalar& s) const;
  void fill_vars(const double* g, double eta, double* x) const;

  std::vector<std::string> names_;
  std::vector<Poly> betas_;
  std::vector<std::vector<Poly>> dbeta_;  // [i][j] = d beta_i / d var_j over all vars
  Poly eta_rhs_;
  std::vector<Poly> deta_;  // d eta_rhs / d var_j
  double hc0_[4] = {0, 0, 0, 0};
  double hc1_[4] = {0, 0, 0, 0};
};

}  // namespace ncflow
