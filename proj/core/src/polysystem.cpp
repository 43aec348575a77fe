#include "ncflow/polysystem.hpp"

#include <cmath>
#include <stdexcept>

namespace ncflow {

double PolySystem::Poly::eval(const double* x) const {
  double acc = 0.0;
  for (const auto& t : terms) {
    double v = t.coeff;
    for (const auto& [idx, e] : t.factors)
      for (int k = 0; k < e; ++k) v *= x[idx];
    acc += v;
  }
  return acc;
}

PolySystem::Poly PolySystem::compile_scalar(const Scalar& s) const {
  const int n = dim();
  Poly p;
  for (const auto& [mono, coeff] : s.terms()) {
    Term t;
    t.coeff = coeff.to_double();
    for (const auto& [id, e] : mono.factors) {
      if (e < 0) throw std::runtime_error("PolySystem: negative exponent");
      int idx = -1;
      if (id == sym_eta()) {
        idx = n;
      } else {
        for (int k = 1; k <= 3; ++k)
          if (id == sym_h(k)) idx = n + k;
        if (idx < 0) {
          auto& tab = SymbolTable::instance();
          for (int j = 0; j < n; ++j)
            if (sym(names_[size_t(j)]) == id) idx = j;
          if (idx < 0)
            throw std::runtime_error("PolySystem: unknown symbol " +
                                     tab.name(id));
        }
      }
      t.factors.push_back({idx, e});
    }
    p.terms.push_back(std::move(t));
  }
  return p;
}

PolySystem PolySystem::compile(const BetaSystem& sys) {
  if (sys.eta_rhs.size() != 1)
    throw std::invalid_argument(
        "PolySystem: expected a single eta equation (reduce dualities or "
        "impose eta_a = eta_b first)");
  PolySystem out;
  out.names_ = sys.couplings;
  for (int k = 1; k <= 3; ++k) {
    HClosedForm f = h_closed_form(k);
    out.hc0_[k] = M_PI * f.c0.to_double();
    out.hc1_[k] = M_PI * f.c1.to_double();
  }
  const int n = out.dim();
  for (const auto& b : sys.betas) out.betas_.push_back(out.compile_scalar(b));
  out.eta_rhs_ = out.compile_scalar(sys.eta_rhs[0]);
  // derivative polynomials over couplings, eta and the h's
  auto all_vars = [&](const Scalar& s) {
    std::vector<Poly> d;
    for (int j = 0; j < n; ++j)
      d.push_back(out.compile_scalar(s.differentiated(sym(sys.couplings[size_t(j)]))));
    d.push_back(out.compile_scalar(s.differentiated(sym_eta())));
    for (int k = 1; k <= 3; ++k)
      d.push_back(out.compile_scalar(s.differentiated(sym_h(k))));
    return d;
  };
  for (const auto& b : sys.betas) out.dbeta_.push_back(all_vars(b));
  out.deta_ = all_vars(sys.eta_rhs[0]);
  return out;
}

int PolySystem::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (names_[size_t(i)] == name) return i;
  throw std::out_of_range("PolySystem: unknown coupling " + name);
}

void PolySystem::fill_vars(const double* g, double eta, double* x) const {
  const int n = dim();
  for (int i = 0; i < n; ++i) x[i] = g[i];
  x[n] = eta;
  for (int k = 1; k <= 3; ++k) x[n + k] = hc0_[k] + hc1_[k] * eta;
}

double PolySystem::eta_of(const double* g) const {
  const int n = dim();
  std::vector<double> x(size_t(n) + 4);
  double eta = 0.0;
  for (int it = 0; it < 64; ++it) {
    fill_vars(g, eta, x.data());
    double f = eta_rhs_.eval(x.data()) - eta;
    // d/d eta: the rhs depends on eta only through the h_k
    double df = -1.0;
    for (int k = 1; k <= 3; ++k)
      df += deta_[size_t(n + k)].eval(x.data()) * hc1_[k];
    double step = f / df;
    eta -= step;
    if (std::abs(step) < 1e-13) break;
  }
  return eta;
}

void PolySystem::residual(const double* g, double* out) const {
  const int n = dim();
  std::vector<double> x(size_t(n) + 4);
  fill_vars(g, eta_of(g), x.data());
  for (int i = 0; i < n; ++i) out[i] = betas_[size_t(i)].eval(x.data());
}

double PolySystem::max_residual(const double* g) const {
  std::vector<double> r(static_cast<size_t>(dim()));
  residual(g, r.data());
  double m = 0.0;
  for (double v : r) m = std::max(m, std::abs(v));
  return m;
}

void PolySystem::stability_jacobian(const double* g, double* out) const {
  const int n = dim();
  std::vector<double> x(static_cast<size_t>(n) + 4, 0.0);
  fill_vars(g, eta_of(g), x.data());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[size_t(i) * size_t(n) + size_t(j)] =
          dbeta_[size_t(i)][size_t(j)].eval(x.data());
}

void PolySystem::jacobian(const double* g, double* out) const {
  const int n = dim();
  std::vector<double> x(size_t(n) + 4);
  double eta = eta_of(g);
  fill_vars(g, eta, x.data());
  // implicit derivative of eta: eta = R(g, h(eta))
  double denom = 1.0;
  for (int k = 1; k <= 3; ++k)
    denom -= deta_[size_t(n + k)].eval(x.data()) * hc1_[k];
  std::vector<double> deta_dg(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j)
    deta_dg[size_t(j)] = deta_[size_t(j)].eval(x.data()) / denom;
  for (int i = 0; i < n; ++i) {
    // total eta-sensitivity of beta_i (direct plus through the h's)
    double bi_eta = dbeta_[size_t(i)][size_t(n)].eval(x.data());
    for (int k = 1; k <= 3; ++k)
      bi_eta += dbeta_[size_t(i)][size_t(n + k)].eval(x.data()) * hc1_[k];
    for (int j = 0; j < n; ++j)
      out[size_t(i) * size_t(n) + size_t(j)] =
          dbeta_[size_t(i)][size_t(j)].eval(x.data()) +
          bi_eta * deta_dg[size_t(j)];
  }
}

}  // namespace ncflow
