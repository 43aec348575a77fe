#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ncflow/derivative.hpp"
#include "ncflow/ncpoly.hpp"
#include "ncflow/signature.hpp"
#include "ncflow/tensor.hpp"

namespace ncflow {

// n x n matrix over the tensor-square algebra; entry (i,j) carries the
// mixed second derivatives d^{X_i} o d^{X_j}.
class SuperMatrix {
 public:
  SuperMatrix() = default;
  explicit SuperMatrix(int n) : n_(n), entries_(size_t(n) * size_t(n)) {}

  int dim() const { return n_; }

  TensorPoly& at(int i, int j) { return entries_[size_t(i) * size_t(n_) + size_t(j)]; }
  const TensorPoly& at(int i, int j) const {
    return entries_[size_t(i) * size_t(n_) + size_t(j)];
  }

  SuperMatrix& operator+=(const SuperMatrix& o) {
    for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  friend SuperMatrix operator*(const Scalar& c, const SuperMatrix& m) {
    SuperMatrix out(m.n_);
    for (size_t k = 0; k < m.entries_.size(); ++k)
      out.entries_[k] = c * m.entries_[k];
    return out;
  }

  SuperMatrix twist_flipped() const {
    SuperMatrix out(n_);
    for (size_t k = 0; k < entries_.size(); ++k)
      out.entries_[k] = entries_[k].twist_flipped();
    return out;
  }

  // Matrix composition over the letter index with the star-product on
  // entries; this is the multiplication under which the regulated
  // Hessian gets inverted.
  SuperMatrix star_compose(const SuperMatrix& o, const Signature& sig) const {
    SuperMatrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        TensorPoly acc;
        for (int j = 0; j < n_; ++j) acc += star(at(i, j), o.at(j, k), sig);
        out.at(i, k) = acc;
      }
    return out;
  }

  TensorPoly matrix_trace() const {
    TensorPoly out;
    for (int i = 0; i < n_; ++i) out += at(i, i);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<TensorPoly> entries_;
};

// One term of a truncated action: coupling * Tr(x)2 (left (x) right).
// Single-trace operators are encoded with an empty left word, so that
// Tr(1) = N emerges on its own; any 1/N normalization lives in the
// coupling Scalar.
struct ActionTerm {
  Scalar coupling;
  Word left;
  Word right;
};

struct ActionFunctional {
  std::vector<ActionTerm> terms;

  void add(Scalar coupling, Word left, Word right) {
    terms.push_back({std::move(coupling), std::move(left), std::move(right)});
  }
  void add_single(Scalar coupling, Word w) {
    terms.push_back({std::move(coupling), Word::one(), std::move(w)});
  }
};

// Hessian of one product of traces Tr(P) Tr(Q), entry (i,j):
//   Tr(Q) d2(P) + Tr(P) d2(Q) + D^i P (x)t D^j Q + D^i Q (x)t D^j P.
// An empty factor contributes its Tr(1) = N through the Scalar trace and
// drops out of the derivative parts.
inline TensorPoly hessian_entry(const Word& P, const Word& Q, int i, int j,
                                const Signature& sig) {
  TensorPoly out;
  Scalar trP = Scalar::trace(P, sig);
  Scalar trQ = Scalar::trace(Q, sig);
  out += trQ * double_derivative_trace(P, i, j);
  out += trP * double_derivative_trace(Q, i, j);
  NCPoly dPi = cyclic_derivative(P, i);
  NCPoly dQj = cyclic_derivative(Q, j);
  NCPoly dQi = cyclic_derivative(Q, i);
  NCPoly dPj = cyclic_derivative(P, j);
  for (const auto& [wa, ca] : dPi.terms())
    for (const auto& [wb, cb] : dQj.terms())
      out.add(TensorMono::tau(wa, wb), ca * cb);
  for (const auto& [wa, ca] : dQi.terms())
    for (const auto& [wb, cb] : dPj.terms())
      out.add(TensorMono::tau(wa, wb), ca * cb);
  return out;
}

// Signature-modified NC-Hessian of the action; diagonal entries carry
// e_i. The twisted version exchanges both tensor products in every entry.
inline SuperMatrix hessian(const ActionFunctional& action,
                           const Signature& sig, bool twisted) {
  SuperMatrix out(sig.n);
  for (const auto& term : action.terms) {
    for (int i = 0; i < sig.n; ++i)
      for (int j = 0; j < sig.n; ++j) {
        TensorPoly h = hessian_entry(term.left, term.right, i, j, sig);
        Scalar c = term.coupling;
        if (i == j && sig.sign(i) < 0) c = -c;
        out.at(i, j) += c * h;
      }
  }
  return twisted ? out.twist_flipped() : out;
}

// NC-Laplacian: the plain matrix trace of the signature-modified
// Hessian, i.e. sum_i e_i d^i o d^i applied to the action.
inline TensorPoly laplacian(const ActionFunctional& action,
                            const Signature& sig) {
  return hessian(action, sig, /*twisted=*/false).matrix_trace();
}

}  // namespace ncflow
