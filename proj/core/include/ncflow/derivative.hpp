#pragma once

#include "ncflow/ncpoly.hpp"
#include "ncflow/tensor.hpp"

namespace ncflow {

// Free difference quotient with respect to letter j: each occurrence of
// the letter splits the word into prefix (x) suffix.
inline TensorPoly nc_derivative(const Word& w, int j,
                                Scalar coeff = Scalar::one()) {
  TensorPoly out;
  for (int i = 0; i < w.size(); ++i) {
    if (w.letter_at(i) != j) continue;
    out.add(TensorMono::plain(w.subrange(0, i), w.subrange(i + 1, w.size() - i - 1)),
            coeff);
  }
  return out;
}

inline TensorPoly nc_derivative(const NCPoly& p, int j) {
  TensorPoly out;
  for (const auto& [w, c] : p.terms()) out += nc_derivative(w, j, c);
  return out;
}

// Cyclic derivative: flip-multiply (A (x) B -> BA) after the free
// difference quotient; equals the noncommutative derivative of the trace.
inline NCPoly cyclic_derivative(const Word& w, int j,
                                Scalar coeff = Scalar::one()) {
  NCPoly out;
  for (int i = 0; i < w.size(); ++i) {
    if (w.letter_at(i) != j) continue;
    // suffix * prefix
    out.add(w.subrange(i + 1, w.size() - i - 1).concat(w.subrange(0, i)), coeff);
  }
  return out;
}

inline NCPoly cyclic_derivative(const NCPoly& p, int j) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out += cyclic_derivative(w, j, c);
  return out;
}

// Second derivative of a single trace: the sum over directed pairings
// (u,v) on the cycle of w with letter(u) = j (inner derivative) and
// letter(v) = i (outer), emitting arc(u,v) (x) arc(v,u). Vanishes on
// degree < 2.
inline TensorPoly double_derivative_trace(const Word& w, int i, int j,
                                          Scalar coeff = Scalar::one()) {
  TensorPoly out;
  int n = w.size();
  if (n < 2) return out;
  for (int u = 0; u < n; ++u) {
    if (w.letter_at(u) != j) continue;
    for (int v = 0; v < n; ++v) {
      if (v == u || w.letter_at(v) != i) continue;
      out.add(TensorMono::plain(w.arc(u, v), w.arc(v, u)), coeff);
    }
  }
  return out;
}

}  // namespace ncflow
