#pragma once

#include <map>
#include <string>
#include <utility>

#include "ncflow/scalar.hpp"
#include "ncflow/signature.hpp"
#include "ncflow/word.hpp"

namespace ncflow {

// Monomial of the tensor-square algebra: left (x) right, either plainly
// or twisted by the transposition of matrix coordinates.
struct TensorMono {
  Word left;
  Word right;
  bool twisted = false;

  static TensorMono plain(Word l, Word r) {
    return TensorMono{std::move(l), std::move(r), false};
  }
  static TensorMono tau(Word l, Word r) {
    return TensorMono{std::move(l), std::move(r), true};
  }
  static TensorMono unit() { return plain(Word::one(), Word::one()); }
  static TensorMono unit_tau() { return tau(Word::one(), Word::one()); }

  int degree() const { return left.degree() + right.degree(); }
  int degree_of(int letter) const {
    return left.degree_of(letter) + right.degree_of(letter);
  }

  std::string str() const {
    return left.str() + (twisted ? " (x)t " : " (x) ") + right.str();
  }

  friend bool operator<(const TensorMono& a, const TensorMono& b) {
    if (a.twisted != b.twisted) return a.twisted < b.twisted;
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  }
  friend bool operator==(const TensorMono& a, const TensorMono& b) {
    return a.twisted == b.twisted && a.left == b.left && a.right == b.right;
  }
};

// Finite Scalar-linear combination of tensor monomials; zero
// coefficients are never stored.
class TensorPoly {
 public:
  TensorPoly() = default;

  static TensorPoly zero() { return TensorPoly(); }
  static TensorPoly monomial(TensorMono m, Scalar c = Scalar::one()) {
    TensorPoly p;
    p.add(std::move(m), std::move(c));
    return p;
  }
  static TensorPoly unit() { return monomial(TensorMono::unit()); }
  static TensorPoly unit_tau() { return monomial(TensorMono::unit_tau()); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(TensorMono m, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorPoly& operator+=(const TensorPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  TensorPoly& operator-=(const TensorPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) {
    return a += b;
  }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) {
    return a -= b;
  }
  TensorPoly operator-() const {
    TensorPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend TensorPoly operator*(const Scalar& c, const TensorPoly& p) {
    TensorPoly out;
    for (const auto& [m, k] : p.terms_) out.add(m, c * k);
    return out;
  }
  friend TensorPoly operator*(const TensorPoly& p, const Scalar& c) {
    return c * p;
  }

  Scalar coefficient(const TensorMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero() : it->second;
  }

  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorPoly& a, const TensorPoly& b) {
    return !(a == b);
  }

  // Exchanges (x) and (x)t on every monomial (left-multiplication by the
  // twisted unit under the x-product).
  TensorPoly twist_flipped() const {
    TensorPoly out;
    for (const auto& [m, c] : terms_)
      out.add(TensorMono{m.left, m.right, !m.twisted}, c);
    return out;
  }

  const std::map<TensorMono, Scalar>& terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += "[" + c.str() + "] " + m.str();
    }
    return out;
  }

 private:
  std::map<TensorMono, Scalar> terms_;
};

// The x-product (coordinate composition in the second pair of indices),
// four monomial rules extended bilinearly. Twists combine with the
// stated factor reorderings.
inline TensorMono times_mono(const TensorMono& a, const TensorMono& b) {
  if (!a.twisted && !b.twisted)
    return TensorMono::plain(a.left.concat(b.left), a.right.concat(b.right));
  if (!a.twisted && b.twisted)
    return TensorMono::tau(a.right.concat(b.left), a.left.concat(b.right));
  if (a.twisted && !b.twisted)
    return TensorMono::tau(a.left.concat(b.left), a.right.concat(b.right));
  return TensorMono::plain(a.right.concat(b.left), a.left.concat(b.right));
}

inline TensorPoly times(const TensorPoly& x, const TensorPoly& y) {
  TensorPoly out;
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms()) out.add(times_mono(ma, mb), ca * cb);
  return out;
}

// The star-product, under which the regulated Hessian is inverted. The
// fully untwisted rule emits a formal trace factor into the coefficient,
// which is why the Signature is needed here.
inline TensorPoly star(const TensorPoly& x, const TensorPoly& y,
                       const Signature& sig) {
  TensorPoly out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      Scalar c = ca * cb;
      if (a.twisted && b.twisted) {
        out.add(TensorMono::tau(b.left.concat(a.left), a.right.concat(b.right)),
                std::move(c));
      } else if (!a.twisted && b.twisted) {
        out.add(TensorMono::plain(a.left,
                                  b.left.concat(a.right).concat(b.right)),
                std::move(c));
      } else if (a.twisted && !b.twisted) {
        out.add(TensorMono::plain(a.right.concat(b.left).concat(a.left),
                                  b.right),
                std::move(c));
      } else {
        c *= Scalar::trace(a.right.concat(b.left), sig);
        out.add(TensorMono::plain(a.left, b.right), std::move(c));
      }
    }
  }
  return out;
}

// Tensor-square trace: plain monomials give a product of traces, twisted
// ones a single merged trace. Tr(1) = N applies eagerly.
inline Scalar trace_tensor(const TensorPoly& x, const Signature& sig) {
  Scalar out;
  for (const auto& [m, c] : x.terms()) {
    if (m.twisted)
      out += c * Scalar::trace(m.left.concat(m.right), sig);
    else
      out += c * (Scalar::trace(m.left, sig) * Scalar::trace(m.right, sig));
  }
  return out;
}

}  // namespace ncflow
