#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncflow/rational.hpp"
#include "ncflow/signature.hpp"
#include "ncflow/symbol.hpp"
#include "ncflow/word.hpp"

namespace ncflow {

// Power product of symbols; exponents may be negative (N and Z appear
// with Laurent powers). Factors are kept sorted by symbol id.
struct Mono {
  std::vector<std::pair<SymbolId, int>> factors;

  static Mono one() { return Mono{}; }
  static Mono of(SymbolId s, int e = 1) {
    Mono m;
    if (e != 0) m.factors.push_back({s, e});
    return m;
  }

  bool is_one() const { return factors.empty(); }

  int exponent_of(SymbolId s) const {
    for (const auto& [id, e] : factors)
      if (id == s) return e;
    return 0;
  }

  Mono times(const Mono& o) const {
    Mono out;
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() || b != o.factors.end()) {
      if (b == o.factors.end() || (a != factors.end() && a->first < b->first)) {
        out.factors.push_back(*a++);
      } else if (a == factors.end() || b->first < a->first) {
        out.factors.push_back(*b++);
      } else {
        int e = a->second + b->second;
        if (e != 0) out.factors.push_back({a->first, e});
        ++a;
        ++b;
      }
    }
    return out;
  }

  // Removes the symbol entirely, returning its old exponent.
  Mono without(SymbolId s, int* exp_out) const {
    Mono out;
    *exp_out = 0;
    for (const auto& f : factors) {
      if (f.first == s)
        *exp_out = f.second;
      else
        out.factors.push_back(f);
    }
    return out;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [id, e] : factors) d += e;
    return d;
  }

  friend bool operator<(const Mono& x, const Mono& y) {
    return x.factors < y.factors;
  }
  friend bool operator==(const Mono& x, const Mono& y) {
    return x.factors == y.factors;
  }
};

// Element of the commutative coefficient ring: an exact
// rational-coefficient Laurent polynomial in the interned symbols
// (N, Z, eta, h_k, couplings, formal traces Tr(w)).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational c) {
    if (!c.is_zero()) terms_[Mono::one()] = c;
  }
  Scalar(std::int64_t c) : Scalar(Rational(c)) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(Rational(1)); }
  static Scalar symbol(SymbolId s, int e = 1) {
    Scalar out;
    out.terms_[Mono::of(s, e)] = Rational(1);
    return out;
  }
  static Scalar from_mono(const Mono& m, Rational c = Rational(1)) {
    Scalar out;
    if (!c.is_zero()) out.terms_[m] = c;
    return out;
  }
  static Scalar N(int e = 1) { return symbol(sym_N(), e); }
  static Scalar Z(int e = 1) { return symbol(sym_Z(), e); }
  static Scalar eta() { return symbol(sym_eta()); }
  static Scalar h(int k) { return symbol(sym_h(k)); }

  // Formal trace of a word: canonicalizes, applies Tr(1) = N eagerly and
  // kills single anti-Hermitian letters (tracelessness).
  static Scalar trace(const Word& w, const Signature& sig) {
    if (w.empty()) return N();
    Word c = canonical_cyclic(w);
    if (c.size() == 1 && sig.traceless(c.letter_at(0))) return zero();
    return symbol(SymbolTable::instance().intern_trace(c));
  }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational constant_part() const {
    auto it = terms_.find(Mono::one());
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Exact equality as normalized polynomials.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar& operator+=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  Scalar operator-() const {
    Scalar out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend Scalar operator*(const Rational& c, const Scalar& s) {
    Scalar out;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : s.terms_) out.terms_[m] = c * k;
    return out;
  }

  // Replaces a symbol by an arbitrary Scalar. Negative powers require the
  // replacement to be a plain symbol power or nonzero rational.
  Scalar substituted(SymbolId s, const Scalar& value) const {
    Scalar out;
    for (const auto& [m, c] : terms_) {
      int e = 0;
      Mono rest = m.without(s, &e);
      Scalar term;
      term.terms_[rest] = c;
      if (e != 0) term *= power_of(value, e);
      out += term;
    }
    return out;
  }

  // Coefficient (a Scalar in the remaining symbols) of s^e.
  Scalar coefficient_of(SymbolId s, int e) const {
    Scalar out;
    for (const auto& [m, c] : terms_) {
      int got = 0;
      Mono rest = m.without(s, &got);
      if (got == e) out.add_term(rest, c);
    }
    return out;
  }

  // Large-N limit: drop strictly negative powers of N; any surviving
  // positive power is a scaling inconsistency and throws.
  Scalar large_N_limit() const {
    Scalar out;
    for (const auto& [m, c] : terms_) {
      int e = m.exponent_of(sym_N());
      if (e < 0) continue;
      if (e > 0)
        throw std::runtime_error(
            "large_N_limit: positive power of N survives in " + str());
      out.add_term(m, c);
    }
    return out;
  }

  bool depends_on(SymbolId s) const {
    for (const auto& [m, c] : terms_)
      if (m.exponent_of(s) != 0) return true;
    return false;
  }

  int max_exponent_of(SymbolId s) const {
    int mx = 0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, m.exponent_of(s));
    return mx;
  }

  // Formal partial derivative with respect to a symbol.
  Scalar differentiated(SymbolId s) const {
    Scalar out;
    for (const auto& [m, c] : terms_) {
      int e = m.exponent_of(s);
      if (e == 0) continue;
      int drop = 0;
      Mono rest = m.without(s, &drop);
      out.add_term(rest.times(Mono::of(s, e - 1)), c * Rational(e));
    }
    return out;
  }

  // Numeric evaluation; every symbol must be covered by the assignment.
  double evaluate(const std::function<double(SymbolId)>& value) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
      double t = c.to_double();
      for (const auto& [id, e] : m.factors) {
        double v = value(id);
        for (int i = 0; i < std::abs(e); ++i) t = e > 0 ? t * v : t / v;
      }
      acc += t;
    }
    return acc;
  }

  const std::map<Mono, Rational>& terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string t;
      if (m.is_one()) {
        t = c.str();
      } else {
        if (c == Rational(-1))
          t = "-";
        else if (!(c == Rational(1)))
          t = c.str() + "*";
        bool inner_first = true;
        for (const auto& [id, e] : m.factors) {
          if (!inner_first) t += "*";
          inner_first = false;
          t += SymbolTable::instance().name(id);
          if (e != 1) t += "^" + std::to_string(e);
        }
      }
      if (first) {
        out = t;
      } else {
        if (!t.empty() && t[0] == '-')
          out += " - " + t.substr(1);
        else
          out += " + " + t;
      }
      first = false;
    }
    return out;
  }

 private:
  static Scalar power_of(const Scalar& base, int e) {
    if (e >= 0) {
      Scalar acc = one();
      for (int i = 0; i < e; ++i) acc *= base;
      return acc;
    }
    // Negative power: only legal for single-symbol powers or rationals.
    if (base.terms_.size() != 1)
      throw std::domain_error("Scalar: negative power of a sum");
    const auto& [m, c] = *base.terms_.begin();
    Mono inv;
    for (const auto& [id, k] : m.factors) inv.factors.push_back({id, k * e});
    Scalar out;
    Rational cc(1);
    for (int i = 0; i < -e; ++i) cc = cc / c;
    out.terms_[inv] = cc;
    return out;
  }

  void add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Mono, Rational> terms_;
};

}  // namespace ncflow
