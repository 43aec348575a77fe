#pragma once

#include <map>
#include <string>

#include "ncflow/scalar.hpp"
#include "ncflow/word.hpp"

namespace ncflow {

// Noncommutative polynomial: Scalar-linear combination of words.
class NCPoly {
 public:
  NCPoly() = default;

  static NCPoly zero() { return NCPoly(); }
  static NCPoly word(Word w, Scalar c = Scalar::one()) {
    NCPoly p;
    p.add(std::move(w), std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  void add(Word w, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator*(const Scalar& c, const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, k] : p.terms_) out.add(w, c * k);
    return out;
  }

  Scalar coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero() : it->second;
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  const std::map<Word, Scalar>& terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += "[" + c.str() + "] " + w.str();
    }
    return out;
  }

 private:
  std::map<Word, Scalar> terms_;
};

}  // namespace ncflow
