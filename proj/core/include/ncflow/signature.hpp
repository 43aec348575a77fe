#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ncflow {

// Letter count plus one sign per letter: e_i = +1 for a Hermitian
// generator, -1 for an anti-Hermitian (traceless) one. For fuzzy
// 2-geometries the signature (p,q) maps to the first p letters carrying
// +1 and the remaining q carrying -1.
struct Signature {
  int n = 1;
  std::vector<int> e;

  Signature() : n(1), e{+1} {}
  Signature(int n_, std::vector<int> e_) : n(n_), e(std::move(e_)) {
    if (n < 1 || int(e.size()) != n)
      throw std::invalid_argument("Signature: sign list must have n entries");
    for (int s : e)
      if (s != 1 && s != -1)
        throw std::invalid_argument("Signature: signs must be +1 or -1");
  }

  static Signature hermitian(int n_) {
    return Signature(n_, std::vector<int>(size_t(n_), +1));
  }

  static Signature from_pq(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1)
      throw std::invalid_argument("Signature: bad (p,q)");
    std::vector<int> e;
    for (int i = 0; i < p; ++i) e.push_back(+1);
    for (int i = 0; i < q; ++i) e.push_back(-1);
    return Signature(p + q, std::move(e));
  }

  int sign(int letter) const { return e[size_t(letter)]; }

  // Anti-Hermitian generators are traceless (su(N)); the formal trace
  // symbol of such a single letter vanishes identically.
  bool traceless(int letter) const { return e[size_t(letter)] == -1; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += (e[size_t(i)] > 0 ? "+" : "-");
    return s + ")";
  }
};

}  // namespace ncflow
