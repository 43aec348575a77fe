#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncflow/rational.hpp"
#include "ncflow/signature.hpp"
#include "ncflow/word.hpp"

namespace ncflow {

// Perfect matching on m points sitting on a circle; mate[p] is the point
// joined to p by a chord.
struct ChordDiagram {
  std::vector<int> mate;

  int points() const { return int(mate.size()); }
  int crossings() const;
};

// All (m-1)!! perfect matchings of 1..m, each exactly once.
std::vector<ChordDiagram> enumerate_chord_diagrams(int m);

// (-1)^{#crossings} * prod over chords of e_{mu_v} delta^{mu_v mu_u};
// zero when a chord joins unequal letters. mu assigns a letter to every
// point.
int chi_tensor(const ChordDiagram& chi, const std::vector<int>& mu,
               const Signature& sig);

// Unordered pair of cyclic words; single-trace content is carried as
// {1, w}. This keys the spectral-action expansion and the flow basis.
struct TraceOp {
  Word first;   // canonical, possibly empty
  Word second;  // canonical

  static TraceOp single(const Word& w) {
    return TraceOp{Word::one(), canonical_cyclic(w)};
  }
  static TraceOp pair(const Word& a, const Word& b) {
    Word ca = canonical_cyclic(a), cb = canonical_cyclic(b);
    if (cb < ca) std::swap(ca, cb);
    return TraceOp{ca, cb};
  }

  bool is_single() const { return first.empty(); }
  int degree() const { return first.degree() + second.degree(); }
  int degree_of(int letter) const {
    return first.degree_of(letter) + second.degree_of(letter);
  }

  std::string str() const {
    if (is_single()) return "1 (x) " + second.str();
    return first.str() + " (x) " + second.str();
  }

  friend bool operator<(const TraceOp& a, const TraceOp& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
  friend bool operator==(const TraceOp& a, const TraceOp& b) {
    return a.first == b.first && a.second == b.second;
  }
};

using SpectralExpansion = std::map<TraceOp, Rational>;

// Raw value of one diagram: the full sum over letter assignments and
// subsets, no normalization applied.
SpectralExpansion diagram_value(const ChordDiagram& chi, const Signature& sig);

// Degree-m slice of the spectral action, normalized so that the
// f(z) = (1/4)(z^2/2 + z^4/4 + z^6/6) convention reproduces the
// published operator tables coefficient-for-coefficient.
SpectralExpansion spectral_expansion(int m, const Signature& sig);

// Same content before normalization (sum of diagram_value over all
// diagrams); exposed for the normalization cross-checks.
SpectralExpansion spectral_expansion_raw(int m, const Signature& sig);

// Certifies that an operator has nonzero coefficient in Tr D^m for the
// minimal m (the sum of its letter degrees); returns that coefficient.
// Rejects operators with odd letter degrees.
std::optional<Rational> certify_nonvanishing(const TraceOp& op,
                                             const Signature& sig);

}  // namespace ncflow
