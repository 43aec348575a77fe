#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace ncflow {

// A word in the free algebra: a finite sequence of letter indices
// (0-based). The empty word is the unit. Letters are stored in a
// std::string so short words stay inline.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}

  static Word one() { return Word(); }
  static Word letter(int i) { return Word(std::string(1, char(i))); }

  // Parses "AABB" style text, A == letter 0.
  static Word parse(const std::string& text) {
    std::string raw;
    raw.reserve(text.size());
    for (char c : text) {
      if (c >= 'A' && c <= 'Z') raw.push_back(char(c - 'A'));
    }
    return Word(raw);
  }

  bool empty() const { return letters_.empty(); }
  int size() const { return static_cast<int>(letters_.size()); }
  int degree() const { return size(); }
  int letter_at(int i) const { return letters_[size_t(i)]; }

  int degree_of(int letter) const {
    return static_cast<int>(
        std::count(letters_.begin(), letters_.end(), char(letter)));
  }

  int max_letter() const {
    int m = -1;
    for (char c : letters_) m = std::max(m, int(c));
    return m;
  }

  Word concat(const Word& o) const { return Word(letters_ + o.letters_); }

  Word subrange(int from, int count) const {
    return Word(letters_.substr(size_t(from), size_t(count)));
  }

  // Letters strictly between positions u and v walking forward on the
  // cycle (positions are 0-based, the walk wraps).
  Word arc(int u, int v) const {
    std::string out;
    int n = size();
    for (int p = (u + 1) % n; p != v; p = (p + 1) % n) out.push_back(letters_[size_t(p)]);
    return Word(out);
  }

  Word rotated(int k) const {
    if (empty()) return *this;
    int n = size();
    k = ((k % n) + n) % n;
    return Word(letters_.substr(size_t(k)) + letters_.substr(0, size_t(k)));
  }

  Word reversed() const {
    return Word(std::string(letters_.rbegin(), letters_.rend()));
  }

  static Word power(int letter, int k) {
    return Word(std::string(size_t(k), char(letter)));
  }

  // Order of the cyclic symmetry group: the number of rotations fixing
  // the word.
  int cyclic_symmetry() const {
    if (empty()) return 1;
    int n = size(), count = 0;
    for (int k = 0; k < n; ++k)
      if (rotated(k) == *this) ++count;
    return count;
  }

  const std::string& raw() const { return letters_; }

  std::string str() const {
    if (empty()) return "1";
    std::string out;
    for (char c : letters_) out.push_back(char('A' + c));
    return out;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters_ < b.letters_;
  }

 private:
  std::string letters_;
};

// Representative of the cyclic class of w, with reversal identified:
// the lexicographically smallest string among all rotations of w and of
// its reversal (letter order A < B < ...). Total, convention-free, and
// idempotent; words inside traces are keyed by it.
inline Word canonical_cyclic(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  for (const Word& base : {w, w.reversed()}) {
    for (int k = 0; k < w.size(); ++k) {
      Word cand = base.rotated(k);
      if (cand.raw() < best.raw()) best = cand;
    }
  }
  return best;
}

}  // namespace ncflow
