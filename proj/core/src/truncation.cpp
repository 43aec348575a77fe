#include "ncflow/truncation.hpp"

#include <stdexcept>

namespace ncflow {

ActionFunctional TruncationSpec::action() const {
  ActionFunctional a;
  for (const auto& op : ops) {
    Scalar c = Scalar::symbol(sym(op.coupling)) * op.prefactor;
    if (op.left.empty()) {
      a.add_single(c * Scalar::N(-1), op.right);
    } else {
      a.add(c, op.left, op.right);
    }
  }
  return a;
}

void TruncationSpec::certify_against_spectral_action() const {
  for (const auto& op : ops) {
    auto v = certify_nonvanishing(op.key(), sig);
    if (!v.has_value())
      throw std::runtime_error("truncation operator " + op.key().str() +
                               " vanishes in the spectral action");
  }
}

TruncationSpec hermitian1_deg6() {
  TruncationSpec t;
  t.name = "hermitian1-deg6";
  t.sig = Signature::hermitian(1);
  t.fp_order = 3;
  Word X = Word::letter(0);
  auto pw = [&](int k) { return Word::power(0, k); };
  t.ops.push_back({"Z", Word::one(), pw(2), Scalar(Rational(1, 2)), 1, 0, true});
  t.ops.push_back({"g4", Word::one(), pw(4), Scalar(Rational(1, 4)), 2, 1, false});
  t.ops.push_back({"g6", Word::one(), pw(6), Scalar(Rational(1, 6)), 3, 2, false});
  t.ops.push_back({"g2_2", pw(2), pw(2), Scalar(Rational(1, 8)), 2, 2, false});
  t.ops.push_back({"g2_4", pw(2), pw(4), Scalar(Rational(1, 8)), 3, 3, false});
  (void)X;
  return t;
}

namespace {
struct Row {
  const char* coupling;
  const char* w1;
  const char* w2;
  Rational num;  // numeric prefactor
  int pa;        // power of ea in the prefactor
  int pb;        // power of eb
  int b;         // N^{-b} scaling
};
}  // namespace

TruncationSpec fuzzy2d_deg6(int p, int q) {
  if (p + q != 2) throw std::invalid_argument("fuzzy2d_deg6: p + q must be 2");
  TruncationSpec t;
  t.name = "fuzzy2d-deg6";
  t.sig = Signature::from_pq(p, q);
  t.fp_order = 2;

  // Quadratic and quartic rows keep the NCG symmetry factors and signs;
  // sextic rows run with unit prefactor.
  static const Row rows[] = {
      // quadratic
      {"Z", "", "AA", Rational(1, 2), 1, 0, 0},
      {"Z", "", "BB", Rational(1, 2), 0, 1, 0},
      {"d1_1", "A", "A", Rational(1, 2), 0, 0, 1},
      {"d01_01", "B", "B", Rational(1, 2), 0, 0, 1},
      // quartic single traces
      {"a4", "", "AAAA", Rational(1, 4), 0, 0, 1},
      {"b4", "", "BBBB", Rational(1, 4), 0, 0, 1},
      {"c22", "", "AABB", Rational(1), 1, 1, 1},
      {"c1111", "", "ABAB", Rational(-1, 2), 1, 1, 1},
      // quartic double traces
      {"d11_11", "AB", "AB", Rational(1), 0, 0, 2},
      {"d2_02", "AA", "BB", Rational(2), 1, 1, 2},
      {"d1_3", "A", "AAA", Rational(1), 1, 0, 2},
      {"d1_12", "A", "ABB", Rational(1), 0, 1, 2},
      {"d01_21", "B", "AAB", Rational(1), 1, 0, 2},
      {"d01_03", "B", "BBB", Rational(1), 0, 1, 2},
      {"d2_2", "AA", "AA", Rational(3), 0, 0, 2},
      {"d02_02", "BB", "BB", Rational(3), 0, 0, 2},
      // sextic single traces
      {"a6", "", "AAAAAA", Rational(1), 0, 0, 2},
      {"c42", "", "AAAABB", Rational(1), 0, 0, 2},
      {"c3111", "", "AAABAB", Rational(1), 0, 0, 2},
      {"c2121", "", "AABAAB", Rational(1), 0, 0, 2},
      {"b6", "", "BBBBBB", Rational(1), 0, 0, 2},
      {"c24", "", "AABBBB", Rational(1), 0, 0, 2},
      {"c1311", "", "ABBBAB", Rational(1), 0, 0, 2},
      {"c1212", "", "ABBABB", Rational(1), 0, 0, 2},
      // sextic double traces
      {"d1_5", "A", "AAAAA", Rational(1), 0, 0, 3},
      {"d1_14", "A", "ABBBB", Rational(1), 0, 0, 3},
      {"d1_32", "A", "AAABB", Rational(1), 0, 0, 3},
      {"d1_2111", "A", "AABAB", Rational(1), 0, 0, 3},
      {"d01_41", "B", "AAAAB", Rational(1), 0, 0, 3},
      {"d01_23", "B", "AABBB", Rational(1), 0, 0, 3},
      {"d01_1211", "B", "ABBAB", Rational(1), 0, 0, 3},
      {"d01_05", "B", "BBBBB", Rational(1), 0, 0, 3},
      {"d11_31", "AB", "AAAB", Rational(1), 0, 0, 3},
      {"d11_13", "AB", "ABBB", Rational(1), 0, 0, 3},
      {"d2_22", "AA", "AABB", Rational(1), 0, 0, 3},
      {"d2_1111", "AA", "ABAB", Rational(1), 0, 0, 3},
      {"d2_4", "AA", "AAAA", Rational(1), 0, 0, 3},
      {"d2_04", "AA", "BBBB", Rational(1), 0, 0, 3},
      {"d02_22", "BB", "AABB", Rational(1), 0, 0, 3},
      {"d02_1111", "BB", "ABAB", Rational(1), 0, 0, 3},
      {"d02_04", "BB", "BBBB", Rational(1), 0, 0, 3},
      {"d02_4", "BB", "AAAA", Rational(1), 0, 0, 3},
      {"d3_3", "AAA", "AAA", Rational(1), 0, 0, 3},
      {"d12_3", "ABB", "AAA", Rational(1), 0, 0, 3},
      {"d21_21", "AAB", "AAB", Rational(1), 0, 0, 3},
      {"d03_03", "BBB", "BBB", Rational(1), 0, 0, 3},
      {"d21_03", "AAB", "BBB", Rational(1), 0, 0, 3},
      {"d12_12", "ABB", "ABB", Rational(1), 0, 0, 3},
  };

  for (const auto& r : rows) {
    Word w1 = Word::parse(r.w1), w2 = Word::parse(r.w2);
    // a factor that is a bare traceless letter makes the operator vanish
    bool dead = false;
    for (const Word* w : {&w1, &w2})
      if (w->size() == 1 && t.sig.traceless(w->letter_at(0))) dead = true;
    if (dead) continue;
    Rational c = r.num;
    if (r.pa % 2 != 0) c = c * Rational(t.sig.sign(0));
    if (r.pb % 2 != 0) c = c * Rational(t.sig.sign(1));
    int degree = w1.degree() + w2.degree();
    t.ops.push_back({r.coupling, w1, w2, Scalar(c), degree / 2, r.b,
                     std::string(r.coupling) == "Z"});
  }
  return t;
}

}  // namespace ncflow
