#pragma once

// The published first-order supertrace of the 2-matrix F (the h1-layer
// of the flow before scaling), one row per generated operator, with bar
// couplings, powers of N, and the signs (ea, eb) kept symbolic.

#include <vector>

#include "ncflow/scalar.hpp"
#include "ncflow/spectral.hpp"

namespace golden {

struct SupertraceTerm {
  const char* coupling;
  int n_pow;  // power of N
  int pa;     // power of ea
  int pb;     // power of eb
  ncflow::Rational r;
};

struct SupertraceLine {
  const char* w1;  // "" = single trace
  const char* w2;
  std::vector<SupertraceTerm> terms;
};

inline const std::vector<SupertraceLine>& supertrace_list_lines() {
  using R = ncflow::Rational;
  static const std::vector<SupertraceLine> lines = {
      {"A", "A",
       {{"a4", 0, 1, 0, R(1)},
        {"c1111", 0, 1, 0, R(-1)},
        {"d2_2", 0, 1, 0, R(24)},
        {"d11_11", 0, 0, 1, R(2)},
        {"d1_12", 1, 0, 0, R(2)},
        {"d1_3", 1, 0, 0, R(6)}}},
      {"B", "B",
       {{"d11_11", 0, 1, 0, R(2)},
        {"b4", 0, 0, 1, R(1)},
        {"c1111", 0, 0, 1, R(-1)},
        {"d02_02", 0, 0, 1, R(24)},
        {"d01_03", 1, 0, 0, R(6)},
        {"d01_21", 1, 0, 0, R(2)}}},
      {"", "AA",
       {{"d01_21", 1, 1, 1, R(2)},
        {"d2_02", 2, 1, 0, R(4)},
        {"d2_2", 2, 1, 0, R(12)},
        {"a4", 1, 1, 0, R(2)},
        {"c22", 1, 1, 0, R(2)},
        {"d1_3", 1, 0, 0, R(6)}}},
      {"", "BB",
       {{"d1_12", 1, 1, 1, R(2)},
        {"d02_02", 2, 0, 1, R(12)},
        {"d2_02", 2, 0, 1, R(4)},
        {"b4", 1, 0, 1, R(2)},
        {"c22", 1, 0, 1, R(2)},
        {"d01_03", 1, 0, 0, R(6)}}},
      {"", "AAAA",
       {{"d2_4", 2, 1, 0, R(2)},
        {"a6", 1, 1, 0, R(12)},
        {"d1_5", 1, 1, 0, R(10)},
        {"d02_4", 2, 0, 1, R(2)},
        {"c42", 1, 0, 1, R(2)},
        {"d01_41", 1, 0, 1, R(2)}}},
      {"", "BBBB",
       {{"d2_04", 2, 1, 0, R(2)},
        {"c24", 1, 1, 0, R(2)},
        {"d1_14", 1, 1, 0, R(2)},
        {"d02_04", 2, 0, 1, R(2)},
        {"b6", 1, 0, 1, R(12)},
        {"d01_05", 1, 0, 1, R(10)}}},
      {"", "AABB",
       {{"d2_22", 2, 1, 0, R(2)},
        {"c42", 1, 1, 0, R(2)},
        {"d1_32", 1, 1, 0, R(2)},
        {"d02_22", 2, 0, 1, R(2)},
        {"c24", 1, 0, 1, R(2)},
        {"d01_23", 1, 0, 1, R(2)}}},
      {"", "ABAB",
       {{"d2_1111", 2, 1, 0, R(2)},
        {"c3111", 1, 1, 0, R(2)},
        {"d1_2111", 1, 1, 0, R(2)},
        {"d02_1111", 2, 0, 1, R(2)},
        {"c1311", 1, 0, 1, R(2)},
        {"d01_1211", 1, 0, 1, R(2)}}},
      {"AA", "BB",
       {{"d02_4", 1, 1, 0, R(8)},
        {"d2_22", 1, 1, 0, R(2)},
        {"c42", 0, 1, 0, R(2)},
        {"d12_3", 0, 1, 0, R(6)},
        {"d02_22", 1, 0, 1, R(2)},
        {"d2_04", 1, 0, 1, R(8)},
        {"c24", 0, 0, 1, R(2)},
        {"d21_03", 0, 0, 1, R(6)}}},
      {"A", "AAA",
       {{"d1_5", 1, 1, 0, R(10)},
        {"d3_3", 1, 1, 0, R(12)},
        {"a6", 0, 1, 0, R(12)},
        {"d2_4", 0, 1, 0, R(16)},
        {"d12_3", 1, 0, 1, R(2)},
        {"d1_32", 1, 0, 1, R(2)},
        {"c3111", 0, 0, 1, R(2)},
        {"d11_31", 0, 0, 1, R(2)}}},
      {"A", "ABB",
       {{"d12_3", 1, 1, 0, R(6)},
        {"d1_32", 1, 1, 0, R(2)},
        {"c42", 0, 1, 0, R(2)},
        {"d2_22", 0, 1, 0, R(4)},
        {"d12_12", 1, 0, 1, R(4)},
        {"d1_14", 1, 0, 1, R(2)},
        {"c1311", 0, 0, 1, R(2)},
        {"d11_13", 0, 0, 1, R(2)}}},
      {"B", "AAB",
       {{"d01_41", 1, 1, 0, R(2)},
        {"d21_21", 1, 1, 0, R(4)},
        {"c3111", 0, 1, 0, R(2)},
        {"d11_31", 0, 1, 0, R(2)},
        {"d01_23", 1, 0, 1, R(2)},
        {"d21_03", 1, 0, 1, R(6)},
        {"c24", 0, 0, 1, R(2)},
        {"d02_22", 0, 0, 1, R(4)}}},
      {"B", "BBB",
       {{"d01_23", 1, 1, 0, R(2)},
        {"d21_03", 1, 1, 0, R(2)},
        {"c1311", 0, 1, 0, R(2)},
        {"d11_13", 0, 1, 0, R(2)},
        {"d01_05", 1, 0, 1, R(10)},
        {"d03_03", 1, 0, 1, R(12)},
        {"b6", 0, 0, 1, R(12)},
        {"d02_04", 0, 0, 1, R(16)}}},
      {"AB", "AB",
       {{"d11_31", 1, 1, 0, R(2)},
        {"c2121", 0, 1, 0, R(2)},
        {"d21_21", 0, 1, 0, R(2)},
        {"d11_13", 1, 0, 1, R(2)},
        {"c1212", 0, 0, 1, R(2)},
        {"d12_12", 0, 0, 1, R(2)}}},
      {"AA", "AA",
       {{"d2_4", 1, 1, 0, R(8)},
        {"a6", 0, 1, 0, R(6)},
        {"d3_3", 0, 1, 0, R(18)},
        {"d2_22", 1, 0, 1, R(2)},
        {"c2121", 0, 0, 1, R(2)},
        {"d21_21", 0, 0, 1, R(2)}}},
      {"BB", "BB",
       {{"d02_22", 1, 1, 0, R(2)},
        {"c1212", 0, 1, 0, R(2)},
        {"d12_12", 0, 1, 0, R(2)},
        {"d02_04", 1, 0, 1, R(8)},
        {"b6", 0, 0, 1, R(6)},
        {"d03_03", 0, 0, 1, R(18)}}},
  };
  return lines;
}

inline ncflow::Scalar supertrace_list_value(const SupertraceLine& line,
                                       const ncflow::Signature& sig) {
  ncflow::Scalar out;
  for (const auto& t : line.terms) {
    ncflow::Rational c = t.r;
    if (t.pa % 2 != 0) c = c * ncflow::Rational(sig.sign(0));
    if (t.pb % 2 != 0) c = c * ncflow::Rational(sig.sign(1));
    out += ncflow::Scalar(c) * ncflow::Scalar::N(t.n_pow) *
           ncflow::Scalar::symbol(ncflow::sym(t.coupling));
  }
  return out;
}

inline ncflow::TraceOp supertrace_list_op(const SupertraceLine& line) {
  ncflow::Word w1 = ncflow::Word::parse(line.w1);
  ncflow::Word w2 = ncflow::Word::parse(line.w2);
  return w1.empty() ? ncflow::TraceOp::single(w2)
                    : ncflow::TraceOp::pair(w1, w2);
}

}  // namespace golden
