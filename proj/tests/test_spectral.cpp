#include "doctest.h"
#include "golden_spectral.hpp"
#include "ncflow/spectral.hpp"

using namespace ncflow;

TEST_CASE("chord diagram counts (2k-1)!!") {
  CHECK(enumerate_chord_diagrams(2).size() == 1);
  CHECK(enumerate_chord_diagrams(4).size() == 3);
  CHECK(enumerate_chord_diagrams(6).size() == 15);
  CHECK_THROWS(enumerate_chord_diagrams(3));
  CHECK_THROWS(enumerate_chord_diagrams(0));
}

TEST_CASE("chi tensor on small diagrams") {
  Signature sig = Signature::from_pq(1, 1);
  ChordDiagram c2{{1, 0}};
  CHECK(chi_tensor(c2, {0, 0}, sig) == sig.sign(0));
  CHECK(chi_tensor(c2, {1, 1}, sig) == sig.sign(1));
  CHECK(chi_tensor(c2, {0, 1}, sig) == 0);
  // crossing diagram {(0,2),(1,3)} with letters (A,B,A,B): one crossing
  ChordDiagram cx{{2, 3, 0, 1}};
  CHECK(cx.crossings() == 1);
  CHECK(chi_tensor(cx, {0, 1, 0, 1}, sig) == -sig.sign(0) * sig.sign(1));
  // chord joining unequal letters kills the assignment
  CHECK(chi_tensor(cx, {0, 0, 1, 1}, sig) == 0);
}

TEST_CASE("spectral action slices match the published tables exactly") {
  for (auto [p, q] : {std::pair{2, 0}, std::pair{1, 1}, std::pair{0, 2}}) {
    Signature sig = Signature::from_pq(p, q);
    for (int m : {2, 4, 6}) {
      SpectralExpansion got = spectral_expansion(m, sig);
      const auto& rows = golden::rows_for_degree(m);
      CHECK(got.size() == rows.size());
      for (const auto& row : rows) {
        auto it = got.find(golden::row_op(row));
        REQUIRE(it != got.end());
        CHECK(it->second == golden::row_value(row, sig));
      }
    }
  }
}

TEST_CASE("no twisted monomials, mirror closure") {
  // The expansion lives in word pairs only (twists never appear), and is
  // stable under word reversal: reversing each word of an operator key
  // lands on the same canonical key, so reversal-asymmetric content would
  // show up as a canonicalization mismatch. Check keys are canonical.
  Signature sig = Signature::from_pq(2, 0);
  for (int m : {2, 4, 6}) {
    for (const auto& [op, c] : spectral_expansion(m, sig)) {
      CHECK(canonical_cyclic(op.first) == op.first);
      CHECK(canonical_cyclic(op.second) == op.second);
      TraceOp mirrored = op.is_single()
                             ? TraceOp::single(op.second.reversed())
                             : TraceOp::pair(op.first.reversed(),
                                             op.second.reversed());
      CHECK(mirrored == op);
    }
  }
}

TEST_CASE("nonvanishing certificates") {
  Signature s20 = Signature::from_pq(2, 0);
  // A^2 B^2 appears at m = 4 with value ea eb (here +1)
  auto c = certify_nonvanishing(TraceOp::single(Word::parse("AABB")), s20);
  REQUIRE(c.has_value());
  CHECK(*c == Rational(1));
  // odd letter degrees are rejected
  CHECK_THROWS(certify_nonvanishing(TraceOp::single(Word::parse("AAAAAB")), s20));
  // every operator of the published quartic/sextic tables certifies in (0,2)
  Signature s02 = Signature::from_pq(0, 2);
  for (int m : {2, 4, 6}) {
    for (const auto& row : golden::rows_for_degree(m)) {
      auto v = certify_nonvanishing(golden::row_op(row), s02);
      REQUIRE(v.has_value());
      CHECK(!v->is_zero());
    }
  }
}
