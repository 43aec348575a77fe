#include "doctest.h"
#include "ncflow/word.hpp"

using namespace ncflow;

TEST_CASE("word basics") {
  Word w = Word::parse("BAAB");
  CHECK(w.size() == 4);
  CHECK(w.degree_of(0) == 2);
  CHECK(w.degree_of(1) == 2);
  CHECK(w.str() == "BAAB");
  CHECK(Word::one().str() == "1");
  CHECK(w.concat(Word::parse("A")).str() == "BAABA");
  CHECK(w.reversed().str() == "BAAB");
  CHECK(Word::parse("AAB").reversed().str() == "BAA");
}

TEST_CASE("cyclic canonical form") {
  CHECK(canonical_cyclic(Word::parse("BAAB")).str() == "AABB");
  CHECK(canonical_cyclic(Word::one()).str() == "1");
  // minimum over rotations of the word and of its reversal
  CHECK(canonical_cyclic(Word::parse("BABAAA")).str() == "AAABAB");
  // idempotent
  Word c = canonical_cyclic(Word::parse("BBBAAB"));
  CHECK(canonical_cyclic(c) == c);
}

TEST_CASE("arcs on the cycle") {
  Word w = Word::parse("ABAB");
  // positions 0..3; arc(u,v) = letters strictly between u and v forward
  CHECK(w.arc(1, 2).str() == "1");
  CHECK(w.arc(2, 1).str() == "BA");
  CHECK(w.arc(0, 3).str() == "BA");
}

TEST_CASE("cyclic symmetry order") {
  CHECK(Word::parse("AA").cyclic_symmetry() == 2);
  CHECK(Word::parse("AB").cyclic_symmetry() == 1);
  CHECK(Word::parse("ABAB").cyclic_symmetry() == 2);
  CHECK(Word::parse("AAA").cyclic_symmetry() == 3);
  CHECK(Word::parse("AABAAB").cyclic_symmetry() == 2);
}
