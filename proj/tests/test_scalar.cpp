#include "doctest.h"
#include "ncflow/scalar.hpp"

using namespace ncflow;

TEST_CASE("rational arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b) == Rational(5, 6));
  CHECK((a * b) == Rational(1, 6));
  CHECK((a / b) == Rational(3, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
}

TEST_CASE("scalar ring basics") {
  Scalar N = Scalar::N();
  Scalar Z = Scalar::Z();
  Scalar x = N * Z + Scalar(2);
  Scalar y = Scalar(2) + Z * N;
  CHECK(x == y);
  CHECK((x - y).is_zero());
  CHECK((x * Scalar::zero()).is_zero());
  // Laurent powers
  Scalar invN = Scalar::N(-1);
  CHECK((N * invN) == Scalar::one());
}

TEST_CASE("trace symbols canonicalize") {
  Signature sig = Signature::from_pq(2, 0);
  CHECK(Scalar::trace(Word::parse("BAAB"), sig) ==
        Scalar::trace(Word::parse("AABB"), sig));
  CHECK(Scalar::trace(Word::one(), sig) == Scalar::N());
}

TEST_CASE("tracelessness of anti-Hermitian letters") {
  Signature sig = Signature::from_pq(1, 1);  // A Hermitian, B traceless
  CHECK(!Scalar::trace(Word::parse("A"), sig).is_zero());
  CHECK(Scalar::trace(Word::parse("B"), sig).is_zero());
  CHECK(!Scalar::trace(Word::parse("BB"), sig).is_zero());
}

TEST_CASE("substitution and large-N") {
  Scalar s = Scalar::N(1) * Scalar::symbol(sym("gtest")) + Scalar::N(-2);
  Scalar t = s.substituted(sym("gtest"), Scalar::zero());
  CHECK(t == Scalar::N(-2));
  CHECK(t.large_N_limit().is_zero());
  CHECK_THROWS(s.large_N_limit());
  Scalar u = Scalar(3) + Scalar::N(-1);
  CHECK(u.large_N_limit() == Scalar(3));
}

TEST_CASE("formal derivative") {
  SymbolId g = sym("gd");
  Scalar s = Scalar(3) * Scalar::symbol(g, 2) + Scalar::symbol(g) + Scalar(7);
  Scalar d = s.differentiated(g);
  CHECK(d == Scalar(6) * Scalar::symbol(g) + Scalar::one());
}
