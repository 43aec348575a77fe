#pragma once

// The published large-N beta system of the sixth-degree double-trace
// 2-matrix truncation (second FP order), transcribed term by term with
// the signs (ea, eb) concrete. Shared by unit tests and the acceptance
// suite.

#include <map>
#include <string>

#include "ncflow/flow.hpp"

namespace ncflow::reference {

struct BetaReference {
  std::map<std::string, ncflow::Scalar> betas;  // by coupling name
  ncflow::Scalar eta_a;
  ncflow::Scalar eta_b;
};

inline BetaReference fuzzy2d(const ncflow::Signature& sig) {
  using ncflow::Rational;
  using ncflow::Scalar;
  using ncflow::sym;

  auto g = [](const char* n) { return Scalar::symbol(sym(n)); };
  Scalar ea{Rational(sig.sign(0))}, eb{Rational(sig.sign(1))};
  Scalar h1 = Scalar::h(1), h2 = Scalar::h(2);
  Scalar eta = Scalar::eta();
  Scalar a4 = g("a4"), b4 = g("b4"), a6 = g("a6"), b6 = g("b6");
  Scalar c22 = g("c22"), c1111 = g("c1111"), c42 = g("c42"), c24 = g("c24");
  Scalar c3111 = g("c3111"), c1311 = g("c1311"), c2121 = g("c2121"),
         c1212 = g("c1212");
  Scalar d1_1 = g("d1_1"), d01_01 = g("d01_01"), d11_11 = g("d11_11"),
         d2_02 = g("d2_02");
  Scalar d1_3 = g("d1_3"), d1_12 = g("d1_12"), d01_21 = g("d01_21"),
         d01_03 = g("d01_03");
  Scalar d2_2 = g("d2_2"), d02_02 = g("d02_02");
  Scalar d1_5 = g("d1_5"), d1_14 = g("d1_14"), d1_32 = g("d1_32"),
         d1_2111 = g("d1_2111");
  Scalar d01_41 = g("d01_41"), d01_23 = g("d01_23"),
         d01_1211 = g("d01_1211"), d01_05 = g("d01_05");
  Scalar d11_31 = g("d11_31"), d11_13 = g("d11_13");
  Scalar d2_22 = g("d2_22"), d2_1111 = g("d2_1111"), d2_4 = g("d2_4"),
         d2_04 = g("d2_04");
  Scalar d02_22 = g("d02_22"), d02_1111 = g("d02_1111"), d02_04 = g("d02_04"),
         d02_4 = g("d02_4");
  Scalar d3_3 = g("d3_3"), d12_3 = g("d12_3"), d21_21 = g("d21_21"),
         d03_03 = g("d03_03");
  Scalar d21_03 = g("d21_03"), d12_12 = g("d12_12");
  auto n = [](std::int64_t k) { return Scalar(k); };
  auto fr = [](std::int64_t a, std::int64_t b) { return Scalar(Rational(a, b)); };

  BetaReference out;
  out.eta_a = n(2) * h1 * (a4 + c22 + n(2) * d2_02 + n(6) * d2_2);
  out.eta_b = n(2) * h1 * (b4 + c22 + n(6) * d02_02 + n(2) * d2_02);

  auto& B = out.betas;
  B["d1_1"] = -(h1 * (ea * (a4 - c1111) + n(2) * d1_12 + n(6) * d1_3)) +
              d1_1 * (eta + n(1));
  B["d01_01"] = -(h1 * (eb * (b4 - c1111) + n(6) * d01_03 + n(2) * d01_21)) +
                d01_01 * (eta + n(1));

  B["a4"] = h2 * (n(4) * a4 * a4 + n(4) * c22 * c22) + a4 * (n(2) * eta + n(1)) -
            h1 * (n(24) * a6 * ea + n(4) * c42 * eb + n(4) * d02_4 * eb +
                  n(4) * d2_4 * ea);
  B["b4"] = h2 * (n(4) * b4 * b4 + n(4) * c22 * c22) + b4 * (n(2) * eta + n(1)) -
            h1 * (n(24) * b6 * eb + n(4) * c24 * ea + n(4) * d02_04 * eb +
                  n(4) * d2_04 * ea);
  B["c22"] = -(h1 * (n(2) * c1212 * ea + n(2) * c2121 * eb + n(3) * c24 * ea +
                     n(3) * c42 * eb + d02_22 * ea + d2_22 * eb)) +
             h2 * (n(2) * a4 * c22 + n(2) * b4 * c22 +
                   n(2) * ea * eb * c1111 * c1111 +
                   n(2) * ea * eb * c22 * c22) +
             c22 * (n(2) * eta + n(1));
  B["c1111"] = n(8) * ea * eb * c1111 * c22 * h2 + c1111 * (n(2) * eta + n(1)) +
               h1 * (n(4) * ea * c1311 + n(4) * eb * c3111 +
                     n(2) * ea * d02_1111 + n(2) * eb * d2_1111);

  B["a6"] = n(2) * h2 * (n(6) * a4 * a6 + ea * eb * c22 * c42) +
            a6 * (n(3) * eta + n(2));
  B["b6"] = n(2) * h2 * (n(6) * b4 * b6 + ea * eb * c22 * c24) +
            b6 * (n(3) * eta + n(2));
  B["c3111"] = n(4) * h2 *
                   (a4 * c3111 + ea * eb * (c22 * (c1311 + n(2) * c3111) -
                                            c1111 * (n(2) * c2121 + c42))) +
               c3111 * (n(3) * eta + n(2));
  B["c2121"] = n(2) * h2 *
                   (n(2) * a4 * c2121 +
                    ea * eb * (-(n(2) * c1111 * c3111) + n(4) * c2121 * c22 +
                               c22 * c24)) +
               c2121 * (n(3) * eta + n(2));
  B["c24"] = n(2) * h2 *
                 (a4 * c24 + n(3) * b4 * c24 +
                  n(2) * ea * eb *
                      (c22 * (n(3) * b6 + c2121 + c24 + c42) - c1111 * c1311)) +
             c24 * (n(3) * eta + n(2));
  B["c1311"] = n(4) * h2 *
                   (b4 * c1311 + ea * eb * (c22 * (n(2) * c1311 + c3111) -
                                            c1111 * (n(2) * c1212 + c24))) +
               c1311 * (n(3) * eta + n(2));
  B["c1212"] = n(2) * h2 *
                   (n(2) * b4 * c1212 +
                    ea * eb * (c22 * (n(4) * c1212 + c42) -
                               n(2) * c1111 * c1311)) +
               c1212 * (n(3) * eta + n(2));
  B["c42"] = n(2) * h2 *
                 (n(3) * a4 * c42 +
                  n(2) * ea * eb *
                      (n(3) * a6 * c22 - c1111 * c3111 + c1212 * c22 +
                       c22 * c24 + c22 * c42) +
                  b4 * c42) +
             c42 * (n(3) * eta + n(2));

  // Disconnected couplings.
  B["d1_5"] = n(2) * h2 *
                  (a4 * (n(12) * a6 + n(5) * d1_5) + n(18) * a6 * d1_3 * ea +
                   eb * (c42 * (d1_12 - c1111 * ea) +
                         c22 * ea * (c3111 + d1_32))) +
              d1_5 * (n(3) * eta + n(3));
  B["d01_05"] = n(2) * h2 *
                    (b4 * (n(12) * b6 + n(5) * d01_05) +
                     eb * (n(18) * b6 * d01_03 + c22 * ea * (c1311 + d01_23)) +
                     c24 * ea * (d01_21 - c1111 * eb)) +
                d01_05 * (n(3) * eta + n(3));
  B["d11_11"] =
      h2 * (-(a4 * c1111 * ea * eb) - b4 * c1111 * ea * eb +
            n(2) * c1111 * c1111 - n(4) * c1111 * c22 -
            n(8) * c1111 * d11_11 * ea * eb + n(4) * c22 * c22 +
            n(8) * c22 * d11_11 * ea * eb + n(4) * d11_11 * d11_11) +
      h1 * (-(n(2) * c1212 * eb) - c1311 * eb - n(2) * c2121 * ea -
            c3111 * ea - n(2) * d11_13 * eb - n(2) * d11_31 * ea) +
      d11_11 * (n(2) * eta + n(2));
  B["d2_02"] =
      h2 * (a4 * c22 + n(4) * a4 * d2_02 + b4 * c22 + n(4) * b4 * d2_02 +
            c22 * c22 * ea * eb + n(12) * c22 * d02_02 + n(12) * c22 * d2_2 +
            n(24) * d02_02 * d2_02 + n(24) * d2_02 * d2_2) +
      h1 * (fr(-1, 2) * c24 * ea + fr(-1, 2) * c42 * eb +
            fr(-1, 2) * d02_22 * ea - n(2) * d02_4 * eb - n(2) * d2_04 * ea +
            fr(-1, 2) * d2_22 * eb) +
      d2_02 * (n(2) * eta + n(2));
  B["d1_3"] = h2 * (n(2) * a4 * a4 * ea + n(6) * a4 * d1_3 -
                    n(2) * c1111 * c22 * ea + n(2) * c22 * d1_12) +
              h1 * (-(n(6) * a6) - c3111 * ea * eb - d12_3 * ea * eb -
                    d1_32 * ea * eb - n(5) * d1_5 - n(6) * d3_3) +
              d1_3 * (n(2) * eta + n(2));
  B["d1_12"] =
      h2 * (n(2) * a4 * c22 * ea - n(2) * b4 * c1111 * ea + n(2) * b4 * d1_12 -
            n(4) * c1111 * c22 * eb - n(4) * c1111 * d1_12 * ea * eb +
            n(4) * c22 * c22 * eb + n(4) * c22 * d1_12 * ea * eb +
            n(6) * c22 * d1_3) +
      h1 * (-(n(2) * c1212) - n(2) * c1311 - c3111 * ea * eb -
            n(2) * c42 * ea * eb - n(2) * d12_12 - n(3) * d12_3 * ea * eb -
            n(3) * d1_14 - d1_2111 * ea * eb - n(2) * d1_32 * ea * eb) +
      d1_12 * (n(2) * eta + n(2));
  B["d01_21"] =
      h2 * (-(n(2) * a4 * c1111 * eb) + n(2) * a4 * d01_21 +
            n(2) * b4 * c22 * eb - n(4) * c1111 * c22 * ea -
            n(4) * c1111 * d01_21 * ea * eb + n(4) * c22 * c22 * ea +
            n(6) * c22 * d01_03 + n(4) * c22 * d01_21 * ea * eb) +
      h1 * (-(c1311 * ea * eb) - n(2) * c2121 - n(2) * c24 * ea * eb -
            n(2) * c3111 - d01_1211 * ea * eb - n(2) * d01_23 * ea * eb -
            n(3) * d01_41 - n(3) * d21_03 * ea * eb - n(2) * d21_21) +
      d01_21 * (n(2) * eta + n(2));
  B["d01_03"] = h2 * (n(2) * b4 * b4 * eb + n(6) * b4 * d01_03 -
                      n(2) * c1111 * c22 * eb + n(2) * c22 * d01_21) +
                h1 * (-(n(6) * b6) - c1311 * ea * eb - n(5) * d01_05 -
                      d01_23 * ea * eb - n(6) * d03_03 - d21_03 * ea * eb) +
                d01_03 * (n(2) * eta + n(2));
  B["d1_14"] =
      n(2) * h2 *
          (a4 * c24 + b4 * (n(2) * c1212 + n(2) * c1311 + n(3) * d1_14) -
           n(6) * b6 * c1111 * ea * eb + n(6) * b6 * d1_12 * eb -
           n(2) * c1111 * c24 * ea * eb - n(2) * c1111 * d1_14 * ea * eb +
           n(4) * c1212 * c22 * ea * eb + n(4) * c1212 * d1_12 * eb +
           n(4) * c1311 * c22 * ea * eb + n(4) * c1311 * d1_12 * eb +
           n(4) * c22 * c24 * ea * eb + c22 * c3111 * ea * eb +
           n(2) * c22 * c42 * ea * eb + n(2) * c22 * d1_14 * ea * eb +
           c22 * d1_2111 * ea * eb + n(2) * c22 * d1_32 * ea * eb +
           n(2) * c24 * d1_12 * eb + n(3) * c24 * d1_3 * ea) +
      d1_14 * (n(3) * eta + n(3));
  B["d1_32"] =
      n(2) * h2 *
          (n(5) * a4 * c42 + n(2) * a4 * d1_32 + n(6) * a6 * c22 * ea * eb +
           b4 * (c3111 + d1_32) - n(2) * c1111 * c1212 * ea * eb -
           n(4) * c1111 * c2121 * ea * eb - n(2) * c1111 * c24 * ea * eb -
           n(2) * c1111 * d1_2111 * ea * eb + n(2) * c1212 * d1_12 * eb +
           n(2) * c1311 * c22 * ea * eb + n(2) * c22 * c3111 * ea * eb +
           n(4) * c22 * c42 * ea * eb + n(2) * c22 * d1_14 * ea * eb +
           n(2) * c22 * d1_32 * ea * eb + n(5) * c22 * d1_5 * ea * eb +
           n(2) * c24 * d1_12 * eb + n(2) * c3111 * d1_12 * eb +
           n(2) * c42 * d1_12 * eb + n(9) * c42 * d1_3 * ea) +
      d1_32 * (n(3) * eta + n(3));
  B["d1_2111"] =
      n(2) * h2 *
          (a4 * (n(2) * c2121 + n(3) * c3111 + d1_2111) -
           n(2) * c1111 * c1311 * ea * eb - c1111 * c24 * ea * eb -
           n(2) * c1111 * c3111 * ea * eb - n(2) * c1111 * c42 * ea * eb -
           n(2) * c1111 * d1_2111 * ea * eb - n(2) * c1111 * d1_32 * ea * eb +
           n(2) * c1212 * c22 * ea * eb + n(2) * c1311 * d1_12 * eb +
           c2121 * (n(8) * c22 * ea * eb + n(4) * d1_12 * eb +
                    n(6) * d1_3 * ea) +
           n(4) * c22 * c3111 * ea * eb + c22 * d1_14 * ea * eb +
           n(4) * c22 * d1_2111 * ea * eb + c24 * d1_12 * eb +
           n(2) * c3111 * d1_12 * eb + n(6) * c3111 * d1_3 * ea) +
      d1_2111 * (n(3) * eta + n(3));
  B["d01_41"] =
      n(2) * h2 *
          (a4 * (n(2) * c2121 + n(2) * c3111 + n(3) * d01_41) -
           n(6) * a6 * c1111 * ea * eb + n(6) * a6 * d01_21 * ea + b4 * c42 -
           n(2) * c1111 * c42 * ea * eb - n(2) * c1111 * d01_41 * ea * eb +
           c1311 * c22 * ea * eb + n(4) * c2121 * c22 * ea * eb +
           n(4) * c2121 * d01_21 * ea + n(2) * c22 * c24 * ea * eb +
           n(4) * c22 * c3111 * ea * eb + n(4) * c22 * c42 * ea * eb +
           c22 * d01_1211 * ea * eb + n(2) * c22 * d01_23 * ea * eb +
           n(2) * c22 * d01_41 * ea * eb + n(4) * c3111 * d01_21 * ea +
           n(3) * c42 * d01_03 * eb + n(2) * c42 * d01_21 * ea) +
      d01_41 * (n(3) * eta + n(3));
  B["d2_2"] = h2 * (fr(1, 2) * a4 * a4 + n(8) * a4 * d2_2 +
                    fr(1, 6) * c1111 * c1111 + fr(1, 3) * c22 * c22 +
                    fr(8, 3) * c22 * d2_02 + fr(8, 3) * d2_02 * d2_02 +
                    n(24) * d2_2 * d2_2) +
              h1 * (-(a6 * ea) + fr(-1, 3) * c2121 * eb +
                    fr(-1, 3) * d2_22 * eb + fr(-4, 3) * d2_4 * ea) +
              d2_2 * (n(2) * eta + n(2));
  B["d02_02"] = h2 * (fr(1, 2) * b4 * b4 + n(8) * b4 * d02_02 +
                      fr(1, 6) * c1111 * c1111 + fr(1, 3) * c22 * c22 +
                      fr(8, 3) * c22 * d2_02 + n(24) * d02_02 * d02_02 +
                      fr(8, 3) * d2_02 * d2_02) +
                h1 * (-(b6 * eb) + fr(-1, 3) * c1212 * ea +
                      fr(-4, 3) * d02_04 * eb + fr(-1, 3) * d02_22 * ea) +
                d02_02 * (n(2) * eta + n(2));
  B["d01_23"] =
      n(2) * h2 *
          (a4 * (c1311 + d01_23) + n(5) * b4 * c24 + n(2) * b4 * d01_23 +
           n(6) * b6 * c22 * ea * eb - n(4) * c1111 * c1212 * ea * eb -
           n(2) * c1111 * c2121 * ea * eb - n(2) * c1111 * c42 * ea * eb -
           n(2) * c1111 * d01_1211 * ea * eb + n(2) * c1311 * c22 * ea * eb +
           n(2) * c1311 * d01_21 * ea + n(2) * c2121 * d01_21 * ea +
           n(4) * c22 * c24 * ea * eb + n(2) * c22 * c3111 * ea * eb +
           n(5) * c22 * d01_05 * ea * eb + n(2) * c22 * d01_23 * ea * eb +
           n(2) * c22 * d01_41 * ea * eb + n(9) * c24 * d01_03 * eb +
           n(2) * c24 * d01_21 * ea + n(2) * c42 * d01_21 * ea) +
      d01_23 * (n(3) * eta + n(3));
  B["d01_1211"] =
      n(2) * h2 *
          (b4 * (n(2) * c1212 + n(3) * c1311 + d01_1211) -
           n(2) * c1111 * c1311 * ea * eb - n(2) * c1111 * c24 * ea * eb -
           n(2) * c1111 * c3111 * ea * eb - c1111 * c42 * ea * eb -
           n(2) * c1111 * d01_1211 * ea * eb -
           n(2) * c1111 * d01_23 * ea * eb +
           c1212 * (n(8) * c22 * ea * eb + n(6) * d01_03 * eb +
                    n(4) * d01_21 * ea) +
           n(4) * c1311 * c22 * ea * eb + n(6) * c1311 * d01_03 * eb +
           n(2) * c1311 * d01_21 * ea + n(2) * c2121 * c22 * ea * eb +
           n(4) * c22 * d01_1211 * ea * eb + c22 * d01_41 * ea * eb +
           n(2) * c3111 * d01_21 * ea + c42 * d01_21 * ea) +
      d01_1211 * (n(3) * eta + n(3));
  B["d11_31"] =
      n(2) * h2 *
          (n(2) * a4 * (n(3) * c2121 + n(2) * c3111 + d11_31) -
           n(6) * a6 * c1111 * ea * eb + b4 * c3111 -
           c1111 * c1311 * ea * eb - n(4) * c1111 * c2121 * ea * eb -
           n(2) * c1111 * c24 * ea * eb - n(6) * c1111 * c3111 * ea * eb -
           n(4) * c1111 * c42 * ea * eb - n(4) * c1111 * d11_31 * ea * eb +
           n(4) * c1212 * c22 * ea * eb + n(2) * c1311 * c22 * ea * eb +
           n(8) * c2121 * c22 * ea * eb + n(8) * c2121 * d11_11 +
           n(8) * c22 * c3111 * ea * eb + n(8) * c22 * c42 * ea * eb +
           n(2) * c22 * d11_13 * ea * eb + n(4) * c22 * d11_31 * ea * eb +
           n(8) * c3111 * d11_11 + n(4) * c42 * d11_11 +
           n(2) * d11_11 * d11_31) +
      d11_31 * (n(3) * eta + n(3));
  B["d11_13"] =
      n(2) * h2 *
          (a4 * c1311 + n(2) * b4 * (n(3) * c1212 + n(2) * c1311 + d11_13) -
           n(6) * b6 * c1111 * ea * eb - n(4) * c1111 * c1212 * ea * eb -
           n(6) * c1111 * c1311 * ea * eb - n(4) * c1111 * c24 * ea * eb -
           c1111 * c3111 * ea * eb - n(2) * c1111 * c42 * ea * eb -
           n(4) * c1111 * d11_13 * ea * eb + n(8) * c1212 * c22 * ea * eb +
           n(8) * c1212 * d11_11 + n(8) * c1311 * c22 * ea * eb +
           n(8) * c1311 * d11_11 + n(4) * c2121 * c22 * ea * eb +
           n(8) * c22 * c24 * ea * eb + n(2) * c22 * c3111 * ea * eb +
           n(4) * c22 * d11_13 * ea * eb + n(2) * c22 * d11_31 * ea * eb +
           n(4) * c24 * d11_11 + n(2) * d11_11 * d11_13) +
      d11_13 * (n(3) * eta + n(3));
  B["d2_22"] =
      n(2) * h2 *
          (a4 * (n(2) * c2121 + n(6) * c42 + n(3) * d2_22) +
           n(2) * (n(3) * a6 * c22 * ea * eb - c1111 * c1311 * ea * eb -
                   c1111 * c3111 * ea * eb - n(2) * c1111 * d2_1111 * ea * eb +
                   c1212 * c22 * ea * eb + n(4) * c1212 * d2_02 * ea * eb +
                   n(2) * c2121 * c22 * ea * eb + n(12) * c2121 * d2_2 +
                   n(2) * c22 * c24 * ea * eb + n(2) * c22 * c42 * ea * eb +
                   c22 * d02_22 * ea * eb + n(2) * c22 * d2_04 * ea * eb +
                   c22 * d2_22 * ea * eb + n(2) * c22 * d2_4 * ea * eb +
                   n(6) * c24 * d2_02 * ea * eb + n(18) * c42 * d2_2 +
                   n(2) * d02_22 * d2_02 * ea * eb + n(6) * d2_2 * d2_22) +
           b4 * (n(2) * c2121 + d2_22)) +
      d2_22 * (n(3) * eta + n(3));
  B["d2_1111"] =
      n(2) * h2 *
          (n(3) * a4 * c3111 + n(2) * a4 * d2_1111 -
           n(2) * c1111 * c1212 * ea * eb - n(2) * c1111 * c42 * ea * eb -
           n(2) * c1111 * d2_22 * ea * eb + n(2) * c1311 * c22 * ea * eb +
           n(8) * c1311 * d2_02 * ea * eb + n(4) * c22 * c3111 * ea * eb +
           n(2) * c22 * d02_1111 * ea * eb + n(4) * c22 * d2_1111 * ea * eb +
           n(24) * c3111 * d2_2 + n(4) * d02_1111 * d2_02 * ea * eb +
           n(12) * d2_1111 * d2_2) +
      d2_1111 * (n(3) * eta + n(3));
  B["d2_4"] = n(2) * h2 *
                  (n(6) * a4 * (n(3) * a6 + d2_4) + n(72) * a6 * d2_2 -
                   c1111 * c3111 * ea * eb + n(2) * c2121 * c22 * ea * eb +
                   c22 * c42 * ea * eb + n(2) * c22 * d02_4 * ea * eb +
                   c22 * d2_22 * ea * eb + n(4) * c42 * d2_02 * ea * eb +
                   n(4) * d02_4 * d2_02 * ea * eb + n(12) * d2_2 * d2_4) +
              d2_4 * (n(3) * eta + n(3));
  B["d2_04"] =
      n(2) * h2 *
          (a4 * (c24 + n(2) * d2_04) + b4 * (c24 + n(4) * d2_04) +
           n(6) * b6 * c22 * ea * eb + n(24) * b6 * d2_02 * ea * eb +
           n(2) * c22 * c24 * ea * eb + c22 * c42 * ea * eb +
           n(2) * c22 * d02_04 * ea * eb + c22 * d2_22 * ea * eb +
           n(12) * c24 * d2_2 + n(4) * d02_04 * d2_02 * ea * eb +
           n(12) * d2_04 * d2_2) +
      d2_04 * (n(3) * eta + n(3));
  B["d02_22"] =
      n(2) * h2 *
          (a4 * (n(2) * c1212 + d02_22) +
           b4 * (n(2) * c1212 + n(6) * c24 + n(3) * d02_22) +
           n(2) * (n(3) * b6 * c22 * ea * eb - c1111 * c1311 * ea * eb -
                   c1111 * c3111 * ea * eb -
                   n(2) * c1111 * d02_1111 * ea * eb +
                   n(2) * c1212 * c22 * ea * eb + n(12) * c1212 * d02_02 +
                   c2121 * c22 * ea * eb + n(4) * c2121 * d2_02 * ea * eb +
                   n(2) * c22 * c24 * ea * eb + n(2) * c22 * c42 * ea * eb +
                   n(2) * c22 * d02_04 * ea * eb + c22 * d02_22 * ea * eb +
                   n(2) * c22 * d02_4 * ea * eb + c22 * d2_22 * ea * eb +
                   n(18) * c24 * d02_02 + n(6) * c42 * d2_02 * ea * eb +
                   n(6) * d02_02 * d02_22 + n(2) * d2_02 * d2_22 * ea * eb)) +
      d02_22 * (n(3) * eta + n(3));
  B["d02_1111"] =
      n(2) * h2 *
          (n(3) * b4 * c1311 + n(2) * b4 * d02_1111 -
           n(2) * c1111 * c2121 * ea * eb - n(2) * c1111 * c24 * ea * eb -
           n(2) * c1111 * d02_22 * ea * eb + n(4) * c1311 * c22 * ea * eb +
           n(24) * c1311 * d02_02 + n(2) * c22 * c3111 * ea * eb +
           n(4) * c22 * d02_1111 * ea * eb + n(2) * c22 * d2_1111 * ea * eb +
           n(8) * c3111 * d2_02 * ea * eb + n(12) * d02_02 * d02_1111 +
           n(4) * d2_02 * d2_1111 * ea * eb) +
      d02_1111 * (n(3) * eta + n(3));
  B["d02_04"] =
      n(2) * h2 *
          (n(6) * b4 * (n(3) * b6 + d02_04) + n(72) * b6 * d02_02 -
           c1111 * c1311 * ea * eb + n(2) * c1212 * c22 * ea * eb +
           c22 * c24 * ea * eb + c22 * d02_22 * ea * eb +
           n(2) * c22 * d2_04 * ea * eb + n(4) * c24 * d2_02 * ea * eb +
           n(12) * d02_02 * d02_04 + n(4) * d2_02 * d2_04 * ea * eb) +
      d02_04 * (n(3) * eta + n(3));
  B["d02_4"] =
      n(2) * h2 *
          (a4 * (c42 + n(4) * d02_4) + n(6) * a6 * c22 * ea * eb +
           n(24) * a6 * d2_02 * ea * eb + b4 * (c42 + n(2) * d02_4) +
           c22 * c24 * ea * eb + n(2) * c22 * c42 * ea * eb +
           c22 * d02_22 * ea * eb + n(2) * c22 * d2_4 * ea * eb +
           n(12) * c42 * d02_02 + n(12) * d02_02 * d02_4 +
           n(4) * d2_02 * d2_4 * ea * eb) +
      d02_4 * (n(3) * eta + n(3));
  B["d3_3"] = n(2) * h2 *
                  (a4 * (n(9) * a6 + n(6) * d3_3) +
                   ea * eb * (c22 * (c3111 + d12_3) - c1111 * c2121)) +
              d3_3 * (n(3) * eta + n(3));
  B["d12_3"] =
      n(2) * h2 *
          (a4 * (c3111 + n(3) * (c42 + d12_3)) +
           ea * eb *
               (n(6) * a6 * c22 - c1111 * c24 - n(2) * c1111 * c42 -
                n(2) * c1111 * d12_3 + n(2) * c1212 * c22 +
                n(2) * c1311 * c22 + n(2) * c22 * c3111 + n(4) * c22 * c42 +
                n(2) * c22 * d12_12 + n(2) * c22 * d12_3 +
                n(6) * c22 * d3_3) +
           b4 * (c3111 + d12_3)) +
      d12_3 * (n(3) * eta + n(3));
  B["d21_21"] =
      n(2) * h2 *
          (a4 * (n(4) * c2121 + n(3) * c3111 + n(2) * d21_21) +
           ea * eb *
               (-(n(3) * a6 * c1111) -
                c1111 * (n(2) * c1212 + c1311 +
                         n(2) * (n(2) * c2121 + c3111 + c42 +
                                 n(2) * d21_21)) +
                c22 * (c1311 + n(4) * c2121 + n(2) * c24 + n(4) * c3111 +
                       n(4) * c42 + n(3) * d21_03 + n(4) * d21_21)) +
           b4 * c2121) +
      d21_21 * (n(3) * eta + n(3));
  B["d03_03"] = n(2) * h2 *
                    (b4 * (n(9) * b6 + n(6) * d03_03) +
                     ea * eb * (c22 * (c1311 + d21_03) - c1111 * c1212)) +
                d03_03 * (n(3) * eta + n(3));
  B["d21_03"] =
      n(2) * h2 *
          (a4 * (c1311 + d21_03) + b4 * (c1311 + n(3) * (c24 + d21_03)) +
           ea * eb *
               (n(6) * b6 * c22 - n(2) * c1111 * c24 - c1111 * c42 -
                n(2) * c1111 * d21_03 + n(2) * c1311 * c22 +
                n(2) * c2121 * c22 + n(4) * c22 * c24 + n(2) * c22 * c3111 +
                n(6) * c22 * d03_03 + n(2) * c22 * d21_03 +
                n(2) * c22 * d21_21)) +
      d21_03 * (n(3) * eta + n(3));
  B["d12_12"] =
      n(2) * h2 *
          (a4 * c1212 + b4 * (n(4) * c1212 + n(3) * c1311 + n(2) * d12_12) +
           ea * eb *
               (-(n(3) * b6 * c1111) -
                c1111 * (n(4) * c1212 + n(2) * c1311 + n(2) * c2121 +
                         n(2) * c24 + c3111 + n(4) * d12_12) +
                c22 * (n(4) * c1212 + n(4) * c1311 + n(4) * c24 + c3111 +
                       n(2) * c42 + n(4) * d12_12 + n(3) * d12_3))) +
      d12_12 * (n(3) * eta + n(3));

  return out;
}

// The published degree-six Hermitian one-matrix system (third FP order).
inline BetaReference hermitian1() {
  using ncflow::Rational;
  using ncflow::Scalar;
  using ncflow::sym;
  auto g = [](const char* nm) { return Scalar::symbol(sym(nm)); };
  Scalar h1 = Scalar::h(1), h2 = Scalar::h(2), h3 = Scalar::h(3);
  Scalar eta = Scalar::eta();
  Scalar g4 = g("g4"), g6 = g("g6"), g2_2 = g("g2_2"), g2_4 = g("g2_4");
  auto n = [](std::int64_t k) { return Scalar(k); };

  BetaReference out;
  out.eta_a = h1 * (Scalar(Rational(1, 2)) * g2_2 + n(2) * g4);
  out.eta_b = out.eta_a;
  auto& B = out.betas;
  B["g4"] = (n(1) + n(2) * eta) * g4 + n(4) * h2 * g4 * g4 -
            h1 * (n(4) * g6 + Scalar(Rational(1, 2)) * g2_4);
  B["g2_2"] = (n(2) + n(2) * eta) * g2_2 - n(4) * (h1 * (g2_4 + g6)) +
              h2 * (g2_2 * g2_2 + n(8) * g2_2 * g4 + n(12) * g4 * g4);
  B["g6"] = (n(2) + n(3) * eta) * g6 + n(12) * g4 * g6 * h2 -
            n(6) * (g4 * g4 * g4) * h3;
  B["g2_4"] = (n(3) + n(3) * eta) * g2_4 +
              h2 * (g2_2 * g2_4 + n(8) * g2_2 * g6 + n(12) * g2_4 * g4 +
                    n(48) * g4 * g6) -
              h3 * (n(12) * g2_2 * g4 * g4 + n(48) * (g4 * g4 * g4));
  return out;
}

// The reference system matching a truncation.
inline BetaReference for_truncation(const TruncationSpec& trunc) {
  if (trunc.sig.n == 1) return hermitian1();
  return fuzzy2d(trunc.sig);
}

}  // namespace ncflow::reference
