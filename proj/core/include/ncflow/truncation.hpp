#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncflow/action.hpp"
#include "ncflow/scalar.hpp"
#include "ncflow/signature.hpp"
#include "ncflow/spectral.hpp"

namespace ncflow {

// One operator of a truncated action: coupling * prefactor * operator,
// single traces encoded with an empty left word (the action assembly
// supplies their 1/N). Quadratic connected operators carry the shared
// wave-function symbol Z instead of a coupling.
struct OperatorSpec {
  std::string coupling;  // "Z" for the quadratic connected rows
  Word left;
  Word right;
  Scalar prefactor;  // numeric x sign factors, signature already applied
  int z_power = 1;   // total degree / 2
  int n_power = 0;   // the table scaling N^{-b}
  bool quadratic_connected = false;

  TraceOp key() const {
    return left.empty() ? TraceOp::single(right) : TraceOp::pair(left, right);
  }
};

struct TruncationSpec {
  std::string name;
  Signature sig;
  std::vector<OperatorSpec> ops;
  int degree_cap = 6;
  int trace_cap = 2;
  int fp_order = 2;

  const OperatorSpec* find(const TraceOp& op) const {
    for (const auto& o : ops)
      if (o.key() == op) return &o;
    return nullptr;
  }

  // The action functional with bar couplings as symbols.
  ActionFunctional action() const;

  // Every basis operator must have nonzero coefficient in the spectral
  // action for this signature (compatibility); throws otherwise. The
  // one-matrix model is exempt (no NCG structure behind it).
  void certify_against_spectral_action() const;
};

// The Hermitian one-matrix truncation of degree six: operators
// X^2 (Z), X^4, X^6, X^2|X^2, X^2|X^4 with their stated prefactors.
TruncationSpec hermitian1_deg6();

// The 2d fuzzy-geometry truncation of degree six for signature (p,q):
// quadratic and quartic rows with the NCG prefactors and signs, sextic
// rows with unit prefactor; operators with a bare traceless-letter
// factor are excluded. 48 / 41 / 34 operators for (2,0) / (1,1) / (0,2).
TruncationSpec fuzzy2d_deg6(int p, int q);

}  // namespace ncflow
