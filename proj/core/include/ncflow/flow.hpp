#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncflow/action.hpp"
#include "ncflow/truncation.hpp"

namespace ncflow {

// Large-N beta system: one polynomial per flowing coupling in the
// renormalized couplings, eta and h_1..h_3, plus the anomalous-dimension
// equations eta_i = rhs_i(g, h). No N or Z symbols survive assembly.
struct BetaSystem {
  Signature sig;
  std::vector<std::string> couplings;
  std::vector<Scalar> betas;       // parallel to couplings
  std::vector<std::string> etas;   // one label per letter, e.g. "eta_a"
  std::vector<Scalar> eta_rhs;     // parallel to etas

  int index_of(const std::string& coupling) const;
  const Scalar& beta_of(const std::string& coupling) const;
};

// Twist bookkeeping of the Hessian entering the flow. The flow proper
// exchanges both tensor products wholesale (this is what the worked
// one-matrix expansion uses); the published first-order supertrace
// display instead leaves the cyclic-gradient pairing terms twisted. The
// two agree on every large-N beta function and differ only in which
// finite-N slot the pairing terms land in.
enum class PairingTwist { exchanged, kept };

// Field part of the twisted Hessian of the truncated action: the
// regulated quadratic part (Z + r)1t is held separately as the scalar P,
// and every other field-independent monomial is dropped with it.
SuperMatrix build_F(const TruncationSpec& trunc,
                    PairingTwist mode = PairingTwist::exchanged);

// The supermatrix powers F, F*F, ..., F^{*k_max} under entrywise star
// with matrix composition.
std::vector<SuperMatrix> fp_expand(const SuperMatrix& F, int k_max,
                                   const Signature& sig);

// Supertrace with the twisted-unit insertion of the flow equation,
// projected onto the truncation: plain monomials merge into one trace,
// twisted ones split into a product of traces; constants, operators past
// the degree or trace caps and odd letter degrees drop. Keys are
// canonical operators, values carry bar couplings and powers of N.
std::map<TraceOp, Scalar> supertrace_project(const TensorPoly& expr,
                                             const TruncationSpec& trunc);

// Full flow generator: sum_k (1/2)(-1)^k h_k Z^{-k} STr(F^{*k}) up to
// the truncation's FP order, projected.
std::map<TraceOp, Scalar> flow_coefficients(const TruncationSpec& trunc,
                                            int k_max);

// Large-N beta functions: for every coupling,
//   beta_I = (a_I eta + b_I) g_I + lim_N Z^{-a_I} N^{b_I} f_I / c_I,
// with the bar couplings rescaled and the quadratic rows solved for the
// anomalous dimensions. Scaling inconsistencies (surviving positive
// powers of N) throw.
BetaSystem extract_betas(const TruncationSpec& trunc, int k_max = 0);

// Tadpole approximation: the flow generator is the traced NC-Laplacian
// scaled by the regulator moment symbol rho.
Scalar tadpole_flow(const ActionFunctional& action, const Signature& sig);

// A <-> B duality reduction for the (2,0) and (0,2) systems: identifies
// dual coupling pairs, checks that the identified equations coincide,
// and returns the reduced system (eta_b merged into eta_a).
BetaSystem apply_duality(const BetaSystem& system, const Signature& sig);

// The coupling identification map used by apply_duality: partner name of
// each coupling under the A <-> B exchange (self-dual names map to
// themselves). Representatives are the names kept by the reduction.
std::map<std::string, std::string> duality_partner_map();

}  // namespace ncflow
