#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ncflow/eigen.hpp"
#include "ncflow/polysystem.hpp"

namespace ncflow {

struct FixedPoint {
  std::vector<double> couplings;
  double eta = 0.0;
  double max_residual = 0.0;
  std::uint64_t seed_index = 0;  // provenance within a scan
};

struct StabilityReport {
  DMatrix matrix;
  std::vector<std::complex<double>> exponents;  // theta = -eigenvalues
  int relevant = 0;                             // # of Re(theta) > 0
  bool all_real = true;
};

struct NewtonOptions {
  double tol = 1e-10;
  int max_iterations = 200;
  int max_halvings = 30;
  double divergence_norm = 1e6;
};

// Damped Newton with the analytic Jacobian and a backtracking line
// search on the residual norm. Returns nullopt on divergence, a
// singular Jacobian or missing convergence within the iteration cap.
std::optional<FixedPoint> newton_solve(const PolySystem& system,
                                       const std::vector<double>& seed,
                                       const NewtonOptions& opts = {});

struct ScanOptions {
  double box = 1.0;           // |g| <= box seeding hypercube
  int n_seeds = 1000;
  std::uint64_t rng_seed = 1;
  double dedup_tol = 1e-6;    // max-norm
  NewtonOptions newton;
  int threads = 0;            // 0 = hardware concurrency
};

// Deterministic multistart: one low-discrepancy-style seed per index
// (split from rng_seed), solved independently, deduplicated by max-norm
// distance. The Gaussian point is always seeded.
std::vector<FixedPoint> multistart_scan(const PolySystem& system,
                                        const ScanOptions& opts);

// Stability matrix (the Jacobian of the eta-eliminated residual map) and
// critical exponents theta = -eigenvalues.
StabilityReport stability(const PolySystem& system, const FixedPoint& point);

struct ClassifyOptions {
  double zero_tol = 1e-8;
  double box = 1.0;
  double imag_tol = 1e-8;
  int require_relevant = -1;  // -1 = no constraint
  // indices of connected couplings (a/b/c types) in the system
  std::vector<int> connected;
};

// The published filtering: drop the Gaussian point, require at least one
// nonvanishing connected coupling, solely real exponents, couplings
// inside the box, and optionally a fixed relevant-direction count.
std::vector<FixedPoint> classify(const PolySystem& system,
                                 const std::vector<FixedPoint>& points,
                                 const ClassifyOptions& opts);

// Connected-coupling indices (a/b/c-type names) of a compiled system.
std::vector<int> connected_indices(const PolySystem& system);

// Keeps only the first anomalous-dimension equation (eta := eta_a);
// needed to compile the non-dualizable (1,1) system.
BetaSystem impose_eta_a(const BetaSystem& system);

}  // namespace ncflow
