#include "ncflow/solve.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace ncflow {

namespace {

// Gaussian elimination with partial pivoting; returns false on a
// (numerically) singular matrix.
bool solve_linear(std::vector<double> a, std::vector<double> b, int n,
                  std::vector<double>& out) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[size_t(r) * size_t(n) + size_t(col)]) >
          std::abs(a[size_t(piv) * size_t(n) + size_t(col)]))
        piv = r;
    double p = a[size_t(piv) * size_t(n) + size_t(col)];
    if (std::abs(p) < 1e-14) return false;
    if (piv != col) {
      for (int c = 0; c < n; ++c)
        std::swap(a[size_t(piv) * size_t(n) + size_t(c)],
                  a[size_t(col) * size_t(n) + size_t(c)]);
      std::swap(b[size_t(piv)], b[size_t(col)]);
    }
    for (int r = col + 1; r < n; ++r) {
      double f = a[size_t(r) * size_t(n) + size_t(col)] / p;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c)
        a[size_t(r) * size_t(n) + size_t(c)] -=
            f * a[size_t(col) * size_t(n) + size_t(c)];
      b[size_t(r)] -= f * b[size_t(col)];
    }
  }
  out.assign(size_t(n), 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[size_t(r)];
    for (int c = r + 1; c < n; ++c)
      s -= a[size_t(r) * size_t(n) + size_t(c)] * out[size_t(c)];
    out[size_t(r)] = s / a[size_t(r) * size_t(n) + size_t(r)];
  }
  return true;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double unit_double(std::uint64_t bits) {
  return double(bits >> 11) * (1.0 / 9007199254740992.0);  // [0,1)
}

}  // namespace

std::optional<FixedPoint> newton_solve(const PolySystem& system,
                                       const std::vector<double>& seed,
                                       const NewtonOptions& opts) {
  const int n = system.dim();
  if (int(seed.size()) != n) return std::nullopt;
  std::vector<double> g = seed;
  std::vector<double> r(static_cast<size_t>(n), 0.0);
  std::vector<double> jac(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
  std::vector<double> step;
  std::vector<double> trial(static_cast<size_t>(n), 0.0);
  for (double v : g)
    if (!std::isfinite(v)) return std::nullopt;
  system.residual(g.data(), r.data());
  double rn = norm2(r);
  for (int it = 0; it < opts.max_iterations; ++it) {
    double rmax = 0.0;
    for (double v : r) rmax = std::max(rmax, std::abs(v));
    if (rmax <= opts.tol) {
      // polish with full steps so equal roots coincide to machine
      // precision and deduplication separates points cleanly
      for (int extra = 0; extra < 4; ++extra) {
        system.jacobian(g.data(), jac.data());
        std::vector<double> rhs(static_cast<size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) rhs[size_t(i)] = -r[size_t(i)];
        if (!solve_linear(jac, rhs, n, step)) break;
        for (int i = 0; i < n; ++i) trial[size_t(i)] = g[size_t(i)] + step[size_t(i)];
        std::vector<double> rt(static_cast<size_t>(n), 0.0);
        system.residual(trial.data(), rt.data());
        double tmax = 0.0;
        for (double v : rt) tmax = std::max(tmax, std::abs(v));
        if (!std::isfinite(tmax) || tmax >= rmax) break;
        g = trial;
        r = rt;
        rmax = tmax;
      }
      FixedPoint fp;
      fp.couplings = g;
      fp.eta = system.eta_of(g.data());
      fp.max_residual = rmax;
      return fp;
    }
    system.jacobian(g.data(), jac.data());
    std::vector<double> rhs(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) rhs[size_t(i)] = -r[size_t(i)];
    if (!solve_linear(jac, rhs, n, step)) return std::nullopt;
    // backtracking on ||r||_2
    double lambda = 1.0;
    bool improved = false;
    for (int h = 0; h <= opts.max_halvings; ++h, lambda *= 0.5) {
      for (int i = 0; i < n; ++i)
        trial[size_t(i)] = g[size_t(i)] + lambda * step[size_t(i)];
      std::vector<double> rt(static_cast<size_t>(n), 0.0);
      system.residual(trial.data(), rt.data());
      double tn = norm2(rt);
      if (std::isfinite(tn) && tn < rn) {
        g = trial;
        r = rt;
        rn = tn;
        improved = true;
        break;
      }
    }
    if (!improved) return std::nullopt;
    double gn = 0.0;
    for (double v : g) gn = std::max(gn, std::abs(v));
    if (!std::isfinite(gn) || gn > opts.divergence_norm) return std::nullopt;
  }
  return std::nullopt;
}

std::vector<FixedPoint> multistart_scan(const PolySystem& system,
                                        const ScanOptions& opts) {
  const int n = system.dim();
  const int total = std::max(opts.n_seeds, 1);
  int threads = opts.threads > 0
                    ? opts.threads
                    : int(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::vector<FixedPoint>> found(static_cast<size_t>(threads));

  auto worker = [&](int tid) {
    std::vector<double> seed(static_cast<size_t>(n), 0.0);
    for (int idx = tid; idx <= total; idx += threads) {
      if (idx == 0) {
        std::fill(seed.begin(), seed.end(), 0.0);  // the Gaussian seed
      } else {
        std::uint64_t s = splitmix64(opts.rng_seed * 0x9e3779b97f4a7c15ull +
                                     std::uint64_t(idx));
        for (int i = 0; i < n; ++i) {
          s = splitmix64(s);
          seed[size_t(i)] = opts.box * (2.0 * unit_double(s) - 1.0);
        }
      }
      auto fp = newton_solve(system, seed, opts.newton);
      if (fp.has_value()) {
        fp->seed_index = std::uint64_t(idx);
        found[size_t(tid)].push_back(std::move(*fp));
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  // deterministic merge: by seed index, dedup in max-norm
  std::vector<FixedPoint> all;
  for (auto& f : found)
    for (auto& fp : f) all.push_back(std::move(fp));
  std::sort(all.begin(), all.end(),
            [](const FixedPoint& a, const FixedPoint& b) {
              return a.seed_index < b.seed_index;
            });
  std::vector<FixedPoint> unique;
  for (auto& fp : all) {
    bool dup = false;
    for (const auto& u : unique) {
      double d = 0.0;
      for (int i = 0; i < n; ++i)
        d = std::max(d, std::abs(fp.couplings[size_t(i)] -
                                 u.couplings[size_t(i)]));
      if (d <= opts.dedup_tol) {
        dup = true;
        break;
      }
    }
    if (!dup) unique.push_back(std::move(fp));
  }
  return unique;
}

StabilityReport stability(const PolySystem& system, const FixedPoint& point) {
  const int n = system.dim();
  StabilityReport rep;
  rep.matrix = DMatrix(n);
  system.stability_jacobian(point.couplings.data(), rep.matrix.a.data());
  auto eig = eigenvalues(rep.matrix);
  for (const auto& ev : eig) rep.exponents.push_back(-ev);
  std::sort(rep.exponents.begin(), rep.exponents.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              return a.real() > b.real();
            });
  for (const auto& th : rep.exponents) {
    if (th.real() > 0) ++rep.relevant;
    if (std::abs(th.imag()) > 1e-8) rep.all_real = false;
  }
  return rep;
}

std::vector<int> connected_indices(const PolySystem& system) {
  std::vector<int> out;
  for (int i = 0; i < system.dim(); ++i) {
    char c = system.names()[size_t(i)].empty() ? 'd'
                                               : system.names()[size_t(i)][0];
    if (c == 'a' || c == 'b' || c == 'c') out.push_back(i);
  }
  return out;
}

std::vector<FixedPoint> classify(const PolySystem& system,
                                 const std::vector<FixedPoint>& points,
                                 const ClassifyOptions& opts) {
  std::vector<FixedPoint> out;
  for (const auto& fp : points) {
    double gmax = 0.0;
    for (double v : fp.couplings) gmax = std::max(gmax, std::abs(v));
    if (gmax <= opts.zero_tol) continue;  // Gaussian
    if (gmax > opts.box) continue;
    double cmax = 0.0;
    for (int i : opts.connected)
      cmax = std::max(cmax, std::abs(fp.couplings[size_t(i)]));
    if (cmax <= opts.zero_tol) continue;  // pure disconnected
    StabilityReport rep = stability(system, fp);
    if (!rep.all_real) continue;
    if (opts.require_relevant >= 0 && rep.relevant != opts.require_relevant)
      continue;
    out.push_back(fp);
  }
  return out;
}

BetaSystem impose_eta_a(const BetaSystem& system) {
  BetaSystem out = system;
  if (!out.etas.empty()) {
    out.etas.resize(1);
    out.eta_rhs.resize(1);
    out.etas[0] = "eta";
  }
  return out;
}

}  // namespace ncflow
