#include "ncflow/eigen.hpp"

#include <cmath>
#include <stdexcept>

namespace ncflow {

namespace {

// Diagonal similarity scaling to reduce the norm imbalance (the classic
// radix-2 balancing pass).
void balance(DMatrix& m) {
  const int n = m.n;
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m.at(j, i));
        r += std::abs(m.at(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / 2.0, f = 1.0, s = c + r;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c > g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        again = true;
        double inv = 1.0 / f;
        for (int j = 0; j < n; ++j) m.at(i, j) *= inv;
        for (int j = 0; j < n; ++j) m.at(j, i) *= f;
      }
    }
  }
}

// Householder reduction to upper Hessenberg form (in place).
void hessenberg(DMatrix& m) {
  const int n = m.n;
  for (int k = 1; k < n - 1; ++k) {
    double scale = 0.0;
    for (int i = k; i < n; ++i) scale += std::abs(m.at(i, k - 1));
    if (scale == 0.0) continue;
    double h = 0.0;
    std::vector<double> v(size_t(n), 0.0);
    for (int i = n - 1; i >= k; --i) {
      v[size_t(i)] = m.at(i, k - 1) / scale;
      h += v[size_t(i)] * v[size_t(i)];
    }
    double g = v[size_t(k)] > 0 ? -std::sqrt(h) : std::sqrt(h);
    h -= v[size_t(k)] * g;
    v[size_t(k)] -= g;
    // apply P = I - v v^T / h from both sides
    for (int j = 0; j < n; ++j) {
      double f = 0.0;
      for (int i = n - 1; i >= k; --i) f += v[size_t(i)] * m.at(i, j);
      f /= h;
      for (int i = k; i < n; ++i) m.at(i, j) -= f * v[size_t(i)];
    }
    for (int i = 0; i < n; ++i) {
      double f = 0.0;
      for (int j = n - 1; j >= k; --j) f += v[size_t(j)] * m.at(i, j);
      f /= h;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * v[size_t(j)];
    }
    m.at(k, k - 1) = scale * g;
    for (int i = k + 1; i < n; ++i) m.at(i, k - 1) = 0.0;
  }
}

}  // namespace

// Double-shift QR on the Hessenberg matrix (eigenvalues only); the
// classic hqr scheme.
std::vector<std::complex<double>> eigenvalues(DMatrix m) {
  const int size = m.n;
  if (size == 0) return {};
  balance(m);
  hessenberg(m);

  std::vector<std::complex<double>> eig;
  eig.reserve(size_t(size));

  double anorm = 0.0;
  for (int i = 0; i < size; ++i)
    for (int j = std::max(i - 1, 0); j < size; ++j)
      anorm += std::abs(m.at(i, j));

  int nn = size - 1;
  double t = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l;
    do {
      for (l = nn; l >= 1; --l) {
        double s = std::abs(m.at(l - 1, l - 1)) + std::abs(m.at(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(m.at(l, l - 1)) + s == s) {
          m.at(l, l - 1) = 0.0;
          break;
        }
      }
      double x = m.at(nn, nn);
      if (l == nn) {  // one real root
        eig.push_back({x + t, 0.0});
        --nn;
      } else {
        double y = m.at(nn - 1, nn - 1);
        double w = m.at(nn, nn - 1) * m.at(nn - 1, nn);
        if (l == nn - 1) {  // two roots
          double p = 0.5 * (y - x);
          double q = p * p + w;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + (p >= 0 ? z : -z);
            eig.push_back({x + z, 0.0});
            eig.push_back({z != 0.0 ? x - w / z : x + z, 0.0});
          } else {
            eig.push_back({x + p, z});
            eig.push_back({x + p, -z});
          }
          nn -= 2;
        } else {  // QR sweep
          if (its == 30)
            throw std::runtime_error("eigenvalues: QR failed to converge");
          double p = 0, q = 0, z = 0, r = 0, s = 0;
          if (its == 10 || its == 20) {  // exceptional shift
            t += x;
            for (int i = 0; i <= nn; ++i) m.at(i, i) -= x;
            s = std::abs(m.at(nn, nn - 1)) + std::abs(m.at(nn - 1, nn - 2));
            x = y = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int mm;
          for (mm = nn - 2; mm >= l; --mm) {
            z = m.at(mm, mm);
            r = x - z;
            s = y - z;
            p = (r * s - w) / m.at(mm + 1, mm) + m.at(mm, mm + 1);
            q = m.at(mm + 1, mm + 1) - z - r - s;
            r = m.at(mm + 2, mm + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (mm == l) break;
            double u = std::abs(m.at(mm, mm - 1)) * (std::abs(q) + std::abs(r));
            double v = std::abs(p) * (std::abs(m.at(mm - 1, mm - 1)) +
                                      std::abs(z) + std::abs(m.at(mm + 1, mm + 1)));
            if (u + v == v) break;
          }
          for (int i = mm + 2; i <= nn; ++i) {
            m.at(i, i - 2) = 0.0;
            if (i != mm + 2) m.at(i, i - 3) = 0.0;
          }
          for (int k = mm; k <= nn - 1; ++k) {
            if (k != mm) {
              p = m.at(k, k - 1);
              q = m.at(k + 1, k - 1);
              r = k != nn - 1 ? m.at(k + 2, k - 1) : 0.0;
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            s = std::sqrt(p * p + q * q + r * r);
            if (p < 0) s = -s;
            if (s == 0.0) continue;
            if (k == mm) {
              if (l != mm) m.at(k, k - 1) = -m.at(k, k - 1);
            } else {
              m.at(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            double yy = q / s, zz = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {  // row modification
              double pp = m.at(k, j) + q * m.at(k + 1, j);
              if (k != nn - 1) {
                pp += r * m.at(k + 2, j);
                m.at(k + 2, j) -= pp * zz;
              }
              m.at(k + 1, j) -= pp * yy;
              m.at(k, j) -= pp * x;
            }
            int mmin = nn < k + 3 ? nn : k + 3;
            for (int i = l; i <= mmin; ++i) {  // column modification
              double pp = x * m.at(i, k) + yy * m.at(i, k + 1);
              if (k != nn - 1) {
                pp += zz * m.at(i, k + 2);
                m.at(i, k + 2) -= pp * r;
              }
              m.at(i, k + 1) -= pp * q;
              m.at(i, k) -= pp;
            }
          }
        }
      }
    } while (l < nn - 1 && nn >= 0);
  }
  return eig;
}

}  // namespace ncflow
