#include "mrdd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mrdd {

std::int64_t MrddMatrix::trace() const {
  std::int64_t t = 0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

long long MrddMatrix::upper_square_sum() const {
  long long s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) s += static_cast<long long>(at(i, j)) * at(i, j);
  return s;
}

MrddMatrix build_mrdd_matrix(const DistanceMatrix& d, const RomanDominatingFunction& f) {
  const int n = d.size();
  std::vector<int> label(n, -1);
  auto assign = [&](const std::vector<int>& part, int value) {
    for (int v : part) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("label index out of range: " + std::to_string(v));
      if (label[v] != -1)
        throw std::invalid_argument("vertex labeled twice: " + std::to_string(v));
      label[v] = value;
    }
  };
  assign(f.v0, 0);
  assign(f.v1, 1);
  assign(f.v2, 2);
  for (int v = 0; v < n; ++v)
    if (label[v] == -1) throw std::invalid_argument("vertex unlabeled: " + std::to_string(v));
  for (int v : f.v0) {
    bool guarded = false;
    for (int u : f.v2)
      if (d.at(v, u) == 1) {
        guarded = true;
        break;
      }
    if (!guarded)
      throw std::invalid_argument("0-labeled vertex " + std::to_string(v) +
                                  " has no 2-labeled neighbor");
  }

  MrddMatrix a;
  a.n_ = n;
  a.a_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j)
        a.a_[static_cast<size_t>(i) * n + j] = label[i];
      else if (!d.unreachable(i, j))
        a.a_[static_cast<size_t>(i) * n + j] = d.at(i, j);
      // unreachable pairs stay 0, keeping the matrix block diagonal
    }
  }
  return a;
}

long double CharPoly::eval(long double x) const {
  long double acc = 0.0L;
  for (size_t k = c.size(); k-- > 0;) acc = acc * x + static_cast<long double>(c[k]);
  return acc;
}

std::string CharPoly::pretty() const {
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& ck = c[static_cast<size_t>(k)];
    if (ck == 0) continue;
    BigInt mag = ck < 0 ? BigInt(-ck) : ck;
    if (first) {
      if (ck < 0) out << "-";
      first = false;
    } else {
      out << (ck < 0 ? " - " : " + ");
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) out << mag.str();
    if (k > 0) {
      if (!unit) out << "*";
      out << "rho";
      if (k > 1) out << "^" << k;
    }
  }
  if (first) out << "0";
  return out.str();
}

CharPoly char_poly(const MrddMatrix& a, int max_n) {
  const int n = a.size();
  if (n > max_n)
    throw std::length_error("characteristic polynomial limited to " + std::to_string(max_n) +
                            " vertices, got " + std::to_string(n));
  CharPoly p;
  p.c.assign(static_cast<size_t>(n) + 1, BigInt(0));
  p.c[static_cast<size_t>(n)] = 1;
  if (n == 0) return p;

  // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k with
  // M_{k+1} = A (M_k + c_{n-k} I). All divisions are exact over Z.
  std::vector<BigInt> base(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) base[static_cast<size_t>(i) * n + j] = a.at(i, j);

  std::vector<BigInt> m = base;
  std::vector<BigInt> next(static_cast<size_t>(n) * n);
  for (int k = 1; k <= n; ++k) {
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += m[static_cast<size_t>(i) * n + i];
    BigInt q = tr / k;
    if (q * k != tr) throw std::logic_error("inexact trace division in char_poly");
    p.c[static_cast<size_t>(n - k)] = -q;
    if (k == n) break;
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] -= q;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt acc = 0;
        for (int l = 0; l < n; ++l)
          acc += base[static_cast<size_t>(i) * n + l] * m[static_cast<size_t>(l) * n + j];
        next[static_cast<size_t>(i) * n + j] = std::move(acc);
      }
    }
    m.swap(next);
  }
  return p;
}

CharPoly poly_mul(const CharPoly& p, const CharPoly& q) {
  if (p.c.empty() || q.c.empty()) throw std::invalid_argument("empty polynomial");
  CharPoly r;
  r.c.assign(p.c.size() + q.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    for (size_t j = 0; j < q.c.size(); ++j) r.c[i + j] += p.c[i] * q.c[j];
  }
  return r;
}

CharPoly poly_pow(const CharPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  CharPoly r;
  r.c = {BigInt(1)};
  for (int i = 0; i < k; ++i) r = poly_mul(r, p);
  return r;
}

namespace {

double offdiag_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(i) * n + j];
  return std::sqrt(2.0 * s);
}

}  // namespace

Spectrum eigenvalues(const MrddMatrix& mat, const JacobiOptions& opt) {
  const int n = mat.size();
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = static_cast<double>(mat.at(i, j));
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

  double frob = 0.0;
  for (double x : a) frob += x * x;
  frob = std::sqrt(frob);

  Spectrum out;
  if (n > 0 && frob > 0.0) {
    const double target = opt.tol * frob;
    int sweeps = 0;
    while (offdiag_norm(a, n) > target) {
      if (sweeps++ >= opt.max_sweeps)
        throw std::runtime_error("Jacobi iteration did not converge in " +
                                 std::to_string(opt.max_sweeps) + " sweeps (residual " +
                                 std::to_string(offdiag_norm(a, n) / frob) + ")");
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double apq = at(p, q);
          if (apq == 0.0) continue;
          // Stable rotation: tan(2 phi) from the diagonal gap, then the
          // smaller-angle root.
          const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
          const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;
          const double tau = s / (1.0 + c);

          const double app = at(p, p), aqq = at(q, q);
          at(p, p) = app - t * apq;
          at(q, q) = aqq + t * apq;
          at(p, q) = 0.0;
          at(q, p) = 0.0;
          for (int i = 0; i < n; ++i) {
            if (i == p || i == q) continue;
            const double aip = at(i, p), aiq = at(i, q);
            at(i, p) = aip - s * (aiq + tau * aip);
            at(p, i) = at(i, p);
            at(i, q) = aiq + s * (aip - tau * aiq);
            at(q, i) = at(i, q);
          }
        }
      }
    }
    out.residual = offdiag_norm(a, n) / frob;
  }

  out.eigenvalues.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.eigenvalues[static_cast<size_t>(i)] = at(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<double>());
  out.energy = graph_energy(out);
  return out;
}

double graph_energy(const Spectrum& s) {
  // Kahan compensated sum of absolute values.
  double sum = 0.0, comp = 0.0;
  for (double lambda : s.eigenvalues) {
    const double y = std::abs(lambda) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

RootsCheck poly_roots_check(const CharPoly& p, const Spectrum& s, double tol) {
  RootsCheck check;
  check.all_pass = true;
  for (double root : s.eigenvalues) {
    const long double x = static_cast<long double>(root);
    const long double value = p.eval(x);
    // Backward-error scaling: weight each coefficient by the power of
    // |root| it multiplies, so the residual measures the relative
    // perturbation of p that would make the root exact.
    long double scale = 1.0L;
    long double xp = 1.0L;
    for (const BigInt& ck : p.c) {
      scale += std::abs(static_cast<long double>(ck)) * xp;
      xp *= std::abs(x);
    }
    const double residual = static_cast<double>(std::abs(value) / scale);
    check.residuals.push_back({root, residual});
    check.max_residual = std::max(check.max_residual, residual);
    if (!(residual < tol)) check.all_pass = false;
  }
  return check;
}

}  // namespace mrdd
