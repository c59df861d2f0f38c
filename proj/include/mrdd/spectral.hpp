#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mrdd/graph.hpp"
#include "mrdd/roman.hpp"

namespace mrdd {

using BigInt = boost::multiprecision::cpp_int;

/// Symmetric integer matrix: pairwise distances off the diagonal
/// (unreachable pairs entered as 0), Roman labels on the diagonal.
/// Its trace equals the weight of the defining RDF.
class MrddMatrix {
public:
  MrddMatrix() = default;

  int size() const noexcept { return n_; }
  std::int64_t at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  std::int64_t trace() const;

  /// Sum of squared off-diagonal entries in the upper triangle.
  long long upper_square_sum() const;

  friend MrddMatrix build_mrdd_matrix(const DistanceMatrix& d,
                                      const RomanDominatingFunction& f);

private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Assembles the matrix from the distances and the labels. Throws
/// std::invalid_argument when f is not a partition of 0..n-1 or some
/// 0-labeled vertex has no 2-labeled vertex at distance 1.
MrddMatrix build_mrdd_matrix(const DistanceMatrix& d, const RomanDominatingFunction& f);

/// Characteristic polynomial det(rho I - A) with exact integer
/// coefficients, ascending: c[0] + c[1] rho + ... + c[n] rho^n, c[n] = 1.
struct CharPoly {
  std::vector<BigInt> c;

  int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
  long double eval(long double x) const;  // Horner
  bool operator==(const CharPoly&) const = default;

  /// Descending-coefficient display string, e.g. "rho^3 - 2*rho^2 + 1".
  std::string pretty() const;
};

/// Faddeev-LeVerrier over exact integers; every internal trace division
/// is checked to be exact. Throws std::length_error when the matrix is
/// larger than max_n (default 64).
CharPoly char_poly(const MrddMatrix& a, int max_n = 64);

/// Product of polynomial powers, exact.
CharPoly poly_mul(const CharPoly& p, const CharPoly& q);
CharPoly poly_pow(const CharPoly& p, int k);

struct JacobiOptions {
  double tol = 1e-10;    // relative off-diagonal target
  int max_sweeps = 100;  // full cyclic sweeps before giving up
};

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  double energy = 0.0;              // sum of absolute eigenvalues
  double residual = 0.0;            // final off-diagonal norm / initial Frobenius norm
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below tol times the initial Frobenius norm of the whole matrix.
/// Throws std::runtime_error when max_sweeps pass without convergence.
Spectrum eigenvalues(const MrddMatrix& a, const JacobiOptions& opt = {});

/// Sum of |lambda| with compensated accumulation.
double graph_energy(const Spectrum& s);

struct RootResidual {
  double root;
  double residual;  // |p(root)| / (1 + sum_k |c_k| |root|^k)
};

struct RootsCheck {
  std::vector<RootResidual> residuals;
  double max_residual = 0.0;
  bool all_pass = false;
};

/// Cross-validates the float spectrum against the exact polynomial:
/// each eigenvalue must be a backward-stable root of p.
RootsCheck poly_roots_check(const CharPoly& p, const Spectrum& s, double tol = 1e-6);

}  // namespace mrdd
