#include "mrdd/verify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mrdd {

namespace {

double kahan_sum(const std::vector<double>& xs, bool squared) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    const double term = squared ? x * x : x;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

// Absolute tolerance for an identity or bound involving `reference`,
// scaled by problem size so per-eigenvalue rounding can accumulate.
double scaled_tol(int n, double tol, double reference) {
  return std::max(1, n) * tol * std::max(1.0, std::abs(reference));
}

CheckRow identity_row(const std::string& label, const char* id, double as_printed,
                      std::optional<double> corrected, double observed, bool against_corrected,
                      int n, double tol) {
  CheckRow row;
  row.graph = label;
  row.formula_id = id;
  row.as_printed = as_printed;
  row.corrected = corrected;
  const double reference = against_corrected ? *corrected : as_printed;
  row.observed = observed;
  row.slack = observed - reference;
  row.holds = std::abs(row.slack) <= scaled_tol(n, tol, reference);
  return row;
}

CheckRow bound_row(const std::string& label, const char* id, std::optional<double> lower,
                   std::optional<double> upper, double observed, int n, double tol) {
  CheckRow row;
  row.graph = label;
  row.formula_id = id;
  row.lower = lower;
  row.upper = upper;
  row.observed = observed;
  const double eps = scaled_tol(n, tol, observed);
  double margin = std::numeric_limits<double>::infinity();
  bool holds = true;
  if (lower) {
    margin = std::min(margin, observed - *lower);
    holds = holds && observed >= *lower - eps;
  }
  if (upper) {
    margin = std::min(margin, *upper - observed);
    holds = holds && observed <= *upper + eps;
  }
  row.slack = margin;
  row.holds = holds;
  return row;
}

}  // namespace

GraphInvariants compute_invariants(const Graph& g, const RomanDominatingFunction& f) {
  GraphInvariants inv;
  inv.n = g.num_vertices();
  inv.m = g.num_edges();
  inv.gamma = min_domination(g).gamma;
  inv.gamma_r = f.weight();
  inv.n1 = static_cast<int>(f.v1.size());
  inv.n2 = static_cast<int>(f.v2.size());
  inv.connected = is_connected(g);

  DistanceMatrix d = all_pairs_distances(g);
  inv.wiener = 0;
  inv.second_moment = 0;
  inv.diam = 0;
  for (int i = 0; i < inv.n; ++i) {
    for (int j = i + 1; j < inv.n; ++j) {
      if (d.unreachable(i, j)) continue;
      const long long dist = d.at(i, j);
      inv.wiener += dist;
      inv.diam = std::max(inv.diam, static_cast<int>(dist));
      if (dist >= 2) inv.second_moment += dist * dist;
    }
  }

  CharPoly p = char_poly(build_mrdd_matrix(d, f));
  BigInt det = p.c.at(0);  // det(-A) = c_0, so |c_0| = |det A|
  inv.det_abs = det < 0 ? BigInt(-det) : det;
  return inv;
}

std::vector<CheckRow> moment_identities(const GraphInvariants& inv, const Spectrum& s,
                                        double tol, const std::string& label) {
  const double trace_sum = kahan_sum(s.eigenvalues, false);
  const double square_sum = kahan_sum(s.eigenvalues, true);
  const double printed = static_cast<double>(inv.gamma_r + 2 * inv.m + 2 * inv.second_moment);
  const double forced =
      static_cast<double>(4LL * inv.n2 + inv.n1 + 2 * inv.m + 2 * inv.second_moment);

  std::vector<CheckRow> rows;
  rows.push_back(identity_row(label, kTraceIdentity, inv.gamma_r, std::nullopt, trace_sum,
                              /*against_corrected=*/false, inv.n, tol));
  rows.push_back(identity_row(label, kMomentPrinted, printed, forced, square_sum,
                              /*against_corrected=*/false, inv.n, tol));
  rows.back().note = "second moment as published; the 2|V2| part of the trace enters squared";
  rows.push_back(identity_row(label, kMomentForced, printed, forced, square_sum,
                              /*against_corrected=*/true, inv.n, tol));
  rows.back().note = "diagonal contributes 4|V2| + |V1|";
  return rows;
}

std::vector<CheckRow> diameter2_identity(const GraphInvariants& inv, const Spectrum& s,
                                         double tol, const std::string& label) {
  if (!inv.connected || inv.n < 1 || inv.diam != 2)
    throw std::domain_error("diameter-2 identity needs a connected graph of diameter 2");
  const double square_sum = kahan_sum(s.eigenvalues, true);
  const double common = 2.0 * (2.0 * inv.n * inv.n - 2.0 * inv.n - 3.0 * inv.m);
  const double printed = inv.gamma_r + common;
  const double forced = 4.0 * inv.n2 + inv.n1 + common;
  std::vector<CheckRow> rows;
  rows.push_back(identity_row(label, kMomentDiam2, printed, forced, square_sum,
                              /*against_corrected=*/false, inv.n, tol));
  rows.back().note = "all off-diagonal distances are 1 or 2";
  return rows;
}

namespace {

// P^e in long double; +infinity on overflow (the caller reports it).
std::optional<double> power_term(const BigInt& p, double exponent, double factor) {
  const long double base = static_cast<long double>(p);
  const long double value = std::pow(base, static_cast<long double>(exponent));
  const long double scaled = static_cast<long double>(factor) * value;
  if (!std::isfinite(static_cast<double>(scaled))) return std::nullopt;
  return static_cast<double>(scaled);
}

}  // namespace

std::vector<CheckRow> mcclelland_bounds(const GraphInvariants& inv, const Spectrum& s,
                                        double tol, const std::string& label) {
  const double energy = s.energy;
  const double pair_count = static_cast<double>(inv.n) * (inv.n - 1);
  const double base_r = static_cast<double>(inv.gamma_r + 2 * inv.m + 2 * inv.second_moment);
  const double base_g = static_cast<double>(inv.gamma + 2 * inv.m + 2 * inv.second_moment);
  const double upper_r = std::sqrt(inv.n * base_r);
  const double upper_g = std::sqrt(inv.n * (base_g + inv.gamma));  // 2m + 2M + 2*gamma

  std::vector<CheckRow> rows;

  const auto lower_with = [&](double exponent, double base) -> std::optional<double> {
    if (inv.n == 0) return 0.0;
    const auto term = power_term(inv.det_abs, exponent, pair_count);
    if (!term) return std::nullopt;
    return std::sqrt(base + *term);
  };

  const double half_n = inv.n / 2.0;
  const double two_over_n = inv.n > 0 ? 2.0 / inv.n : 0.0;

  rows.push_back(bound_row(label, kMcClellandPrinted, lower_with(half_n, base_r), upper_r,
                           energy, inv.n, tol));
  if (!rows.back().lower) {
    rows.back().holds = false;
    rows.back().note = "published lower bound exponent n/2 overflows long double";
  } else {
    rows.back().note = "published lower bound uses |det|^(n/2)";
  }

  rows.push_back(
      bound_row(label, kMcClellandRepaired, lower_with(two_over_n, base_r), upper_r, energy, inv.n, tol));
  rows.back().note = "repaired lower bound uses |det|^(2/n)";

  rows.push_back(
      bound_row(label, kMcClellandDomination, lower_with(half_n, base_g), upper_g, energy, inv.n, tol));
  if (!rows.back().lower) {
    rows.back().holds = false;
    rows.back().note = "domination-number variant, published exponent overflows long double";
  } else {
    rows.back().note = "domination-number variant as published";
  }
  return rows;
}

std::vector<CheckRow> spectral_radius_bounds(const GraphInvariants& inv, const Spectrum& s,
                                             double tol, const std::string& label) {
  if (!inv.connected || inv.n < 1)
    throw std::domain_error("spectral radius bounds need a nonempty connected graph");
  const double rho1 = s.eigenvalues.front();
  std::vector<CheckRow> rows;
  const double wiener_bound = (2.0 * inv.wiener + inv.gamma_r) / inv.n;
  rows.push_back(bound_row(label, kRho1Wiener, wiener_bound, std::nullopt, rho1, inv.n, tol));
  if (inv.diam == 2) {
    const double diam2_bound =
        (2.0 * inv.n * inv.n - 2.0 * inv.m - 2.0 * inv.n + inv.gamma_r) / inv.n;
    rows.push_back(bound_row(label, kRho1Diam2, diam2_bound, std::nullopt, rho1, inv.n, tol));
  }
  return rows;
}

SandwichReport sandwich_check(const Graph& g) { return check_sandwich(g); }

std::vector<CheckRow> run_all_checks(const Graph& g, const std::string& label, double tol) {
  const MinRdfResult solved = min_roman_domination(g);
  const DistanceMatrix d = all_pairs_distances(g);
  const MrddMatrix a = build_mrdd_matrix(d, solved.canonical);
  const Spectrum s = eigenvalues(a, JacobiOptions{.tol = std::min(tol, 1e-10)});
  const GraphInvariants inv = compute_invariants(g, solved.canonical);

  std::vector<CheckRow> rows = moment_identities(inv, s, tol, label);
  if (inv.connected && inv.n >= 1 && inv.diam == 2) {
    auto extra = diameter2_identity(inv, s, tol, label);
    rows.insert(rows.end(), extra.begin(), extra.end());
  }
  auto bounds = mcclelland_bounds(inv, s, tol, label);
  rows.insert(rows.end(), bounds.begin(), bounds.end());
  if (inv.connected && inv.n >= 1) {
    auto radius = spectral_radius_bounds(inv, s, tol, label);
    rows.insert(rows.end(), radius.begin(), radius.end());
  }

  const SandwichReport sandwich = check_sandwich(g);
  CheckRow row;
  row.graph = label;
  row.formula_id = kSandwich;
  row.lower = static_cast<double>(sandwich.gamma);
  row.upper = static_cast<double>(2 * sandwich.gamma);
  row.observed = static_cast<double>(sandwich.gamma_r);
  row.slack = std::min(row.observed - *row.lower, *row.upper - row.observed);
  row.holds = sandwich.holds;
  rows.push_back(row);
  return rows;
}

}  // namespace mrdd
