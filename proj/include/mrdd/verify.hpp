#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrdd/graph.hpp"
#include "mrdd/roman.hpp"
#include "mrdd/spectral.hpp"

namespace mrdd {

/// Everything the identity and bound checks consume.
struct GraphInvariants {
  int n = 0;
  long long m = 0;       // edge count
  int gamma = 0;         // domination number
  int gamma_r = 0;       // Roman domination number
  int n1 = 0;            // |V1| of the canonical minimum RDF
  int n2 = 0;            // |V2|
  bool connected = false;
  long long wiener = 0;         // valid only when connected
  int diam = 0;                 // valid only when connected and n >= 1
  long long second_moment = 0;  // sum of d(i,j)^2 over unordered pairs at distance >= 2
  BigInt det_abs = 0;           // |det A|, from the exact polynomial
};

GraphInvariants compute_invariants(const Graph& g, const RomanDominatingFunction& f);

// Formula identifiers used in reports.
inline constexpr const char* kTraceIdentity = "trace";
inline constexpr const char* kMomentPrinted = "moment_printed";
inline constexpr const char* kMomentForced = "moment_forced";
inline constexpr const char* kMomentDiam2 = "moment_diam2";
inline constexpr const char* kMcClellandPrinted = "mcclelland_printed";
inline constexpr const char* kMcClellandRepaired = "mcclelland_repaired";
inline constexpr const char* kMcClellandDomination = "mcclelland_domination";
inline constexpr const char* kRho1Wiener = "rho1_wiener";
inline constexpr const char* kRho1Diam2 = "rho1_diam2";
inline constexpr const char* kSandwich = "sandwich";

/// One checked formula instance. Identity rows fill as_printed (and
/// corrected when a repaired variant exists); bound rows fill lower/upper.
/// slack is observed minus the row's primary claim (identities) or the
/// tightest margin by which the bound holds (bounds; negative = violated).
struct CheckRow {
  std::string graph;
  std::string formula_id;
  std::optional<double> as_printed;
  std::optional<double> corrected;
  std::optional<double> lower;
  std::optional<double> upper;
  double observed = 0.0;
  double slack = 0.0;
  bool holds = false;
  std::string note;
};

/// Trace and second-moment identities: the published second-moment form
/// (gamma_R + 2m + 2M) and the variant forced by the matrix definition
/// (4 n2 + n1 + 2m + 2M). tol scales with n and the magnitude checked.
std::vector<CheckRow> moment_identities(const GraphInvariants& inv, const Spectrum& s,
                                        double tol, const std::string& label);

/// Second-moment identity specialization for diameter-2 graphs, both the
/// published and the repaired variant. Throws std::domain_error when the
/// graph is not connected with diameter exactly 2.
std::vector<CheckRow> diameter2_identity(const GraphInvariants& inv, const Spectrum& s,
                                         double tol, const std::string& label);

/// Energy bounds: the published two-sided bound with |det|^(n/2), the
/// repaired |det|^(2/n) variant, and the domination-number corollary.
std::vector<CheckRow> mcclelland_bounds(const GraphInvariants& inv, const Spectrum& s,
                                        double tol, const std::string& label);

/// Spectral radius lower bounds: 2W/n always, and the diameter-2 closed
/// form when it applies. Throws std::domain_error on disconnected input.
std::vector<CheckRow> spectral_radius_bounds(const GraphInvariants& inv, const Spectrum& s,
                                             double tol, const std::string& label);

SandwichReport sandwich_check(const Graph& g);

/// Full per-graph bundle: solves the graph, runs every identity and bound
/// that applies, and returns the rows. Used by the verify and batch
/// commands and by the self-test suites.
std::vector<CheckRow> run_all_checks(const Graph& g, const std::string& label, double tol);

}  // namespace mrdd
