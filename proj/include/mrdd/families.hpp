#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrdd/graph.hpp"
#include "mrdd/spectral.hpp"

namespace mrdd {

struct PolyFactor {
  CharPoly base;
  int multiplicity = 1;
};

/// Closed-form predictions for one family member: the Roman domination
/// number, the spectral energy (a point value, or an interval for the
/// spider family), and the characteristic polynomial in factored form.
struct FamilyPrediction {
  FamilySpec spec;
  int gamma_r = 0;

  bool energy_is_interval = false;
  long double energy = 0.0L;       // point prediction
  long double energy_low = 0.0L;   // interval bounds when energy_is_interval
  long double energy_high = 0.0L;

  std::vector<PolyFactor> factors;  // self-consistent reading (degrees sum to n)
  // Alternate popularized exponent for the crown family; its degrees do
  // not sum to the vertex count, which verify_family flags.
  std::optional<std::vector<PolyFactor>> factors_alt;
};

/// Throws std::out_of_range below the family's minimum parameter and
/// std::invalid_argument for families without closed forms (path, cycle).
FamilyPrediction predict(const FamilySpec& spec);

/// Multiplies out a factor list into one exact polynomial.
CharPoly expand_factors(const std::vector<PolyFactor>& factors);

int total_degree(const std::vector<PolyFactor>& factors);

struct FamilyReport {
  FamilySpec spec;

  int gamma_r_predicted = 0;
  int gamma_r_computed = 0;
  bool gamma_r_match = false;

  bool energy_is_interval = false;
  long double energy_predicted_low = 0.0L;   // == high for point predictions
  long double energy_predicted_high = 0.0L;
  double energy_computed = 0.0;
  double energy_abs_error = 0.0;  // distance to the point / outside the interval
  bool energy_match = false;

  bool charpoly_match = false;      // computed == expanded self-consistent factors
  bool alt_degree_ok = true;        // alternate reading passes the degree audit
  bool alt_charpoly_match = false;  // alternate reading expands to the computed poly

  std::string notes;

  bool all_match() const { return gamma_r_match && energy_match && charpoly_match; }
};

/// Builds the member, solves it exactly, and checks every closed form
/// against the computed ground truth. tol bounds the energy comparison.
FamilyReport verify_family(const FamilySpec& spec, double tol = 1e-8);

}  // namespace mrdd
