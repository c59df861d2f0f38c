#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mrdd/families.hpp"
#include "mrdd/roman.hpp"
#include "mrdd/verify.hpp"

using namespace mrdd;

TEST_CASE("prediction parameter ranges") {
  CHECK_THROWS_AS(predict({Family::kComplete, 2}), std::out_of_range);
  CHECK_THROWS_AS(predict({Family::kStar, 2}), std::out_of_range);
  CHECK_THROWS_AS(predict({Family::kBipartite, 1}), std::out_of_range);
  CHECK_THROWS_AS(predict({Family::kCrown, 2}), std::out_of_range);
  CHECK_THROWS_AS(predict({Family::kSpider, 1}), std::out_of_range);
  CHECK_THROWS_AS(predict({Family::kPath, 5}), std::invalid_argument);
  CHECK_THROWS_AS(predict({Family::kCycle, 5}), std::invalid_argument);
}

TEST_CASE("factor lists expand to monic polynomials of the right degree") {
  for (FamilySpec spec : {FamilySpec{Family::kComplete, 6}, FamilySpec{Family::kStar, 7},
                          FamilySpec{Family::kBipartite, 4}, FamilySpec{Family::kCrown, 5},
                          FamilySpec{Family::kSpider, 5}}) {
    FamilyPrediction pred = predict(spec);
    const int n = generate(spec).num_vertices();
    CHECK(total_degree(pred.factors) == n);
    CharPoly expanded = expand_factors(pred.factors);
    CHECK(expanded.degree() == n);
    CHECK(expanded.c.back() == 1);
  }
}

TEST_CASE("sweeps match the closed forms where the constructions are minimum") {
  for (int n = 3; n <= 12; ++n) {
    FamilyReport rep = verify_family({Family::kComplete, n});
    CHECK(rep.all_match());
    CHECK(rep.energy_computed == doctest::Approx(2.0 * n - 2.0).epsilon(1e-10));
  }
  for (int n = 3; n <= 12; ++n) {
    FamilyReport rep = verify_family({Family::kStar, n});
    CHECK(rep.all_match());
    CHECK(rep.energy_computed == doctest::Approx(4.0 * n - 6.0).epsilon(1e-10));
  }
  for (int r = 3; r <= 10; ++r) CHECK(verify_family({Family::kBipartite, r}).all_match());
  for (int k = 3; k <= 8; ++k) {
    FamilyReport rep = verify_family({Family::kCrown, k});
    CHECK(rep.all_match());
    CHECK_FALSE(rep.alt_degree_ok);
    CHECK_FALSE(rep.alt_charpoly_match);
    CHECK(rep.notes.find("degree audit") != std::string::npos);
  }
  for (int n = 3; n <= 8; ++n) CHECK(verify_family({Family::kSpider, n}).all_match());
}

TEST_CASE("frozen energies") {
  CHECK(verify_family({Family::kBipartite, 3}).energy_computed ==
        doctest::Approx(7.0 + std::sqrt(73.0)).epsilon(1e-10));
  CHECK(verify_family({Family::kCrown, 4}).energy_computed ==
        doctest::Approx(22.0 + 2.0 * std::sqrt(3.0)).epsilon(1e-10));
  const double spider3 = verify_family({Family::kSpider, 3}).energy_computed;
  CHECK(spider3 == doctest::Approx(15.7734136941).epsilon(1e-8));
}

TEST_CASE("the two-vertex-part bipartite case is not covered by the closed forms") {
  FamilyReport rep = verify_family({Family::kBipartite, 2});
  CHECK_FALSE(rep.gamma_r_match);
  CHECK(rep.gamma_r_computed == 3);
  CHECK(rep.gamma_r_predicted == 4);
  CHECK_FALSE(rep.energy_match);
  CHECK(rep.energy_computed == doctest::Approx(8.1954703762).epsilon(1e-8));
  CHECK_FALSE(rep.charpoly_match);
  CHECK(rep.notes.find("not a minimum") != std::string::npos);
}

TEST_CASE("the two-spine spider case falls outside its closed forms") {
  FamilyReport rep = verify_family({Family::kSpider, 2});
  CHECK_FALSE(rep.gamma_r_match);
  CHECK(rep.gamma_r_computed == 2);
  CHECK_FALSE(rep.energy_match);
  CHECK(rep.energy_computed == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(rep.energy_predicted_low > rep.energy_predicted_high);  // empty interval
  CHECK(rep.notes.find("empty") != std::string::npos);
}

TEST_CASE("the balanced bipartite minimum uses one vertex from each side") {
  Graph g = generate({Family::kBipartite, 3});
  auto all = enumerate_min_rdfs(g);
  CHECK(all.rdfs.size() == 15);
  auto canonical = min_roman_domination(g).canonical;
  CHECK(canonical.v2 == std::vector<int>{0, 3});
  CHECK(canonical.v1.empty());
}

TEST_CASE("spider second distance moment follows the graph, not the remark") {
  for (int n = 3; n <= 8; ++n) {
    Graph g = generate({Family::kSpider, n});
    GraphInvariants inv = compute_invariants(g, min_roman_domination(g).canonical);
    CHECK(inv.second_moment == static_cast<long long>(n - 1) * (19 * n - 34));
    CHECK(inv.second_moment != static_cast<long long>(n - 1) * (19 * n - 6));
  }
}

TEST_CASE("crown alternate reading doubles the linear factor multiplicities") {
  FamilyPrediction pred = predict({Family::kCrown, 5});
  REQUIRE(pred.factors_alt.has_value());
  CHECK(total_degree(*pred.factors_alt) == 4 * 5);
  CHECK(total_degree(pred.factors) == 2 * 5);
}
