#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mrdd/families.hpp"
#include "mrdd/graph.hpp"
#include "mrdd/roman.hpp"
#include "mrdd/spectral.hpp"
#include "mrdd/verify.hpp"

namespace mrdd {

using Json = nlohmann::ordered_json;

/// Edge list text format: optional '#' comment lines, then "n m", then m
/// lines "u v". Throws std::invalid_argument (with a line number) on
/// malformed input; endpoint range errors surface as std::out_of_range.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Writes the same format back, preceded by one comment line when
/// `comment` is nonempty. Round-trips through parse_edge_list.
void write_edge_list(const Graph& g, std::ostream& out, const std::string& comment = "");

/// Case-insensitive family lookup ("complete", "star", "bipartite",
/// "crown", "spider", "path", "cycle"). Throws std::invalid_argument.
Family parse_family_name(const std::string& name);

Json rdf_to_json(const RomanDominatingFunction& f);
Json spectrum_to_json(const Spectrum& s);
/// {"coefficients": [c_0, ..., c_n]} with exact decimal strings.
Json charpoly_to_json(const CharPoly& p);
Json check_row_to_json(const CheckRow& row);
Json family_report_to_json(const FamilyReport& rep);

std::string family_report_csv_header();
std::string family_report_csv_row(const FamilyReport& rep);

/// Fixed-point text rendering used by the CLI (10 decimal places).
std::string format_real(double x);

}  // namespace mrdd
