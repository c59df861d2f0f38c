#include "mrdd/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mrdd {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::vector<long long> parse_ints(const std::string& line, size_t count, int line_no) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long value = 0;
  while (in >> value) out.push_back(value);
  std::string rest;
  if (in.fail() && !in.eof()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected integers, got '" +
                                line + "'");
  }
  if (out.size() != count)
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                std::to_string(count) + " integers, got " +
                                std::to_string(out.size()));
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    if (n < 0) {
      auto header = parse_ints(line, 2, line_no);
      n = header[0];
      m = header[1];
      if (n < 0 || m < 0)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": vertex and edge counts must be nonnegative");
      edges.reserve(static_cast<size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": more than " +
                                  std::to_string(m) + " edge lines");
    auto pair = parse_ints(line, 2, line_no);
    edges.emplace_back(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
  }
  if (n < 0) throw std::invalid_argument("empty edge list: missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m)
    throw std::invalid_argument("expected " + std::to_string(m) + " edges, got " +
                                std::to_string(edges.size()));
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << g.num_vertices() << " " << g.num_edges() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Family parse_family_name(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (key == "complete") return Family::kComplete;
  if (key == "star") return Family::kStar;
  if (key == "bipartite") return Family::kBipartite;
  if (key == "crown") return Family::kCrown;
  if (key == "spider") return Family::kSpider;
  if (key == "path") return Family::kPath;
  if (key == "cycle") return Family::kCycle;
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected complete, star, bipartite, crown, spider, path, or cycle)");
}

Json rdf_to_json(const RomanDominatingFunction& f) {
  Json j;
  j["v0"] = f.v0;
  j["v1"] = f.v1;
  j["v2"] = f.v2;
  j["weight"] = f.weight();
  return j;
}

Json spectrum_to_json(const Spectrum& s) {
  Json j;
  j["eigenvalues"] = s.eigenvalues;
  j["energy"] = s.energy;
  j["residual"] = s.residual;
  return j;
}

Json charpoly_to_json(const CharPoly& p) {
  Json j;
  std::vector<std::string> coeffs;
  coeffs.reserve(p.c.size());
  for (const BigInt& c : p.c) coeffs.push_back(c.str());
  j["coefficients"] = coeffs;
  return j;
}

namespace {

Json optional_to_json(const std::optional<double>& x) {
  if (!x || !std::isfinite(*x)) return nullptr;
  return *x;
}

}  // namespace

Json check_row_to_json(const CheckRow& row) {
  Json j;
  j["graph"] = row.graph;
  j["formula"] = row.formula_id;
  j["as_printed"] = optional_to_json(row.as_printed);
  j["corrected"] = optional_to_json(row.corrected);
  j["lower"] = optional_to_json(row.lower);
  j["upper"] = optional_to_json(row.upper);
  j["observed"] = row.observed;
  j["slack"] = std::isfinite(row.slack) ? Json(row.slack) : Json(nullptr);
  j["holds"] = row.holds;
  j["note"] = row.note;
  return j;
}

Json family_report_to_json(const FamilyReport& rep) {
  Json j;
  j["family"] = family_name(rep.spec.family);
  j["param"] = rep.spec.param;
  j["gamma_R_predicted"] = rep.gamma_r_predicted;
  j["gamma_R_computed"] = rep.gamma_r_computed;
  j["gamma_R_match"] = rep.gamma_r_match;
  if (rep.energy_is_interval) {
    j["energy_predicted"] = Json::array({static_cast<double>(rep.energy_predicted_low),
                                         static_cast<double>(rep.energy_predicted_high)});
  } else {
    j["energy_predicted"] = static_cast<double>(rep.energy_predicted_low);
  }
  j["energy_computed"] = rep.energy_computed;
  j["energy_abs_error"] = rep.energy_abs_error;
  j["energy_match"] = rep.energy_match;
  j["charpoly_match"] = rep.charpoly_match;
  j["alt_degree_ok"] = rep.alt_degree_ok;
  j["alt_charpoly_match"] = rep.alt_charpoly_match;
  j["notes"] = rep.notes;
  return j;
}

std::string family_report_csv_header() {
  return "family,param,gamma_R_predicted,gamma_R_computed,energy_predicted,"
         "energy_computed,abs_error,charpoly_match,notes";
}

std::string family_report_csv_row(const FamilyReport& rep) {
  std::ostringstream out;
  out << family_name(rep.spec.family) << "," << rep.spec.param << ",";
  out << rep.gamma_r_predicted << "," << rep.gamma_r_computed << ",";
  if (rep.energy_is_interval)
    out << "[" << format_real(static_cast<double>(rep.energy_predicted_low)) << ";"
        << format_real(static_cast<double>(rep.energy_predicted_high)) << "],";
  else
    out << format_real(static_cast<double>(rep.energy_predicted_low)) << ",";
  out << format_real(rep.energy_computed) << "," << format_real(rep.energy_abs_error) << ",";
  out << (rep.charpoly_match ? "true" : "false") << ",";
  std::string notes = rep.notes;
  std::replace(notes.begin(), notes.end(), ',', ';');
  out << "\"" << notes << "\"";
  return out.str();
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10f", x);
  return std::string(buf);
}

}  // namespace mrdd
