#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mrdd/families.hpp"
#include "mrdd/graph.hpp"
#include "mrdd/io.hpp"
#include "mrdd/roman.hpp"
#include "mrdd/spectral.hpp"
#include "mrdd/verify.hpp"

namespace {

using namespace mrdd;

struct InputOptions {
  std::string input_path;
  std::string family;
  int param = 0;
};

struct ResolvedInput {
  Graph graph;
  std::string label;
  std::optional<FamilySpec> spec;
};

void add_input_options(CLI::App* cmd, InputOptions& opts, bool file_allowed = true) {
  if (file_allowed) cmd->add_option("--input,-i", opts.input_path, "edge list file");
  auto* fam = cmd->add_option("--family,-f", opts.family,
                              "graph family (complete|star|bipartite|crown|spider|path|cycle)");
  auto* par = cmd->add_option("--param,-p", opts.param, "family parameter");
  fam->needs(par);
  par->needs(fam);
}

ResolvedInput resolve_input(const InputOptions& opts) {
  const bool have_file = !opts.input_path.empty();
  const bool have_family = !opts.family.empty();
  if (have_file == have_family)
    throw std::invalid_argument("choose exactly one of --input and --family/--param");
  ResolvedInput in;
  if (have_file) {
    in.graph = read_edge_list_file(opts.input_path);
    in.label = opts.input_path;
  } else {
    FamilySpec spec{parse_family_name(opts.family), opts.param};
    in.graph = generate(spec);
    in.label = family_name(spec.family) + "(" + std::to_string(spec.param) + ")";
    in.spec = spec;
  }
  return in;
}

bool has_closed_form(Family f) {
  return f == Family::kComplete || f == Family::kStar || f == Family::kBipartite ||
         f == Family::kCrown || f == Family::kSpider;
}

std::string format_residual(double r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6e", r);
  return std::string(buf);
}

std::string optional_field(const std::optional<double>& x) {
  if (!x) return "-";
  if (!std::isfinite(*x)) return "overflow";
  return format_real(*x);
}

void print_row_text(const CheckRow& row) {
  std::cout << (row.holds ? "[ok]   " : "[FAIL] ") << row.formula_id << ":";
  if (row.as_printed) std::cout << " as_printed=" << optional_field(row.as_printed);
  if (row.corrected) std::cout << " corrected=" << optional_field(row.corrected);
  if (row.lower) std::cout << " lower=" << optional_field(row.lower);
  if (row.upper) std::cout << " upper=" << optional_field(row.upper);
  std::cout << " observed=" << format_real(row.observed);
  if (std::isfinite(row.slack)) std::cout << " slack=" << format_real(row.slack);
  if (!row.note.empty()) std::cout << "  (" << row.note << ")";
  std::cout << "\n";
}

std::string check_row_csv_header() {
  return "graph,formula,as_printed,corrected,lower,upper,observed,slack,holds,note";
}

std::string csv_field(const std::optional<double>& x) {
  if (!x || !std::isfinite(*x)) return "";
  return format_real(*x);
}

std::string check_row_csv(const CheckRow& row) {
  std::string note = row.note;
  std::replace(note.begin(), note.end(), ',', ';');
  std::string out = row.graph + "," + row.formula_id + ",";
  out += csv_field(row.as_printed) + "," + csv_field(row.corrected) + ",";
  out += csv_field(row.lower) + "," + csv_field(row.upper) + ",";
  out += format_real(row.observed) + ",";
  out += (std::isfinite(row.slack) ? format_real(row.slack) : std::string("")) + ",";
  out += (row.holds ? "true" : "false");
  out += ",\"" + note + "\"";
  return out;
}

struct SolvedGraph {
  MinRdfResult min;
  DistanceMatrix distances;
  MrddMatrix matrix;
};

SolvedGraph solve(const Graph& g) {
  SolvedGraph s;
  s.min = min_roman_domination(g);
  s.distances = all_pairs_distances(g);
  s.matrix = build_mrdd_matrix(s.distances, s.min.canonical);
  return s;
}

int run_generate(const InputOptions& opts, const std::string&) {
  FamilySpec spec{parse_family_name(opts.family), opts.param};
  Graph g = generate(spec);
  write_edge_list(g, std::cout, family_name(spec.family) + "(" + std::to_string(spec.param) + ")");
  return 0;
}

int run_rdf(const InputOptions& opts, const std::string& format, bool all, int cap) {
  ResolvedInput in = resolve_input(opts);
  const MinDominationResult dom = min_domination(in.graph);
  const EnumerateResult enumerated = enumerate_min_rdfs(in.graph, cap);
  const RomanDominatingFunction& canonical = enumerated.rdfs.front();
  if (format == "json") {
    Json j;
    j["gamma"] = dom.gamma;
    j["gamma_R"] = canonical.weight();
    j["count"] = enumerated.rdfs.size();
    j["truncated"] = enumerated.truncated;
    j["canonical"] = rdf_to_json(canonical);
    if (all) {
      Json list = Json::array();
      for (const auto& f : enumerated.rdfs) list.push_back(rdf_to_json(f));
      j["all"] = list;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "gamma = " << dom.gamma << "\n";
  std::cout << "gamma_R = " << canonical.weight() << "\n";
  std::cout << "count = " << enumerated.rdfs.size()
            << (enumerated.truncated ? " (truncated)" : "") << "\n";
  std::cout << "canonical = " << rdf_to_json(canonical).dump() << "\n";
  if (all)
    for (size_t i = 0; i < enumerated.rdfs.size(); ++i)
      std::cout << "rdf[" << i << "] = " << rdf_to_json(enumerated.rdfs[i]).dump() << "\n";
  return 0;
}

int run_energy(const InputOptions& opts, const std::string& format, const std::string& rdf_sel,
               double tol, int cap) {
  ResolvedInput in = resolve_input(opts);
  const JacobiOptions jopt{.tol = std::min(tol, 1e-10)};
  if (rdf_sel == "all") {
    EnumerateResult enumerated = enumerate_min_rdfs(in.graph, cap);
    std::vector<double> energies;
    for (const auto& f : enumerated.rdfs) {
      MrddMatrix a = build_mrdd_matrix(all_pairs_distances(in.graph), f);
      energies.push_back(eigenvalues(a, jopt).energy);
    }
    const auto [lo, hi] = std::minmax_element(energies.begin(), energies.end());
    if (format == "json") {
      Json j;
      j["count"] = energies.size();
      j["truncated"] = enumerated.truncated;
      j["energies"] = energies;
      j["min"] = *lo;
      j["max"] = *hi;
      j["spread"] = *hi - *lo;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    std::cout << "count = " << energies.size() << (enumerated.truncated ? " (truncated)" : "")
              << "\n";
    for (size_t i = 0; i < energies.size(); ++i)
      std::cout << "energy[" << i << "] = " << format_real(energies[i]) << "\n";
    std::cout << "min = " << format_real(*lo) << "\n";
    std::cout << "max = " << format_real(*hi) << "\n";
    std::cout << "spread = " << format_real(*hi - *lo) << "\n";
    return 0;
  }

  RomanDominatingFunction f;
  if (rdf_sel == "canonical") {
    f = min_roman_domination(in.graph).canonical;
  } else {
    size_t index = 0;
    try {
      index = static_cast<size_t>(std::stoul(rdf_sel));
    } catch (const std::exception&) {
      throw std::invalid_argument("--rdf expects 'canonical', 'all', or an index");
    }
    EnumerateResult enumerated = enumerate_min_rdfs(in.graph, cap);
    if (index >= enumerated.rdfs.size())
      throw std::out_of_range("rdf index " + std::to_string(index) + " out of range (count " +
                              std::to_string(enumerated.rdfs.size()) + ")");
    f = enumerated.rdfs[index];
  }
  MrddMatrix a = build_mrdd_matrix(all_pairs_distances(in.graph), f);
  Spectrum s = eigenvalues(a, jopt);
  if (format == "json") {
    Json j;
    j["energy"] = s.energy;
    j["gamma_R"] = f.weight();
    j["rdf"] = rdf_to_json(f);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "energy = " << format_real(s.energy) << "\n";
  std::cout << "gamma_R = " << f.weight() << "\n";
  std::cout << "rdf = " << rdf_to_json(f).dump() << "\n";
  return 0;
}

int run_spectrum(const InputOptions& opts, const std::string& format, double tol) {
  ResolvedInput in = resolve_input(opts);
  SolvedGraph solved = solve(in.graph);
  Spectrum s = eigenvalues(solved.matrix, JacobiOptions{.tol = std::min(tol, 1e-10)});
  if (format == "json") {
    std::cout << spectrum_to_json(s).dump(2) << "\n";
    return 0;
  }
  std::cout << "eigenvalues =";
  for (double v : s.eigenvalues) std::cout << " " << format_real(v);
  std::cout << "\n";
  std::cout << "energy = " << format_real(s.energy) << "\n";
  std::cout << "residual = " << format_residual(s.residual) << "\n";
  return 0;
}

int run_charpoly(const InputOptions& opts, const std::string& format) {
  ResolvedInput in = resolve_input(opts);
  SolvedGraph solved = solve(in.graph);
  CharPoly p = char_poly(solved.matrix);
  if (format == "json") {
    std::cout << charpoly_to_json(p).dump(2) << "\n";
    return 0;
  }
  std::cout << "charpoly = " << p.pretty() << "\n";
  std::cout << "coefficients =";
  for (size_t k = p.c.size(); k-- > 0;) std::cout << " " << p.c[k].str();
  std::cout << "\n";
  return 0;
}

struct VerifyOutcome {
  std::vector<CheckRow> rows;
  std::optional<FamilyReport> family;

  int failures() const {
    int count = 0;
    for (const auto& row : rows)
      if (!row.holds) ++count;
    if (family && !(family->gamma_r_match && family->energy_match && family->charpoly_match))
      ++count;
    return count;
  }
};

VerifyOutcome verify_one(const Graph& g, const std::string& label,
                         const std::optional<FamilySpec>& spec, double tol) {
  VerifyOutcome out;
  out.rows = run_all_checks(g, label, tol);
  if (spec && has_closed_form(spec->family)) out.family = verify_family(*spec, tol);
  return out;
}

void print_family_text(const FamilyReport& rep) {
  std::cout << (rep.gamma_r_match && rep.energy_match && rep.charpoly_match ? "[ok]   "
                                                                            : "[FAIL] ")
            << "family " << family_name(rep.spec.family) << "(" << rep.spec.param << "):"
            << " gamma_R " << rep.gamma_r_computed << "/" << rep.gamma_r_predicted;
  if (rep.energy_is_interval)
    std::cout << " energy=" << format_real(rep.energy_computed) << " in ["
              << format_real(static_cast<double>(rep.energy_predicted_low)) << ", "
              << format_real(static_cast<double>(rep.energy_predicted_high)) << "]";
  else
    std::cout << " energy=" << format_real(rep.energy_computed)
              << " predicted=" << format_real(static_cast<double>(rep.energy_predicted_low));
  std::cout << " err=" << format_real(rep.energy_abs_error)
            << " charpoly_match=" << (rep.charpoly_match ? "true" : "false");
  if (!rep.notes.empty()) std::cout << "  (" << rep.notes << ")";
  std::cout << "\n";
}

int emit_verify(const std::vector<VerifyOutcome>& outcomes, const std::string& format) {
  int failures = 0;
  for (const auto& o : outcomes) failures += o.failures();
  if (format == "json") {
    Json graphs = Json::array();
    for (const auto& o : outcomes) {
      Json j;
      j["graph"] = o.rows.empty() ? "" : o.rows.front().graph;
      Json rows = Json::array();
      for (const auto& row : o.rows) rows.push_back(check_row_to_json(row));
      j["rows"] = rows;
      j["family"] = o.family ? family_report_to_json(*o.family) : Json(nullptr);
      graphs.push_back(j);
    }
    Json top;
    top["graphs"] = graphs;
    top["failures"] = failures;
    std::cout << top.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << check_row_csv_header() << "\n";
    for (const auto& o : outcomes)
      for (const auto& row : o.rows) std::cout << check_row_csv(row) << "\n";
    bool any_family = false;
    for (const auto& o : outcomes) any_family = any_family || o.family.has_value();
    if (any_family) {
      std::cout << family_report_csv_header() << "\n";
      for (const auto& o : outcomes)
        if (o.family) std::cout << family_report_csv_row(*o.family) << "\n";
    }
  } else {
    for (const auto& o : outcomes) {
      if (!o.rows.empty()) std::cout << "graph " << o.rows.front().graph << "\n";
      for (const auto& row : o.rows) print_row_text(row);
      if (o.family) print_family_text(*o.family);
    }
    std::cout << "summary: " << failures << " failed\n";
  }
  return failures > 0 ? 3 : 0;
}

int run_verify(const InputOptions& opts, const std::string& format, double tol) {
  ResolvedInput in = resolve_input(opts);
  return emit_verify({verify_one(in.graph, in.label, in.spec, tol)}, format);
}

// Portable bounded draw: rejection sampling keeps the stream identical
// across standard library implementations.
std::uint32_t bounded(std::mt19937& rng, std::uint32_t span) {
  const std::uint32_t limit = std::numeric_limits<std::uint32_t>::max() / span * span;
  std::uint32_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % span;
}

Graph random_connected_graph(std::mt19937& rng, int n_min, int n_max) {
  while (true) {
    const int n = n_min + static_cast<int>(bounded(rng, static_cast<std::uint32_t>(n_max - n_min + 1)));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() & 1u) edges.emplace_back(i, j);
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

int run_batch(int count, std::uint32_t seed, const std::string& format, double tol) {
  if (count < 1) throw std::invalid_argument("--count must be positive");
  std::mt19937 rng(seed);
  std::vector<VerifyOutcome> outcomes;
  for (int i = 0; i < count; ++i) {
    Graph g = random_connected_graph(rng, 4, 10);
    const std::string label =
        "random[" + std::to_string(i) + "]:n=" + std::to_string(g.num_vertices()) +
        ":seed=" + std::to_string(seed);
    outcomes.push_back(verify_one(g, label, std::nullopt, tol));
  }
  return emit_verify(outcomes, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum Roman dominating distance energy toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  double tol = 1e-8;
  app.add_option("--format", format, "output format: text, json, or csv (verify/batch)")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--tol", tol, "verification tolerance")->capture_default_str();

  InputOptions gen_opts, rdf_opts, energy_opts, spectrum_opts, charpoly_opts, verify_opts;
  bool rdf_all = false;
  int cap = 10000;
  std::string rdf_sel = "canonical";
  int batch_count = 20;
  std::uint32_t batch_seed = 1;

  auto* cmd_generate = app.add_subcommand("generate", "emit a family member as an edge list");
  add_input_options(cmd_generate, gen_opts, /*file_allowed=*/false);
  cmd_generate->get_option("--family")->required();

  auto* cmd_rdf = app.add_subcommand("rdf", "domination numbers and minimum functions");
  add_input_options(cmd_rdf, rdf_opts);
  cmd_rdf->add_flag("--all", rdf_all, "list every minimum function");
  cmd_rdf->add_option("--cap", cap, "enumeration cap")->capture_default_str();

  auto* cmd_energy = app.add_subcommand("energy", "spectral energy of the labeled distance matrix");
  add_input_options(cmd_energy, energy_opts);
  cmd_energy->add_option("--rdf", rdf_sel, "canonical, all, or an index into the minimum functions")
      ->capture_default_str();
  cmd_energy->add_option("--cap", cap, "enumeration cap")->capture_default_str();

  auto* cmd_spectrum = app.add_subcommand("spectrum", "eigenvalues, energy, and residual");
  add_input_options(cmd_spectrum, spectrum_opts);

  auto* cmd_charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
  add_input_options(cmd_charpoly, charpoly_opts);

  auto* cmd_verify = app.add_subcommand("verify", "check identities, bounds, and closed forms");
  add_input_options(cmd_verify, verify_opts);

  auto* cmd_batch = app.add_subcommand("batch", "verify a stream of random connected graphs");
  cmd_batch->add_option("--count", batch_count, "number of graphs")->capture_default_str();
  cmd_batch->add_option("--seed", batch_seed, "generator seed")->capture_default_str();

  // Let the global --format/--tol appear after the subcommand name as well.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*cmd_generate) return run_generate(gen_opts, format);
    if (*cmd_rdf) return run_rdf(rdf_opts, format, rdf_all, cap);
    if (*cmd_energy) return run_energy(energy_opts, format, rdf_sel, tol, cap);
    if (*cmd_spectrum) return run_spectrum(spectrum_opts, format, tol);
    if (*cmd_charpoly) return run_charpoly(charpoly_opts, format);
    if (*cmd_verify) return run_verify(verify_opts, format, tol);
    if (*cmd_batch) return run_batch(batch_count, batch_seed, format, tol);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
