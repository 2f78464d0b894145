// Command-line front end. Exit codes: 0 done, 2 input error, 3 internal
// consistency failure.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gitstab/analysis.hpp"
#include "gitstab/criteria.hpp"
#include "gitstab/errors.hpp"
#include "gitstab/json_io.hpp"
#include "gitstab/search.hpp"
#include "gitstab/torus.hpp"
#include "gitstab/weights.hpp"

namespace {

using namespace gitstab;
using nlohmann::json;

constexpr int kInputError = 2;
constexpr int kConsistencyError = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HomogeneousPoly load_poly(const std::string& path) { return read_poly_text(slurp(path)); }

std::string weights_text(const WeightVector& r) {
  std::string out = "(";
  for (std::size_t j = 0; j < r.size(); ++j) out += (j ? ", " : "") + std::to_string(r[j]);
  return out + ")";
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string verdict_text(const StabilityVerdict& v) {
  std::ostringstream os;
  os << "status: " << to_string(v.status) << "\n";
  for (const auto& r : v.reasons) {
    os << "  " << r.criterion << " [" << r.provenance << "]: " << r.note;
    if (!r.margin.empty()) os << "  (margin " << r.margin << ")";
    os << "\n";
  }
  if (v.literature) os << "  literature: " << *v.literature << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GIT stability of projective hypersurfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json-out", as_json, "Print JSON instead of text");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of a hypersurface");
  std::string analyze_file, points_file, json_path;
  std::optional<int> s_opt;
  int budget = 20;
  std::uint64_t seed = 1;
  bool no_timestamp = false;
  analyze_cmd->add_option("file", analyze_file)->required();
  analyze_cmd->add_option("--s", s_opt, "Dimension of the singular locus (-1 = smooth)");
  analyze_cmd->add_option("--points", points_file, "JSON list of candidate singular points");
  analyze_cmd->add_option("--budget", budget);
  analyze_cmd->add_option("--seed", seed);
  analyze_cmd->add_option("--json", json_path, "Write the JSON report here");
  analyze_cmd->add_flag("--no-timestamp", no_timestamp);

  // example
  auto* example_cmd = app.add_subcommand("example", "Destabilized example families");
  std::string family;
  int example_n = 2;
  example_cmd->add_option("family", family)->required()->check(CLI::IsMember({"fn", "gn"}));
  example_cmd->add_option("--n", example_n)->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "Search for a destabilizing 1-PS");
  std::string search_file;
  SearchConfig cfg;
  std::optional<int> assume_s;
  search_cmd->add_option("file", search_file)->required();
  search_cmd->add_option("--budget", cfg.budget)->required();
  search_cmd->add_option("--seed", cfg.seed)->required();
  search_cmd->add_option("--bound", cfg.bound);
  search_cmd->add_option("--assume-s", assume_s);

  // criteria
  auto* criteria_cmd = app.add_subcommand("criteria", "Sufficient criteria from singularity data");
  SingularityProfile profile;
  std::optional<int> rank, corank;
  bool cone_free = false;
  criteria_cmd->add_option("--n", profile.n)->required();
  criteria_cmd->add_option("--d", profile.d)->required();
  criteria_cmd->add_option("--s", profile.s)->required();
  criteria_cmd->add_option("--delta", profile.delta)->required();
  auto* rank_opt = criteria_cmd->add_option("--rank", rank);
  auto* corank_opt = criteria_cmd->add_option("--corank", corank);
  rank_opt->excludes(corank_opt);
  criteria_cmd->add_flag("--cone-free", cone_free);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-check of the torus LP");
  std::string oracle_file;
  int oracle_bound = 5;
  bool strict = false;
  oracle_cmd->add_option("file", oracle_file)->required();
  oracle_cmd->add_option("--bound", oracle_bound)->required();
  oracle_cmd->add_flag("--strict", strict);

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "Verify a certificate exactly");
  std::string certify_file, cert_file;
  certify_cmd->add_option("file", certify_file)->required();
  certify_cmd->add_option("--cert", cert_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*analyze_cmd) {
      HomogeneousPoly f = load_poly(analyze_file);
      AnalyzeOptions opts;
      opts.s = s_opt;
      opts.search.budget = budget;
      opts.search.seed = seed;
      opts.search.assume_s = s_opt && *s_opt >= 0 && *s_opt <= f.n() - 2 ? s_opt : std::nullopt;
      opts.search.validate();
      if (!points_file.empty()) opts.extra_points = points_from_json(json::parse(slurp(points_file)));
      AnalysisReport report = analyze(f, opts);
      json j = to_json(report, !no_timestamp);
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::invalid_argument("cannot write " + json_path);
        out << j.dump(2) << "\n";
      }
      emit(j, as_json, to_text(report));
    } else if (*example_cmd) {
      ExampleFamily ex = example_family(family, example_n);
      StabilityVerdict v = verify_certificate(ex.poly, ex.certificate);
      if (v.status != Status::NotSemiStable) {
        throw ConsistencyError("example certificate failed to verify: " + v.reasons.front().note);
      }
      json j{{"schema_version", kReportSchemaVersion},
             {"polynomial", to_string(ex.poly)},
             {"n", ex.poly.n()},
             {"d", ex.poly.degree()},
             {"certificate", to_json(ex.certificate)},
             {"verdict", to_json(v)},
             {"edge_case", ex.edge_case}};
      std::string text = to_string(ex.poly) + "\nr = " + weights_text(ex.certificate.r) + "\n" +
                         verdict_text(v) + (ex.edge_case ? "note: edge case without quartic block\n" : "");
      emit(j, as_json, text);
    } else if (*search_cmd) {
      HomogeneousPoly f = load_poly(search_file);
      cfg.assume_s = assume_s;
      cfg.validate();
      std::vector<ProjectivePoint> points;
      for (const auto& p : scan_singular_points(f, f.n() <= 4 ? 2 : 1, {}).points) {
        if (multiplicity_at(f, p) >= 2) points.push_back(p);
      }
      SearchResult r = search_destabilizing(f, points, cfg);
      std::ostringstream text;
      text << r.frames.size() << " frame(s) tried\n";
      if (const auto& best = r.best()) {
        text << (best->strict ? "strict" : "non-strict") << " certificate: r = " << weights_text(best->r) << "\n";
        text << "status: " << to_string(verify_certificate(f, *best).status) << "\n";
      }
      for (const auto& note : r.notes) text << "note: " << note << "\n";
      emit(to_json(r), as_json, text.str());
    } else if (*criteria_cmd) {
      if (rank) profile.min_hessian_rank = rank;
      if (corank) profile.min_hessian_rank = profile.n - *corank;
      if (profile.s == -1) profile.singularity_class = "smooth";
      profile.validate();
      std::optional<bool> cf;
      if (cone_free) cf = true;
      StabilityVerdict v = combined_verdict(profile, cf);
      emit(to_json(v), as_json, verdict_text(v));
    } else if (*oracle_cmd) {
      HomogeneousPoly f = load_poly(oracle_file);
      if (oracle_bound < 1) throw std::invalid_argument("--bound must be >= 1");
      auto found = enumerate_weight_oracle(f, oracle_bound, strict);
      TorusDecision lp = torus_destabilize(f, strict);
      // The oracle is bounded: it may miss a witness the LP finds only if the
      // LP witness itself exceeds the bound.
      bool agree = found.has_value() == lp.feasible;
      if (!agree && lp.feasible) {
        std::int64_t biggest = 0;
        for (auto v : lp.witness->values()) biggest = std::max<std::int64_t>(biggest, v < 0 ? -v : v);
        agree = biggest > oracle_bound;
      }
      json j{{"strict", strict},
             {"bound", oracle_bound},
             {"oracle_feasible", found.has_value()},
             {"lp", to_json(lp)},
             {"agree", agree}};
      if (found) j["oracle_witness"] = found->values();
      std::string text = std::string(agree ? "agree: " : "DISAGREE: ") +
                         (lp.feasible ? "feasible" : "infeasible") +
                         (found ? " (oracle r = " + weights_text(*found) + ")" : "") +
                         (lp.witness ? " (LP r = " + weights_text(*lp.witness) + ")" : "") + "\n";
      emit(j, as_json, text);
      if (!agree) return kConsistencyError;
    } else if (*certify_cmd) {
      HomogeneousPoly f = load_poly(certify_file);
      Certificate c = certificate_from_json(json::parse(slurp(cert_file)));
      StabilityVerdict v = verify_certificate(f, c);
      emit(to_json(v), as_json, verdict_text(v));
    }
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistencyError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
