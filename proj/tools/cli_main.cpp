// Command-line front end: family construction, powers, Betti numbers by
// formula and by oracle, associated-prime chains, witnesses, and the
// verification sweeps. All output is JSON unless stated otherwise.
//
// Exit codes: 0 all checks passed, 1 verification failure, 2 usage or
// guard error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "epow/associated_primes.hpp"
#include "epow/json_io.hpp"
#include "epow/linear_quotients.hpp"
#include "epow/taylor.hpp"
#include "epow/verify.hpp"

namespace {

using epow::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct FamilySpec {
  std::string kind;
  int n = 0;
  int d = 1;
  std::string bound; // v (initial) or u (final)
};

struct FamilyData {
  epow::Graph graph;
  epow::MonomialIdeal ideal;
  bool final_lexsegment = false;
};

FamilyData build_family(const FamilySpec& spec) {
  if (spec.n < 1) throw epow::ArgumentError("--n is required and positive");
  if (spec.kind == "d_path") {
    epow::Graph g = epow::d_path(spec.n, spec.d);
    return {g, epow::edge_ideal(g), false};
  }
  if (spec.kind == "anti_d_path") {
    epow::Graph g = epow::d_path(spec.n, spec.d).complement();
    return {g, epow::edge_ideal(g), false};
  }
  if (spec.kind == "star") {
    epow::Graph g = epow::star_graph(spec.n);
    return {g, epow::edge_ideal(g), false};
  }
  if (spec.kind == "lexseg_init") {
    if (spec.bound.empty()) throw epow::ArgumentError("--v is required");
    epow::MonomialIdeal ideal =
        epow::lexsegment_initial(epow::parse_monomial(spec.bound, spec.n));
    return {epow::graph_of_quadratic_ideal(ideal), ideal, false};
  }
  if (spec.kind == "lexseg_final") {
    if (spec.bound.empty()) throw epow::ArgumentError("--u is required");
    epow::MonomialIdeal ideal =
        epow::lexsegment_final(epow::parse_monomial(spec.bound, spec.n));
    return {epow::graph_of_quadratic_ideal(ideal), ideal, true};
  }
  throw epow::ArgumentError(
      "unknown family kind '" + spec.kind +
      "' (expected d_path, anti_d_path, star, lexseg_init, lexseg_final)");
}

std::vector<epow::Monomial> paper_order(const FamilyData& family,
                                        const epow::MonomialIdeal& power) {
  return family.final_lexsegment ? epow::increasing_revlex_order(power)
                                 : epow::decreasing_lex_order(power);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw epow::ArgumentError("cannot open " + out_path);
    out << text << "\n";
  }
}

void emit_json(const ordered_json& j, const std::string& out_path) {
  emit(j.dump(2), out_path);
}

void add_family_flags(CLI::App* cmd, FamilySpec& spec) {
  cmd->add_option("kind", spec.kind,
                  "family kind: d_path | anti_d_path | star | lexseg_init | "
                  "lexseg_final")
      ->required();
  cmd->add_option("--n", spec.n, "number of variables / vertices")->required();
  cmd->add_option("--d", spec.d, "window width d (path families)");
  cmd->add_option("--v", spec.bound, "initial lexsegment bound, e.g. x1x4");
  cmd->add_option("--u", spec.bound, "final lexsegment bound, e.g. x2x4");
}

std::vector<int> parse_support(const std::string& text) {
  std::vector<int> vars;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) vars.push_back(std::stoi(item));
  return vars;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tools for edge-ideal powers: linear quotients, Betti "
               "numbers, and associated primes"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout")
      ->configurable(false);

  std::optional<std::function<int()>> action;

  // family
  {
    auto* cmd = app.add_subcommand("family", "emit a family graph and its edge ideal");
    auto spec = std::make_shared<FamilySpec>();
    add_family_flags(cmd, *spec);
    cmd->callback([&, spec] {
      action = [&, spec]() {
        FamilyData family = build_family(*spec);
        emit_json({{"graph", epow::json_of(family.graph)},
                   {"ideal", epow::json_of(family.ideal)}},
                  out_path);
        return kExitOk;
      };
    });
  }

  // power
  {
    auto* cmd = app.add_subcommand("power", "minimal generators of a power of the family ideal");
    auto spec = std::make_shared<FamilySpec>();
    auto k = std::make_shared<int>(1);
    add_family_flags(cmd, *spec);
    cmd->add_option("--k", *k, "exponent (k >= 0)");
    cmd->callback([&, spec, k] {
      action = [&, spec, k]() {
        FamilyData family = build_family(*spec);
        emit_json(epow::json_of(family.ideal.power(*k)), out_path);
        return kExitOk;
      };
    });
  }

  // betti
  {
    auto* cmd = app.add_subcommand(
        "betti", "Betti numbers of a power, by linear-quotients formula "
                 "and/or Taylor oracle");
    auto spec = std::make_shared<FamilySpec>();
    auto k = std::make_shared<int>(1);
    auto method = std::make_shared<std::string>("both");
    auto format = std::make_shared<std::string>("json");
    add_family_flags(cmd, *spec);
    cmd->add_option("--k", *k, "power (default 1)");
    cmd->add_option("--method", *method, "formula | oracle | both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    cmd->add_option("--format", *format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->callback([&, spec, k, method, format] {
      action = [&, spec, k, method, format]() {
        FamilyData family = build_family(*spec);
        epow::MonomialIdeal power = family.ideal.power(*k);
        std::optional<epow::BettiTable> formula, oracle;
        if (*method != "oracle")
          formula = epow::betti_from_certificate(
              epow::lq_certificate(paper_order(family, power)));
        if (*method != "formula") oracle = epow::taylor_betti(power);

        const epow::BettiTable& table = formula ? *formula : *oracle;
        if (*format == "csv") {
          emit(epow::betti_csv(table), out_path);
        } else {
          ordered_json j;
          if (formula) j["formula"] = epow::json_of(*formula);
          if (oracle) j["oracle"] = epow::json_of(*oracle);
          if (formula && oracle) j["agree"] = *formula == *oracle;
          emit_json(j, out_path);
        }
        if (formula && oracle && !(*formula == *oracle)) {
          int i = 0;
          while (formula->beta(i) == oracle->beta(i)) ++i;
          std::cerr << "betti disagreement at i=" << i << ": formula "
                    << formula->beta(i) << " vs oracle " << oracle->beta(i)
                    << "\n";
          return kExitVerification;
        }
        return kExitOk;
      };
    });
  }

  // ass
  {
    auto* cmd = app.add_subcommand(
        "ass", "associated primes of the powers I^1..I^K");
    auto spec = std::make_shared<FamilySpec>();
    auto depth = std::make_shared<int>(3);
    add_family_flags(cmd, *spec);
    cmd->add_option("--K", *depth, "chain depth (default 3)");
    cmd->callback([&, spec, depth] {
      action = [&, spec, depth]() {
        FamilyData family = build_family(*spec);
        emit_json(epow::json_of(epow::ass_chain(family.ideal, *depth)),
                  out_path);
        return kExitOk;
      };
    });
  }

  // ntf
  {
    auto* cmd = app.add_subcommand(
        "ntf", "normally-torsion-free verdict (bipartite certificate or "
               "bounded chain)");
    auto spec = std::make_shared<FamilySpec>();
    auto depth = std::make_shared<int>(3);
    add_family_flags(cmd, *spec);
    cmd->add_option("--K", *depth, "chain depth (default 3)");
    cmd->callback([&, spec, depth] {
      action = [&, spec, depth]() {
        FamilyData family = build_family(*spec);
        emit_json(epow::json_of(epow::is_normally_torsion_free(
                      family.ideal, *depth, &family.graph)),
                  out_path);
        return kExitOk;
      };
    });
  }

  // witness
  {
    auto* cmd = app.add_subcommand(
        "witness", "witness monomial for a prime over an anti-d-path power");
    auto n = std::make_shared<int>(0);
    auto d = std::make_shared<int>(1);
    auto k = std::make_shared<int>(2);
    auto support = std::make_shared<std::string>();
    cmd->add_option("--n", *n, "vertices")->required();
    cmd->add_option("--d", *d, "window width");
    cmd->add_option("--k", *k, "power");
    cmd->add_option("--support", *support,
                    "comma-separated variable indices (default all)");
    cmd->callback([&, n, d, k, support] {
      action = [&, n, d, k, support]() {
        epow::MonomialIdeal power =
            epow::edge_ideal(epow::d_path(*n, *d).complement()).power(*k);
        epow::PrimeSupport a =
            support->empty() ? epow::PrimeSupport::full(*n)
                             : epow::PrimeSupport::of(parse_support(*support), *n);
        ordered_json j;
        j["support"] = epow::json_of(a);
        auto found = epow::witness_search(power, a);
        j["witness"] = found ? epow::json_of(*found) : ordered_json(nullptr);
        if (found) j["witness_str"] = found->str();
        if (a == epow::PrimeSupport::full(*n) && *k >= 2 &&
            *d + 2 <= *n - *d - 1 && (*k <= *d + 2 || 2 * *k - 1 <= *n)) {
          epow::Monomial m = epow::theorem_witness(*n, *d, *k);
          j["closed_form_witness"] = epow::json_of(m);
          j["closed_form_witness_str"] = m.str();
        }
        emit_json(j, out_path);
        return kExitOk;
      };
    });
  }

  // verify
  {
    auto* cmd = app.add_subcommand("verify", "run a verification suite");
    auto suite = std::make_shared<std::string>("all");
    auto opts = std::make_shared<epow::VerifyOptions>();
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("suite", *suite, "all | lexseg | antipath | audits")
        ->check(CLI::IsMember({"all", "lexseg", "antipath", "audits"}));
    cmd->add_option("--n-max", opts->n_max, "anti-d-path / initial lexsegment n bound");
    cmd->add_option("--d-max", opts->d_max, "d bound");
    cmd->add_option("--k-max", opts->k_max, "power bound");
    cmd->add_option("--t-max", opts->t_max, "lexsegment power bound");
    cmd->add_option("--final-n-max", opts->lex_final_n_max, "final lexsegment n bound");
    cmd->add_option("--K", opts->chain_depth, "associated-prime chain depth");
    cmd->add_option("--ass-n-max", opts->ass_n_max, "primary decomposition n bound");
    cmd->add_option("--ass-d-max", opts->ass_d_max, "primary decomposition d bound");
    cmd->add_option("--exhaustive-n", opts->exhaustive_n_max,
                    "exhaustive chordality/linear-quotients bound");
    cmd->add_option("--seed", opts->seed, "seed for randomized property checks");
    cmd->add_flag("--json", *as_json, "emit the report as JSON rows");
    cmd->callback([&, suite, opts, as_json] {
      action = [&, suite, opts, as_json]() {
        epow::VerifySuite s = epow::VerifySuite::all;
        if (*suite == "lexseg") s = epow::VerifySuite::lexseg;
        else if (*suite == "antipath") s = epow::VerifySuite::antipath;
        else if (*suite == "audits") s = epow::VerifySuite::audits;
        std::vector<epow::CheckResult> results = epow::run_verify(s, *opts);

        if (*as_json) {
          ordered_json rows = ordered_json::array();
          for (const epow::CheckResult& r : results)
            rows.push_back({{"name", r.name},
                            {"instance", r.instance},
                            {"status", epow::to_string(r.status)},
                            {"detail", r.detail}});
          emit_json({{"suite", *suite},
                     {"rows", std::move(rows)},
                     {"all_passed", epow::all_passed(results)}},
                    out_path);
        } else {
          std::ostringstream text;
          std::size_t failures = 0, discrepancies = 0;
          for (const epow::CheckResult& r : results) {
            if (r.status == epow::CheckStatus::fail) ++failures;
            if (r.status == epow::CheckStatus::discrepancy) ++discrepancies;
            text << "[" << epow::to_string(r.status) << "] " << r.name << " ("
                 << r.instance << ")";
            if (!r.detail.empty()) text << ": " << r.detail;
            text << "\n";
          }
          text << results.size() << " checks, " << failures << " failures, "
               << discrepancies << " documented discrepancies";
          emit(text.str(), out_path);
        }
        return epow::all_passed(results) ? kExitOk : kExitVerification;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    return (*action)();
  } catch (const epow::NotLinearQuotientsError& e) {
    std::cerr << "not linear quotients: " << e.what() << "\n";
    return kExitVerification;
  } catch (const epow::ArgumentError& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const epow::DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const epow::ResourceError& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}
