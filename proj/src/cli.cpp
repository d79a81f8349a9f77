#include "carpet/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "carpet/classification.hpp"
#include "carpet/errors.hpp"
#include "carpet/extendability.hpp"
#include "carpet/output.hpp"
#include "carpet/repro.hpp"
#include "carpet/scan.hpp"

namespace carpet::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kIndeterminate = 3;

Span parse_span_text(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long long v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidQuery("cannot parse range '" + text + "' (expected N or LO..HI)");
  }
}

void emit(std::ostream& out, const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream stream(out_path, std::ios::binary | std::ios::trunc);
  if (!stream) throw std::runtime_error("cannot open " + out_path);
  stream << text;
}

std::string verdict_word(const ExtendabilityVerdict& v) {
  return v.extendable == ExtendabilityVerdict::Extendable::No ? "NOT extendable"
                                                              : "extendability unknown";
}

// ------------------------------------------------------------- subcommands

struct CohArgs {
  int e = 0;
  long long a = 0;
  long long b = 0;
  std::string tangent;  // "", "-H", "-H+K", "L"
  std::string format = "text";
  std::string out_path;
  bool demand_exact = false;
};

int run_coh(const CohArgs& args, std::ostream& out) {
  const HirzebruchSurface s(args.e);
  const DivisorClass given{args.a, args.b};

  IntRange h0, h1, h2;
  bool exact = true;
  std::vector<std::string> anchors;
  std::string suffix;

  if (args.tangent.empty()) {
    const CohomologyDims dims = cohomology(given, s);
    h0 = dims.h0;
    h1 = dims.h1;
    h2 = dims.h2;
    anchors = {"Leray along the ruling: h0 = h0(p_*), h1 = h1(p_*)+h0(R1p_*), h2 = h1(R1p_*)"};
  } else {
    DivisorClass twist;
    if (args.tangent == "-H")
      twist = -given;
    else if (args.tangent == "-H+K")
      twist = canonical_class(s) - given;
    else if (args.tangent == "L")
      twist = given;
    else
      throw InvalidQuery("--tangent must be one of -H, -H+K, L");
    const DimResult t = tangent_cohomology(twist, s);
    h0 = t.h0();
    h1 = t.h1();
    h2 = t.h2();
    exact = t.exact();
    anchors = {"T filters as 0 -> 2C0+ef -> T -> 2f -> 0; connecting ranks in [0," +
               t.rank0_range().hi.str() + "] and [0," + t.rank1_range().hi.str() + "]"};
    suffix = exact ? " exact" : " interval (connecting ranks unresolved)";
  }

  if (args.format == "json") {
    emit(out, args.out_path,
         cohomology_json(args.e, given.a, given.b, h0, h1, h2, exact, anchors).dump(2) + "\n");
  } else {
    emit(out, args.out_path,
         "h = (" + to_string(h0) + ", " + to_string(h1) + ", " + to_string(h2) + ")" +
             suffix + "\n");
  }
  if (args.demand_exact && !exact) return kIndeterminate;
  return kOk;
}

struct PointArgs {
  int e = 0;
  long long a = 2;
  long long b = 0;
  long long k = 2;
  std::string format = "text";
  std::string out_path;
  bool demand_exact = false;
};

int run_alpha(const PointArgs& args, std::ostream& out) {
  const CarpetAnalysis analysis = analyze_carpet(args.a, args.b, args.e);
  const CarpetParams& p = analysis.params;

  if (args.format == "json") {
    nlohmann::json doc{{"e", args.e},
                       {"a", args.a},
                       {"b", args.b},
                       {"r", json_int(p.r)},
                       {"g", json_int(p.g)},
                       {"M", json_int(p.M)},
                       {"N", json_int(p.N)},
                       {"prime", p.prime},
                       {"alpha", json_range(analysis.bound.value)},
                       {"exact", analysis.bound.value.exact()},
                       {"h0_N_minus_2H", json_range(analysis.verdict.h0_normal_minus2)},
                       {"verdict", analysis.verdict.extendable ==
                                           ExtendabilityVerdict::Extendable::No
                                       ? "not-extendable"
                                       : "unknown"},
                       {"anchors", analysis.bound.anchors},
                       {"reasons", analysis.verdict.reasons}};
    if (analysis.verdict.k_extendability_ceiling)
      doc["k_extendability_ceiling"] = json_int(*analysis.verdict.k_extendability_ceiling);
    emit(out, args.out_path, doc.dump(2) + "\n");
    return kOk;
  }

  std::ostringstream text;
  text << "alpha <= " << to_string(analysis.bound.value) << "; (r,g)=(" << p.r << "," << p.g
       << "); " << verdict_word(analysis.verdict) << " ["
       << join(analysis.bound.anchors, "; ") << "]\n";
  text << "carpet: a=" << p.a << " b=" << p.b << " e=" << p.e << " H^2=" << p.Hsq
       << " M=" << p.M << " N=" << p.N << (p.prime ? " prime" : " non-prime") << "\n";
  text << "h0(N(-2H)) <= " << to_string(analysis.verdict.h0_normal_minus2) << " ["
       << five_term_anchor() << "]\n";
  if (analysis.verdict.k_extendability_ceiling)
    text << "not k-extendable for any k >= " << *analysis.verdict.k_extendability_ceiling
         << "\n";
  for (const std::string& reason : analysis.verdict.reasons) text << "  - " << reason << "\n";
  emit(out, args.out_path, text.str());
  return kOk;
}

int run_beta(const PointArgs& args, std::ostream& out) {
  const CarpetParams p = carpet_params(args.a, args.b, args.e);
  const AlphaBound bound = beta_bound(args.a, args.b, args.e);
  if (args.format == "json") {
    nlohmann::json doc{{"e", args.e},        {"a", args.a},
                       {"b", args.b},        {"r", json_int(p.r)},
                       {"g", json_int(p.g)}, {"beta", json_range(bound.value)},
                       {"exact", bound.value.exact()}, {"anchors", bound.anchors}};
    emit(out, args.out_path, doc.dump(2) + "\n");
  } else {
    emit(out, args.out_path,
         "beta = " + to_string(bound.value) + "; (r,g)=(" + p.r.str() + "," + p.g.str() +
             ") [" + join(bound.anchors, "; ") + "]\n");
  }
  if (args.demand_exact && !bound.value.exact()) return kIndeterminate;
  return kOk;
}

int run_gamma(const PointArgs& args, std::ostream& out) {
  if (args.a != 2) throw InvalidQuery("gamma is defined for a = 2 only");
  const CarpetParams p = carpet_params(2, args.b, args.e);
  const AlphaBound bound = gamma_bound(args.b, args.e);
  if (args.format == "json") {
    nlohmann::json doc{{"e", args.e},
                       {"a", 2},
                       {"b", args.b},
                       {"r", json_int(p.r)},
                       {"g", json_int(p.g)},
                       {"gamma", json_range(bound.value)},
                       {"exact", bound.value.exact()},
                       {"special_correction", bound.special_correction},
                       {"anchors", bound.anchors}};
    emit(out, args.out_path, doc.dump(2) + "\n");
  } else {
    emit(out, args.out_path,
         "gamma = " + to_string(bound.value) + "; (r,g)=(" + p.r.str() + "," + p.g.str() +
             ")" + (bound.special_correction ? " (+1 obstruction correction)" : "") + " [" +
             join(bound.anchors, "; ") + "]\n");
  }
  return kOk;
}

int run_normal_bound(const PointArgs& args, std::ostream& out) {
  const IntRange bound = h0_normal_minus_k(args.a, args.b, args.e, args.k);
  if (args.format == "json") {
    nlohmann::json doc{{"e", args.e},
                       {"a", args.a},
                       {"b", args.b},
                       {"k", args.k},
                       {"bound", json_range(bound)},
                       {"exact", bound.exact()},
                       {"anchors", nlohmann::json::array({five_term_anchor()})}};
    emit(out, args.out_path, doc.dump(2) + "\n");
  } else {
    emit(out, args.out_path,
         "h0(N(-" + std::to_string(args.k) + "H)) <= " + bound.hi.str() + " [" +
             five_term_anchor() + "]\n");
  }
  if (args.demand_exact && !bound.exact()) return kIndeterminate;
  return kOk;
}

struct ClassifyArgs {
  long long n = 5;
  long long r = 2;
  long long g = 3;
  std::string format = "text";
  std::string out_path;
};

int run_classify(const ClassifyArgs& args, bool mukai, std::ostream& out) {
  const ClassificationRecord rec =
      mukai ? classify_mukai({Int(args.n), Int(args.r), Int(args.g)})
            : classify_fano({Int(args.r), Int(args.g)});

  if (args.format == "json") {
    nlohmann::json doc{{"kind", mukai ? "mukai" : "fano"},
                       {"r", args.r},
                       {"g", args.g},
                       {"status", rec.status == FamilyStatus::Empty ? "empty"
                                                                    : "nonempty-irreducible"},
                       {"reason", rec.reason},
                       {"anchors", rec.anchors}};
    if (mukai) doc["n"] = args.n;
    if (rec.alpha)
      doc["alpha"] = {{"value", json_int(rec.alpha->value)}, {"exact", rec.alpha->is_exact}};
    if (rec.tangent_dim_at_cone) doc["tangent_dim"] = json_int(*rec.tangent_dim_at_cone);
    if (rec.unique_fano_through_general_k3)
      doc["unique_fano"] = *rec.unique_fano_through_general_k3;
    emit(out, args.out_path, doc.dump(2) + "\n");
    return kOk;
  }

  std::ostringstream text;
  if (rec.status == FamilyStatus::Empty) {
    text << "EMPTY: " << rec.reason << " [" << join(rec.anchors, "; ") << "]\n";
  } else {
    text << "nonempty irreducible";
    if (rec.alpha)
      text << "; alpha " << (rec.alpha->is_exact ? "= " : "<= ") << rec.alpha->value;
    if (rec.tangent_dim_at_cone)
      text << "; dim T at " << (mukai ? "triple cone" : "cone") << " = "
           << *rec.tangent_dim_at_cone;
    if (rec.unique_fano_through_general_k3.value_or(false))
      text << "; unique Fano through the general K3";
    text << " [" << join(rec.anchors, "; ") << "]\n";
  }
  emit(out, args.out_path, text.str());
  return kOk;
}

struct ScanArgs {
  std::string manifest_path;
  std::string compute = "beta";
  std::string e = "0";
  std::string a = "2";
  std::string b = "2..12";
  std::string n = "4..8";
  std::string r = "2..6";
  std::string g = "3..12";
  long long k = 2;
  std::string format = "csv";
  std::string out_path;
};

int run_scan_cmd(const ScanArgs& args, std::ostream& out) {
  ScanManifest manifest;
  if (!args.manifest_path.empty()) {
    std::ifstream stream(args.manifest_path);
    if (!stream) throw InvalidQuery("cannot read manifest " + args.manifest_path);
    std::stringstream buffer;
    buffer << stream.rdbuf();
    manifest = parse_manifest_json(buffer.str());
  } else {
    nlohmann::json doc{{"compute", args.compute}, {"k", args.k}, {"format", args.format}};
    manifest = parse_manifest_json(doc.dump());
    manifest.e = parse_span_text(args.e);
    manifest.a = parse_span_text(args.a);
    manifest.b = parse_span_text(args.b);
    manifest.n = parse_span_text(args.n);
    manifest.r = parse_span_text(args.r);
    manifest.g = parse_span_text(args.g);
    manifest.out_path = args.out_path;
  }

  const unsigned workers = default_workers();
  if (manifest.out_path.empty()) {
    out << run_scan(manifest, workers);
  } else {
    write_scan_file(manifest, workers);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact sheaf-cohomology and extendability calculus for K3 carpets on "
               "Hirzebruch surfaces"};
  app.require_subcommand(1);
  int exit_code = kOk;

  CohArgs coh;
  CLI::App* coh_cmd = app.add_subcommand("coh", "h^i of a line bundle or twisted tangent");
  coh_cmd->add_option("--e", coh.e, "Hirzebruch invariant e")->required();
  coh_cmd->add_option("--a", coh.a, "C0 coefficient")->required();
  coh_cmd->add_option("--b", coh.b, "fiber coefficient")->required();
  coh_cmd->add_option("--tangent", coh.tangent, "tangent twist: -H, -H+K, or L");
  coh_cmd->add_option("--format", coh.format, "text or json");
  coh_cmd->add_option("--out", coh.out_path, "output file");
  coh_cmd->add_flag("--exact", coh.demand_exact, "exit 3 unless the result is exact");
  coh_cmd->callback([&] { exit_code = run_coh(coh, out); });

  auto add_point_options = [](CLI::App* cmd, PointArgs& dest, bool with_k) {
    cmd->add_option("--e", dest.e)->required();
    cmd->add_option("--a", dest.a);
    cmd->add_option("--b", dest.b)->required();
    if (with_k) cmd->add_option("--k", dest.k);
    cmd->add_option("--format", dest.format);
    cmd->add_option("--out", dest.out_path);
    cmd->add_flag("--exact", dest.demand_exact);
  };

  PointArgs alpha_args;
  CLI::App* alpha_cmd = app.add_subcommand("alpha", "alpha upper bound + verdict");
  add_point_options(alpha_cmd, alpha_args, false);
  alpha_cmd->get_option("--a")->required();
  alpha_cmd->callback([&] { exit_code = run_alpha(alpha_args, out); });

  PointArgs beta_args;
  CLI::App* beta_cmd = app.add_subcommand("beta", "beta estimator");
  add_point_options(beta_cmd, beta_args, false);
  beta_cmd->get_option("--a")->required();
  beta_cmd->callback([&] { exit_code = run_beta(beta_args, out); });

  PointArgs gamma_args;
  CLI::App* gamma_cmd = app.add_subcommand("gamma", "gamma estimator (a = 2)");
  add_point_options(gamma_cmd, gamma_args, false);
  gamma_cmd->callback([&] { exit_code = run_gamma(gamma_args, out); });

  PointArgs normal_args;
  CLI::App* normal_cmd =
      app.add_subcommand("normal-bound", "five-term bound for h0(N(-kH)), k >= 2");
  add_point_options(normal_cmd, normal_args, true);
  normal_cmd->get_option("--a")->required();
  normal_cmd->callback([&] { exit_code = run_normal_bound(normal_args, out); });

  ClassifyArgs classify_args;
  CLI::App* classify_cmd = app.add_subcommand("classify", "Fano / Mukai family verdicts");
  classify_cmd->require_subcommand(1);
  CLI::App* fano_cmd = classify_cmd->add_subcommand("fano", "Fano threefolds of index r");
  fano_cmd->add_option("--r", classify_args.r)->required();
  fano_cmd->add_option("--g", classify_args.g)->required();
  fano_cmd->add_option("--format", classify_args.format);
  fano_cmd->add_option("--out", classify_args.out_path);
  fano_cmd->callback([&] { exit_code = run_classify(classify_args, false, out); });
  CLI::App* mukai_cmd = classify_cmd->add_subcommand("mukai", "Mukai n-folds, n >= 4");
  mukai_cmd->add_option("--n", classify_args.n)->required();
  mukai_cmd->add_option("--r", classify_args.r)->required();
  mukai_cmd->add_option("--g", classify_args.g)->required();
  mukai_cmd->add_option("--format", classify_args.format);
  mukai_cmd->add_option("--out", classify_args.out_path);
  mukai_cmd->callback([&] { exit_code = run_classify(classify_args, true, out); });

  ScanArgs scan_args;
  CLI::App* scan_cmd = app.add_subcommand("scan", "deterministic parameter-grid scan");
  scan_cmd->add_option("--manifest", scan_args.manifest_path, "manifest JSON file");
  scan_cmd->add_option("--compute", scan_args.compute,
                       "cohomology | beta | alpha | normal-k | classify-fano | classify-mukai");
  scan_cmd->add_option("--e", scan_args.e, "range, e.g. 0..2");
  scan_cmd->add_option("--a", scan_args.a, "range");
  scan_cmd->add_option("--b", scan_args.b, "range");
  scan_cmd->add_option("--n", scan_args.n, "range (mukai)");
  scan_cmd->add_option("--r", scan_args.r, "range (classify)");
  scan_cmd->add_option("--g", scan_args.g, "range (classify)");
  scan_cmd->add_option("--k", scan_args.k, "twist for normal-k");
  scan_cmd->add_option("--format", scan_args.format, "text | json | csv");
  scan_cmd->add_option("--out", scan_args.out_path, "output file (written atomically)");
  scan_cmd->callback([&] { exit_code = run_scan_cmd(scan_args, out); });

  CLI::App* verify_cmd =
      app.add_subcommand("verify-paper", "run every pinned claim and report pass/fail");
  verify_cmd->callback([&] {
    const std::vector<CriterionResult> results = run_acceptance_suite();
    print_claim_report(results, out);
    exit_code = suite_passes(results) ? kOk : kVerifyFailed;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& parse_error) {
    err << "error: " << parse_error.what() << "\n";
    return kBadInput;
  } catch (const NoRuleApplies& no_rule) {
    err << "indeterminate: " << no_rule.what() << "\n";
    return kIndeterminate;
  } catch (const UnsupportedA& unsupported) {
    err << "indeterminate: " << unsupported.what() << "\n";
    return kIndeterminate;
  } catch (const NotVeryAmple& nva) {
    err << "error: " << nva.what() << "\n";
    return kBadInput;
  } catch (const InvalidQuery& invalid) {
    err << "error: " << invalid.what() << "\n";
    return kBadInput;
  } catch (const PreconditionFailed& pre) {
    err << "error: " << pre.what() << "\n";
    return kBadInput;
  } catch (const std::exception& unexpected) {
    err << "internal error: " << unexpected.what() << "\n";
    return kBadInput;
  }
  return exit_code;
}

}  // namespace carpet::cli
