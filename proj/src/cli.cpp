#include "mirrormap/cli.hpp"

#include <CLI11.hpp>

#include <exception>
#include <map>
#include <sstream>

#include "mirrormap/errors.hpp"
#include "mirrormap/json_io.hpp"
#include "mirrormap/padic.hpp"
#include "mirrormap/verify.hpp"

namespace mirrormap::cli {

namespace {

using json_io::json;

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;

struct CommonOptions {
  std::string e_csv, f_csv;
  std::size_t order = 60;
  long prime_bound = 30;
  int threads = 1;
  bool as_json = false;
  bool lax = false;
  std::vector<long> l_values;
};

FactorialRatioSpec parse_spec(const CommonOptions& opt) {
  FactorialRatioSpec spec = FactorialRatioSpec::parse(opt.e_csv, opt.f_csv);
  if (!spec.nonempty() || !spec.all_positive())
    throw CLI::ValidationError("-e/-f must be non-empty lists of positive integers");
  if (!opt.lax && (!spec.disjoint() || !spec.weight_balanced()))
    throw CLI::ValidationError(
        "spec must be disjoint with |e| = |f| (use --lax to override): " + spec.str());
  return spec;
}

void add_spec_flags(CLI::App* cmd, CommonOptions& opt, bool required = true) {
  auto* e = cmd->add_option("-e", opt.e_csv, "e entries, comma separated");
  auto* f = cmd->add_option("-f", opt.f_csv, "f entries, comma separated");
  if (required) {
    e->required();
    f->required();
  }
}

void add_shared_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--order", opt.order, "series truncation order");
  cmd->add_option("--prime-bound", opt.prime_bound, "scan primes up to this bound");
  cmd->add_option("--threads", opt.threads, "worker threads (default sequential)");
  cmd->add_flag("--json", opt.as_json, "emit JSON");
  cmd->add_flag("--lax", opt.lax, "skip disjointness/balance validation");
}

std::string witness_kind_name(search::WitnessKind kind) {
  switch (kind) {
    case search::WitnessKind::phi_at_a: return "Phi_at_a";
    case search::WitnessKind::phi_l_at_a: return "PhiL_at_a";
    case search::WitnessKind::phi_l_at_a_plus_p: return "PhiL_at_a_plus_p";
  }
  return "?";
}

int cmd_classify(const CommonOptions& opt, std::ostream& out) {
  const FactorialRatioSpec spec = parse_spec(opt);
  const auto cls = landau::classify(spec, !opt.lax);
  const auto prof = landau::profile(spec);
  const bool monotone = landau::is_monotone_on_unit(spec);
  if (opt.as_json) {
    json j{{"M", prof.big_m},
           {"classification", json_io::classification_json(cls)},
           {"monotone", monotone},
           {"profile", json_io::profile_json(prof)},
           {"spec", json_io::spec_json(spec)}};
    out << j.dump() << "\n";
    return exit_ok;
  }
  out << spec.str() << "\n";
  out << "M = " << prof.big_m << "\n";
  out << "classification: " << landau::case_tag_name(cls.tag);
  if (cls.witness) out << "  (witness x = " << rat_str(*cls.witness) << ")";
  out << "\n";
  out << "monotone on [0,1): " << (monotone ? "yes" : "no") << "\n";
  out << "profile (gamma, amplitude, plateau):\n";
  for (std::size_t k = 0; k < prof.breakpoints.size(); ++k)
    out << "  " << rat_str(prof.breakpoints[k]) << "  " << prof.amplitudes[k] << "  "
        << prof.plateaus[k + 1] << "\n";
  return exit_ok;
}

int cmd_profile(const CommonOptions& opt, std::ostream& out) {
  const FactorialRatioSpec spec = parse_spec(opt);
  const auto prof = landau::profile(spec);
  if (opt.as_json) {
    json j{{"profile", json_io::profile_json(prof)}, {"spec", json_io::spec_json(spec)}};
    json psi = json::array();
    for (const Rat& g : prof.breakpoints)
      psi.push_back(rat_str(landau::psi_at(spec, g)));
    j["psi_at_breakpoints"] = psi;
    out << j.dump() << "\n";
    return exit_ok;
  }
  out << spec.str() << "  M = " << prof.big_m << "\n";
  out << "gamma  amplitude  plateau  psi\n";
  for (std::size_t k = 0; k < prof.breakpoints.size(); ++k)
    out << rat_str(prof.breakpoints[k]) << "  " << prof.amplitudes[k] << "  "
        << prof.plateaus[k + 1] << "  "
        << rat_str(landau::psi_at(spec, prof.breakpoints[k])) << "\n";
  return exit_ok;
}

int cmd_series(const CommonOptions& opt, std::ostream& out) {
  const FactorialRatioSpec spec = parse_spec(opt);
  const auto bundle = mirror::build_bundle(spec, opt.order);
  for (long l : opt.l_values)
    if (l < 1 || l > spec.big_m())
      throw CLI::ValidationError("-L must lie in 1..M");
  if (opt.as_json) {
    json j{{"F", json_io::series_json(bundle.f_series)},
           {"G", json_io::series_json(bundle.g_series)},
           {"order", opt.order},
           {"q", json_io::series_json(bundle.q)},
           {"spec", json_io::spec_json(spec)}};
    json ql = json::object();
    for (long l : opt.l_values)
      ql[std::to_string(l)] = json_io::series_json(bundle.q_l[static_cast<std::size_t>(l - 1)]);
    j["q_L"] = ql;
    out << j.dump() << "\n";
    return exit_ok;
  }
  out << spec.str() << "  order " << opt.order << "\n";
  out << "F: " << json_io::series_json(bundle.f_series).dump() << "\n";
  out << "G: " << json_io::series_json(bundle.g_series).dump() << "\n";
  out << "q: " << json_io::series_json(bundle.q).dump() << "\n";
  for (long l : opt.l_values)
    out << "q_" << l << ": "
        << json_io::series_json(bundle.q_l[static_cast<std::size_t>(l - 1)]).dump() << "\n";
  return exit_ok;
}

int cmd_primes(const CommonOptions& opt, std::ostream& out) {
  const FactorialRatioSpec spec = parse_spec(opt);
  const auto bundle = mirror::build_bundle(spec, opt.order);
  const TruncatedSeries* target = &bundle.q;
  std::string label = "q";
  if (!opt.l_values.empty()) {
    const long l = opt.l_values.front();
    if (l < 1 || l > spec.big_m()) throw CLI::ValidationError("-L must lie in 1..M");
    target = &bundle.q_l[static_cast<std::size_t>(l - 1)];
    label = "q_" + std::to_string(l);
  }
  auto exact = mirror::integrality_report(*target, opt.prime_bound,
                                          mirror::ReportMode::exact, opt.threads);
  auto per_prime = mirror::integrality_report(*target, opt.prime_bound,
                                              mirror::ReportMode::per_prime, opt.threads);
  if (opt.as_json) {
    json j{{"non_integer_indices", exact.non_integer_indices},
           {"per_prime", json_io::integrality_json(per_prime)["per_prime"]},
           {"series", label},
           {"spec", json_io::spec_json(spec)}};
    out << j.dump() << "\n";
    return exit_ok;
  }
  out << spec.str() << "  series " << label << " to order " << opt.order << "\n";
  if (exact.non_integer_indices.empty())
    out << "all coefficients integral\n";
  else {
    out << "non-integer coefficient indices:";
    for (auto i : exact.non_integer_indices) out << " " << i;
    out << "\n";
  }
  for (const auto& finding : per_prime.per_prime) {
    out << "p = " << finding.p << ": ";
    if (finding.least_bad_index)
      out << "least index with negative valuation " << *finding.least_bad_index << "\n";
    else
      out << "none up to " << opt.order << "\n";
  }
  return exit_ok;
}

int cmd_convert(const CommonOptions& opt, const std::string& alphas_csv,
                const std::string& betas_csv, const std::string& constant,
                std::ostream& out) {
  if (!opt.e_csv.empty()) {
    FactorialRatioSpec spec = FactorialRatioSpec::parse(opt.e_csv, opt.f_csv);
    if (!spec.all_positive() || spec.e.empty())
      throw CLI::ValidationError("invalid spec");
    const auto form = hypergeom::to_hypergeometric(spec);
    // q1 q2 = 0 or r s = 0 falls outside the stated proposition; the formulas
    // still apply and the output flags it.
    const bool extension =
        spec.f.empty() || form.alphas.empty() || form.betas.empty();
    if (opt.as_json) {
      json j = json_io::form_json(form);
      j["extension"] = extension;
      j["spec"] = json_io::spec_json(spec);
      out << j.dump() << "\n";
    } else {
      out << json_io::form_json(form).dump() << (extension ? "  (extension)" : "")
          << "\n";
    }
    return exit_ok;
  }
  hypergeom::HypergeometricForm form;
  std::stringstream sa(alphas_csv), sb(betas_csv);
  std::string item;
  while (std::getline(sa, item, ','))
    if (!item.empty()) form.alphas.push_back(parse_rat(item));
  while (std::getline(sb, item, ','))
    if (!item.empty()) form.betas.push_back(parse_rat(item));
  form.constant_c = constant.empty() ? Rat(1) : parse_rat(constant);
  const FactorialRatioSpec spec = hypergeom::to_factorial(form);
  if (opt.as_json) {
    json j{{"form", json_io::form_json(form)}, {"spec", json_io::spec_json(spec)}};
    out << j.dump() << "\n";
  } else {
    out << spec.str() << "\n";
  }
  return exit_ok;
}

int cmd_verify_dwork(const CommonOptions& opt, const std::string& grid_text,
                     std::ostream& out) {
  const FactorialRatioSpec spec = parse_spec(opt);
  dwork::Grid grid;
  if (!grid_text.empty()) {
    std::stringstream ss(grid_text);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw CLI::ValidationError("--grid wants k=v pairs");
      const std::string key = kv.substr(0, eq);
      const long value = std::stol(kv.substr(eq + 1));
      if (key == "s") grid.s_max = value;
      else if (key == "m") grid.m_max = value;
      else if (key == "r") grid.r_max = value;
      else if (key == "K") grid.k_max = value;
      else if (key == "A") grid.max_argument = value;
      else throw CLI::ValidationError("unknown --grid key: " + key);
    }
  }
  bool all_ok = true;
  json per_prime = json::array();
  for (long p : primes_up_to(opt.prime_bound)) {
    const auto couple = dwork::concrete_couple(spec, p);
    const auto hyp = dwork::check_hypotheses(couple, grid, opt.threads);
    const auto conc = dwork::check_conclusion(couple, grid, opt.threads);
    all_ok = all_ok && hyp.empty() && conc.empty();
    if (opt.as_json) {
      per_prime.push_back(json{{"conclusion", json_io::dwork_report_json(conc)},
                               {"hypotheses", json_io::dwork_report_json(hyp)},
                               {"k0", couple.k0},
                               {"p", p}});
    } else {
      out << "p = " << p << " (k0 = " << couple.k0 << "): hypotheses "
          << (hyp.empty() ? "ok" : "VIOLATED") << " (" << hyp.checks << " checks, "
          << hyp.skipped << " skipped), conclusion "
          << (conc.empty() ? "ok" : "VIOLATED") << " (" << conc.checks << " checks, "
          << conc.skipped << " skipped)\n";
      for (const auto& v : hyp.violations) {
        out << "  hypothesis " << dwork::condition_name(v.condition) << " at (";
        for (std::size_t i = 0; i < v.params.size(); ++i)
          out << (i ? "," : "") << v.params[i];
        out << "): vp = " << v.observed_valuation << " < " << v.required_valuation
            << "\n";
      }
    }
  }
  if (opt.as_json) {
    json j{{"ok", all_ok}, {"results", per_prime}, {"spec", json_io::spec_json(spec)}};
    out << j.dump() << "\n";
  }
  return all_ok ? exit_ok : exit_verification_failure;
}

int cmd_verify_lemmas(const CommonOptions& opt, std::ostream& out) {
  const FactorialRatioSpec spec = parse_spec(opt);
  verify::SuiteConfig cfg;
  cfg.primes = primes_up_to(opt.prime_bound);
  const auto lemma_report = verify::run_lemma_suite(spec, cfg, opt.threads);
  const auto arith_report = verify::run_arithmetic_suite(cfg, opt.threads);
  const bool ok = lemma_report.ok() && arith_report.ok();
  if (opt.as_json) {
    json j{{"arithmetic", json_io::suite_json(arith_report)},
           {"lemmas", json_io::suite_json(lemma_report)},
           {"ok", ok},
           {"spec", json_io::spec_json(spec)}};
    out << j.dump() << "\n";
  } else {
    out << spec.str() << ": " << lemma_report.checks + arith_report.checks
        << " checks, " << lemma_report.skipped + arith_report.skipped << " skipped, "
        << lemma_report.failures.size() + arith_report.failures.size() << " failures\n";
    for (const auto* rep : {&lemma_report, &arith_report})
      for (const auto& f : rep->failures) {
        out << "  FAIL " << f.lemma << " " << f.spec << " (";
        for (std::size_t i = 0; i < f.params.size(); ++i)
          out << (i ? "," : "") << f.params[i];
        out << ")\n";
      }
  }
  return ok ? exit_ok : exit_verification_failure;
}

int cmd_scan(const CommonOptions& opt, long max_terms, long max_entry, bool with_primes,
             std::ostream& out) {
  search::ScanConfig cfg{max_terms, max_entry, opt.order, opt.prime_bound};
  const auto entries = search::scan_specs(cfg, opt.threads);
  for (const auto& entry : entries) {
    json j{{"classification", json_io::classification_json(entry.classification)},
           {"spec", json_io::spec_json(entry.spec)}};
    j["monotone"] = landau::is_monotone_on_unit(entry.spec);
    const auto eq = hypergeom::equivalence_check(entry.spec);
    j["equivalence"] = json{{"all_betas_one", eq.all_betas_one},
                            {"monotone", eq.monotone},
                            {"zudilin_form", eq.zudilin_form}};
    const bool integral = entry.classification.tag == landau::CaseTag::case_i ||
                          entry.classification.tag == landau::CaseTag::case_ii;
    if (with_primes && integral) {
      json bad = json::array();
      for (const auto& [p, idx] :
           search::find_bad_primes(entry.spec, opt.prime_bound, opt.order, opt.threads))
        bad.push_back(json{{"least_bad_index", idx}, {"p", p}});
      j["bad_primes"] = bad;
    }
    out << j.dump() << "\n";
  }
  return exit_ok;
}

int cmd_counterexample(const CommonOptions& opt, std::ostream& out) {
  const auto values = padic::naive_dwork_counterexample();
  const bool confirmed = values.lhs_valuation == -4 && values.rhs_valuation == -3 &&
                         values.lhs_valuation < values.rhs_valuation;
  if (opt.as_json) {
    json j{{"confirmed", confirmed},
           {"lhs_valuation", values.lhs_valuation},
           {"rhs_valuation", values.rhs_valuation}};
    out << j.dump() << "\n";
  } else {
    out << "e=(10,5) f=(4,4,3,2,1,1), p = 3\n";
    out << "v_3( H_30 (Q(16)/Q(7) - Q(5)/Q(2)) ) = " << values.lhs_valuation << "\n";
    out << "v_3( 1/Q(7) ) = " << values.rhs_valuation << "\n";
    out << "status: " << (confirmed ? "CONFIRMED" : "MISMATCH") << "\n";
  }
  return confirmed ? exit_ok : exit_verification_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact integrality analysis of factorial-ratio mirror maps"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string alphas_csv, betas_csv, constant, grid_text;
  long max_terms = 5, max_entry = 6;
  bool with_primes = false;

  auto* classify = app.add_subcommand("classify", "Landau dichotomy for a spec");
  add_spec_flags(classify, opt);
  add_shared_flags(classify, opt);

  auto* profile = app.add_subcommand("profile", "breakpoints, amplitudes, plateaus");
  add_spec_flags(profile, opt);
  add_shared_flags(profile, opt);

  auto* series = app.add_subcommand("series", "F, G, q and q_L to a given order");
  add_spec_flags(series, opt);
  add_shared_flags(series, opt);
  series->add_option("-L", opt.l_values, "emit q_L for these L");

  auto* primes = app.add_subcommand("primes", "integrality report for q (or q_L)");
  add_spec_flags(primes, opt);
  add_shared_flags(primes, opt);
  primes->add_option("-L", opt.l_values, "inspect q_L instead of q");

  auto* convert = app.add_subcommand("convert", "factorial <-> Pochhammer form");
  add_spec_flags(convert, opt, /*required=*/false);
  add_shared_flags(convert, opt);
  convert->add_option("--alphas", alphas_csv, "alpha multiset, comma separated");
  convert->add_option("--betas", betas_csv, "beta multiset, comma separated");
  convert->add_option("--constant", constant, "the constant C");

  auto* verify_dwork = app.add_subcommand("verify-dwork", "hypotheses and conclusion "
                                                          "of the congruence theorem");
  add_spec_flags(verify_dwork, opt);
  add_shared_flags(verify_dwork, opt);
  verify_dwork->add_option("--grid", grid_text, "bounds, e.g. s=2,m=6,r=2,K=30,A=200000");

  auto* verify_lemmas = app.add_subcommand("verify-lemmas", "statement-level lemma suite");
  add_spec_flags(verify_lemmas, opt);
  add_shared_flags(verify_lemmas, opt);

  auto* scan = app.add_subcommand("scan", "enumerate and classify small specs");
  add_shared_flags(scan, opt);
  scan->add_option("--max-terms", max_terms, "bound on q1+q2");
  scan->add_option("--max-entry", max_entry, "bound on entries");
  scan->add_flag("--scan-primes", with_primes, "also scan q for bad primes");

  auto* counterexample =
      app.add_subcommand("counterexample", "the plain-Dwork failure witness");
  add_shared_flags(counterexample, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (classify->parsed()) return cmd_classify(opt, out);
    if (profile->parsed()) return cmd_profile(opt, out);
    if (series->parsed()) return cmd_series(opt, out);
    if (primes->parsed()) return cmd_primes(opt, out);
    if (convert->parsed()) return cmd_convert(opt, alphas_csv, betas_csv, constant, out);
    if (verify_dwork->parsed()) return cmd_verify_dwork(opt, grid_text, out);
    if (verify_lemmas->parsed()) return cmd_verify_lemmas(opt, out);
    if (scan->parsed()) return cmd_scan(opt, max_terms, max_entry, with_primes, out);
    if (counterexample->parsed()) return cmd_counterexample(opt, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return exit_usage;
  } catch (const NotRPartitionable& e) {
    err << e.what() << "\n";
    return exit_usage;
  } catch (const ConstantMismatch& e) {
    err << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_verification_failure;
  }
  err << "no subcommand\n";
  return exit_usage;
}

}  // namespace mirrormap::cli
