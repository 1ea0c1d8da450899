#include "mirrormap/json_io.hpp"

namespace mirrormap::json_io {

json spec_json(const FactorialRatioSpec& spec) {
  return json{{"e", spec.e}, {"f", spec.f}};
}

json series_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (std::size_t i = 0; i <= s.order(); ++i) arr.push_back(rat_str(s[i]));
  return arr;
}

TruncatedSeries series_from_json(const json& j) {
  std::vector<Rat> coeffs;
  for (const auto& item : j) coeffs.push_back(parse_rat(item.get<std::string>()));
  return TruncatedSeries(std::move(coeffs));
}

json form_json(const hypergeom::HypergeometricForm& form) {
  json alphas = json::array(), betas = json::array();
  for (const Rat& a : form.alphas) alphas.push_back(rat_str(a));
  for (const Rat& b : form.betas) betas.push_back(rat_str(b));
  return json{{"C", rat_str(form.constant_c)}, {"alphas", alphas}, {"betas", betas}};
}

hypergeom::HypergeometricForm form_from_json(const json& j) {
  hypergeom::HypergeometricForm form;
  for (const auto& a : j.at("alphas")) form.alphas.push_back(parse_rat(a.get<std::string>()));
  for (const auto& b : j.at("betas")) form.betas.push_back(parse_rat(b.get<std::string>()));
  form.constant_c = parse_rat(j.at("C").get<std::string>());
  return form;
}

json profile_json(const landau::LandauProfile& prof) {
  json breakpoints = json::array();
  for (const Rat& g : prof.breakpoints) breakpoints.push_back(rat_str(g));
  return json{{"M", prof.big_m},
              {"amplitudes", prof.amplitudes},
              {"breakpoints", breakpoints},
              {"plateaus", prof.plateaus}};
}

json classification_json(const landau::Classification& cls) {
  json j{{"tag", landau::case_tag_name(cls.tag)}};
  j["witness"] = cls.witness ? json(rat_str(*cls.witness)) : json(nullptr);
  return j;
}

json integrality_json(const mirror::IntegralityReport& report) {
  json j;
  j["non_integer_indices"] = report.non_integer_indices;
  json per_prime = json::array();
  for (const auto& finding : report.per_prime) {
    json entry{{"p", finding.p}};
    entry["least_bad_index"] =
        finding.least_bad_index ? json(*finding.least_bad_index) : json(nullptr);
    per_prime.push_back(entry);
  }
  j["per_prime"] = per_prime;
  return j;
}

json dwork_report_json(const dwork::HypothesisReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back(json{{"condition", dwork::condition_name(v.condition)},
                              {"observed", v.observed_valuation},
                              {"params", v.params},
                              {"required", v.required_valuation}});
  }
  return json{{"checks", report.checks},
              {"skipped", report.skipped},
              {"violations", violations}};
}

json suite_json(const verify::SuiteReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back(json{{"lemma", f.lemma}, {"params", f.params}, {"spec", f.spec}});
  return json{{"checks", report.checks},
              {"failures", failures},
              {"skipped", report.skipped}};
}

}  // namespace mirrormap::json_io
