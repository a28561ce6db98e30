#include "intervallabel/reports.hpp"

#include "json.hpp"

namespace intervallabel {

namespace {

nlohmann::json stats_object(const GraphStats& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["max_degree"] = s.max_degree;
  j["min_degree"] = s.min_degree;
  j["mu"] = s.multiplicity;
  j["mu_nonadjacent"] = s.multiplicity_nonadjacent;
  j["is_connected"] = s.is_connected;
  j["omega"] = s.omega ? nlohmann::json(*s.omega) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

std::string stats_json(const GraphStats& stats) { return stats_object(stats).dump(); }

std::string bound_report_json(const BoundReport& r) {
  nlohmann::json j;
  j["class"] = std::string(class_name(r.cls));
  j["p"] = r.params.p;
  j["q"] = r.params.q;
  j["formula_value"] = r.formula_value;
  j["achieved_span"] = r.achieved_span;
  j["holds"] = r.holds;
  j["report_only"] = r.report_only;
  j["hard_failure"] = is_hard_failure(r);
  j["note"] = r.note;
  j["stats_used"] = stats_object(r.stats);
  if (r.clique_size) j["clique_size"] = *r.clique_size;
  if (r.construction_bound) {
    j["construction_bound"] = *r.construction_bound;
    j["construction_holds"] = r.construction_holds;
  }
  return j.dump();
}

std::string violations_json(const std::vector<Violation>& violations) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : violations) {
    arr.push_back({{"kind", std::string(violation_kind_name(v.kind))},
                   {"u", v.u},
                   {"v", v.v},
                   {"required", v.required},
                   {"observed", v.observed}});
  }
  return arr.dump();
}

std::string claim_check_json(Claim claim, const ClaimCheck& check) {
  nlohmann::json j;
  j["claim"] = std::string(claim_tag(claim));
  j["applicable"] = check.applicable;
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < check.witnesses.size(); ++i)
    arr.push_back({{"witness", check.witnesses[i]}, {"detail", check.details[i]}});
  j["violations"] = std::move(arr);
  return j.dump();
}

}  // namespace intervallabel
