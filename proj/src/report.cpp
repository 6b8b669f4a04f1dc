#include "ballsearch/report.hpp"

#include <cmath>
#include <iomanip>

namespace ballsearch {

namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

// Infinite slack (a cell with no games) has no JSON number.
Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json pairs(const std::vector<Edge>& p) {
  Json a = Json::array();
  for (auto [u, v] : p) a.push_back({u, v});
  return a;
}

}  // namespace

Json to_json(const BallQuery& q) { return Json{{"center", q.center}, {"radius", q.radius}}; }

Json to_json(const QuerySet& q) {
  Json a = Json::array();
  for (const auto& x : q) a.push_back(to_json(x));
  return a;
}

Json to_json(const Transcript& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back({{"center", s.query.center}, {"radius", s.query.radius}, {"answer", s.answer}});
  return Json{{"length", t.length()}, {"resolved", t.resolved}, {"steps", steps}};
}

Json to_json(const NonAdaptiveResult& r) {
  Json j{{"status", to_string(r.status)}};
  j["size"] = r.status == SearchStatus::Solved ? Json(r.size) : Json(nullptr);
  j["witness"] = to_json(r.witness);
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

Json to_json(const MetricDimensionResult& r) {
  Json j{{"status", to_string(r.status)}};
  j["size"] = r.status == SearchStatus::Solved ? Json(r.size) : Json(nullptr);
  j["witness"] = r.witness;
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

Json to_json(const SandwichReport& r) {
  return Json{{"metric_dimension", r.metric_dimension},
              {"resolving_set", r.resolving_set},
              {"nonadaptive_minimum", r.nonadaptive_minimum},
              {"nonadaptive_witness", to_json(r.nonadaptive_witness)},
              {"diameter", r.diameter},
              {"lower_holds", r.lower_holds},
              {"upper_holds", r.upper_holds},
              {"holds", r.holds()}};
}

Json to_json(const ExactAdaptiveResult& r) {
  Json j{{"status", to_string(r.status)}};
  j["value"] = r.status == SearchStatus::Solved ? Json(r.value) : Json(nullptr);
  j["optimal_first_query"] = r.optimal_first_query ? to_json(*r.optimal_first_query) : Json(nullptr);
  j["states_explored"] = r.states_explored;
  return j;
}

Json to_json(const CoveringCode& c) {
  return Json{{"n", c.n},
              {"r", c.r},
              {"size", c.size()},
              {"codewords", c.codewords},
              {"lower_bound", sphere_covering_lower(c.n, c.r)},
              {"provenance", to_string(c.provenance)},
              {"verified", c.verified}};
}

Json to_json(const FanoVerification& v) {
  return Json{{"separating", v.separating},
              {"empty_signature_vertices", v.empty_signature_vertices},
              {"case_table_mismatches", v.case_table_mismatches},
              {"complement_partition", v.complement_partition},
              {"high_weight_even", v.high_weight_even}};
}

Json to_json(const BallStats& s) {
  return Json{{"r", s.r},
              {"samples", s.samples},
              {"min_ball", s.min_ball},
              {"max_ball", s.max_ball},
              {"mean_ball", s.mean_ball},
              {"mean_intersection", s.mean_intersection},
              {"mean_symdiff", s.mean_symdiff},
              {"p", s.p},
              {"predicted_ball", s.predicted_ball},
              {"predicted_symdiff", s.predicted_symdiff},
              {"symdiff_identity", s.symdiff_identity}};
}

Json to_json(const ExperimentReport& r) {
  Json cfg{{"n", r.config.n},
           {"p", r.config.p},
           {"r", r.config.r},
           {"trials", r.config.trials},
           {"seed", r.config.seed},
           {"centers_override", r.config.centers_override ? Json(*r.config.centers_override) : Json(nullptr)},
           {"pair_samples", r.config.pair_samples}};
  const auto& dp = r.diameter_prediction;
  Json diam{{"diameter", dp.diameter ? Json(*dp.diameter) : Json(nullptr)},
            {"candidate", dp.candidate},
            {"threshold", dp.threshold}};
  Json regime = nullptr;
  if (r.regime) regime = Json{{"regime", to_string(r.regime->regime)}, {"f", r.regime->f}};

  Json trials = Json::array();
  for (const auto& t : r.trials)
    trials.push_back({{"trial", t.trial},
                      {"seed", t.seed},
                      {"diameter", t.diameter ? Json(*t.diameter) : Json(nullptr)},
                      {"centers", t.centers},
                      {"success", t.success},
                      {"unseparated_pairs", t.unseparated_pairs},
                      {"example_pairs", pairs(t.example_pairs)},
                      {"min_ball", t.min_ball},
                      {"max_ball", t.max_ball},
                      {"mean_ball", t.mean_ball},
                      {"mean_symdiff", t.mean_symdiff},
                      {"katona_lower_bound", t.katona.value},
                      {"katona_trivial_regime", t.katona.trivial_regime},
                      {"sandwich_violation", t.sandwich_violation}});
  return Json{{"config", cfg},
              {"centers", r.centers},
              {"predicted_upper", r.predicted_upper},
              {"predicted_lower", optional_number(r.predicted_lower)},
              {"diameter_prediction", diam},
              {"regime", regime},
              {"success_rate", r.success_rate},
              {"sandwich_holds", r.sandwich_holds},
              {"trials", trials}};
}

Json to_json(const HalvingExperimentReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells)
    cells.push_back({{"degree_cap", c.degree_cap},
                     {"n", c.n},
                     {"graphs", c.graphs},
                     {"games", c.games},
                     {"unresolved", c.unresolved},
                     {"max_queries", c.max_queries},
                     {"max_graph_degree", c.max_graph_degree},
                     {"min_slack_loose", finite_or_null(c.min_slack_loose)},
                     {"min_slack_tight", finite_or_null(c.min_slack_tight)},
                     {"violations_loose", c.violations_loose},
                     {"violations_tight", c.violations_tight},
                     {"splits_verified", c.splits_verified}});
  return Json{{"seed", r.config.seed},
              {"graphs_per_cell", r.config.graphs_per_cell},
              {"all_within_loose_bound", r.all_within_loose_bound()},
              {"cells", cells}};
}

void write_csv(std::ostream& out, const ExperimentReport& r) {
  out << "trial,diameter,t,success,max_ball,mean_ball,mean_symdiff\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(6) << std::fixed;
  for (const auto& t : r.trials) {
    out << t.trial << ',';
    if (t.diameter) out << *t.diameter;
    out << ',' << t.centers << ',' << (t.success ? 1 : 0) << ',' << t.max_ball << ',' << t.mean_ball << ','
        << t.mean_symdiff << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace ballsearch
