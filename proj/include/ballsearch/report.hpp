#pragma once

#include <ostream>

#include <json.hpp>

#include "ballsearch/adaptive.hpp"
#include "ballsearch/experiments.hpp"
#include "ballsearch/hypercube_codes.hpp"
#include "ballsearch/separating.hpp"

namespace ballsearch {

// Key order is fixed so reports are byte-identical across runs.
using Json = nlohmann::ordered_json;

Json to_json(const BallQuery& q);
Json to_json(const QuerySet& q);
Json to_json(const Transcript& t);
Json to_json(const NonAdaptiveResult& r);
Json to_json(const MetricDimensionResult& r);
Json to_json(const SandwichReport& r);
Json to_json(const ExactAdaptiveResult& r);
Json to_json(const CoveringCode& c);
Json to_json(const FanoVerification& v);
Json to_json(const BallStats& s);
Json to_json(const ExperimentReport& r);
Json to_json(const HalvingExperimentReport& r);

/// One row per trial: trial,diameter,t,success,max_ball,mean_ball,mean_symdiff.
void write_csv(std::ostream& out, const ExperimentReport& r);

}  // namespace ballsearch
