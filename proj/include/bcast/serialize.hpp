#pragma once

#include <json.hpp>

#include "bcast/analysis.hpp"
#include "bcast/diametrical.hpp"
#include "bcast/metrics.hpp"
#include "bcast/solvers.hpp"
#include "bcast/spine.hpp"

namespace bcast {

/// Insertion-ordered JSON so key order is part of the output contract.
using Json = nlohmann::ordered_json;

Json to_json(const MetricSummary& m);
Json to_json(const SpineDecomposition& s);
Json to_json(const BroadcastAnalysis& a);
/// `witness` is the broadcast text form or the vertex set, whichever the
/// solver produced.
Json to_json(const SolverResult& r);
Json to_json(const TheoremVerdict& v);
Json to_json(const HypothesisEvidence& e);
Json to_json(const WitnessCertificate& c);
Json to_json(const DiametricalDecision& d);

}  // namespace bcast
