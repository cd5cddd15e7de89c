#include "bcast/serialize.hpp"

namespace bcast {

Json to_json(const MetricSummary& m) {
  Json j;
  j["n"] = m.n;
  j["radius"] = m.radius;
  j["diameter"] = m.diameter;
  j["eccentricity"] = m.ecc;
  return j;
}

Json to_json(const SpineDecomposition& s) {
  Json j;
  j["spine"] = s.spine;
  j["leafCount"] = s.leaf_count;
  j["isStem"] = s.is_stem;
  j["isStrongStem"] = s.is_strong_stem;
  j["limbs"] = s.limb;
  return j;
}

Json to_json(const BroadcastAnalysis& a) {
  Json j;
  j["broadcastVertices"] = a.broadcast_vertices;
  j["cost"] = a.cost;
  j["isDominating"] = a.is_dominating;
  j["isMinimalDominating"] = a.is_minimal_dominating;
  j["dominated"] = a.dominated;
  Json per = Json::array();
  for (const auto& v : a.per_vertex) {
    Json e;
    e["vertex"] = v.vertex;
    e["power"] = v.power;
    e["neighbourhood"] = v.neighbourhood;
    e["boundary"] = v.boundary;
    e["privateNeighbourhood"] = v.private_neighbourhood;
    e["privateBoundary"] = v.private_boundary;
    per.push_back(std::move(e));
  }
  j["perVertex"] = std::move(per);
  return j;
}

Json to_json(const SolverResult& r) {
  Json j;
  j["value"] = r.value;
  if (r.broadcast)
    j["witness"] = format_broadcast(*r.broadcast);
  else
    j["witness"] = r.vertex_set;
  j["nodesExplored"] = r.nodes_explored;
  return j;
}

Json to_json(const TheoremVerdict& v) {
  Json j;
  j["isDiametrical"] = v.is_diametrical;
  j["failedCondition"] = std::string(to_string(v.failed));
  j["evidence"] = v.evidence;
  return j;
}

Json to_json(const HypothesisEvidence& e) {
  Json j;
  j["description"] = e.description;
  j["indices"] = e.indices;
  j["vertices"] = e.vertices;
  return j;
}

Json to_json(const WitnessCertificate& c) {
  Json j;
  j["lemmaId"] = std::string(to_string(c.lemma));
  j["constructedBy"] = std::string(to_string(c.constructed_by));
  j["evidence"] = to_json(c.evidence);
  j["witness"] = format_broadcast(c.witness);
  j["cost"] = c.witness.cost();
  j["diameter"] = c.diameter;
  return j;
}

Json to_json(const DiametricalDecision& d) {
  Json j;
  j["isDiametrical"] = d.is_diametrical;
  j["provenance"] = d.provenance;
  j["diameter"] = d.diameter;
  j["theoremVerdict"] = d.verdict ? to_json(*d.verdict) : Json(nullptr);
  j["upperGammaB"] = d.upper_gamma_b ? Json(*d.upper_gamma_b) : Json(nullptr);
  return j;
}

}  // namespace bcast
