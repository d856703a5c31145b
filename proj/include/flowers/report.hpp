#pragma once

#include <string>

#include <json.hpp>

#include "flowers/decompose.hpp"
#include "flowers/embedding.hpp"
#include "flowers/errors.hpp"
#include "flowers/flower_spec.hpp"
#include "flowers/graph.hpp"
#include "flowers/oracle.hpp"

namespace flowers {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

inline Json embedding_json(const FlowerEmbedding& emb) {
  Json j;
  j["center"] = emb.center;
  j["cycles"] = emb.cycles;
  return j;
}

inline FlowerEmbedding embedding_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("center") || !j.contains("cycles"))
    throw input_error("embedding json needs center and cycles");
  FlowerEmbedding emb;
  emb.center = j.at("center").get<int>();
  emb.cycles = j.at("cycles").get<std::vector<std::vector<int>>>();
  return emb;
}

inline Json formula_json(int n, const FlowerSpec& spec, long long value) {
  Json j;
  j["n"] = n;
  j["spec"] = spec.format();
  j["value"] = value;
  return j;
}

inline Json certificate_json(const ExtremalCertificate& cert) {
  Json j;
  j["n"] = cert.n;
  j["spec"] = cert.spec.format();
  j["value"] = cert.value;
  j["witnesses"] = cert.witnesses;
  j["budget_used"] = cert.budget_used;
  return j;
}

inline Json decompose_json(const Graph& g, const FlowerSpec& spec, const DecomposeRun& run) {
  Json j;
  j["spec"] = spec.format();
  j["n"] = g.order();
  j["e"] = g.size();
  j["m"] = run.m;
  j["branch"] = run.branch;
  j["packing"] = run.result.packing;
  j["parts"] = run.result.parts;
  Json flowers = Json::array();
  for (const auto& emb : run.result.flowers) flowers.push_back(embedding_json(emb));
  j["flowers"] = std::move(flowers);
  Json peeled = Json::array();
  for (const auto& rem : run.peeled) peeled.push_back(Json{{"vertex", rem.vertex}, {"degree", rem.degree}});
  j["peeled"] = std::move(peeled);
  j["profile"] = run.profile;
  return j;
}

// Envelope for CLI output; payload determinism is checked with the timings
// member stripped.
struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  double elapsed_ms = 0.0;
  std::string profile;
};

inline Json run_report_json(const RunReport& rep) {
  Json j;
  j["command"] = rep.command;
  j["inputs"] = rep.inputs;
  j["outputs"] = rep.outputs;
  j["timings"] = Json{{"elapsed_ms", rep.elapsed_ms}};
  j["profile"] = rep.profile;
  j["version"] = kReportSchemaVersion;
  return j;
}

}  // namespace flowers
