#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flowers/flower_spec.hpp"

namespace flowers {

// A concrete flower copy: cycles[i] lists the vertices of cycle i in walk
// order, starting at the shared center; cycles follow all_lengths() order.
struct FlowerEmbedding {
  int center = -1;
  std::vector<std::vector<int>> cycles;

  bool operator==(const FlowerEmbedding&) const = default;
};

inline std::vector<Edge> embedding_edges(const FlowerEmbedding& emb) {
  std::vector<Edge> out;
  for (const auto& cyc : emb.cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i)
      out.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
  return out;
}

// nullopt means the certificate checks out; otherwise a human-readable defect.
inline std::optional<std::string> embedding_defect(const Graph& g, const FlowerSpec& spec,
                                                   const FlowerEmbedding& emb) {
  if (emb.center < 0 || emb.center >= g.order()) return "center out of range";
  auto lengths = spec.all_lengths();
  if (emb.cycles.size() != lengths.size())
    return "expected " + std::to_string(lengths.size()) + " cycles, got " +
           std::to_string(emb.cycles.size());
  std::vector<char> claimed(g.order(), 0);
  for (std::size_t i = 0; i < emb.cycles.size(); ++i) {
    const auto& cyc = emb.cycles[i];
    std::string tag = "cycle " + std::to_string(i);
    if (static_cast<int>(cyc.size()) != lengths[i])
      return tag + " has " + std::to_string(cyc.size()) + " vertices, wants " +
             std::to_string(lengths[i]);
    if (cyc[0] != emb.center) return tag + " does not start at the center";
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      int v = cyc[j];
      if (v < 0 || v >= g.order()) return tag + " vertex out of range";
      if (j > 0) {
        if (v == emb.center) return tag + " revisits the center";
        if (claimed[v]) return tag + " reuses vertex " + std::to_string(v);
        claimed[v] = 1;
      }
      int w = cyc[(j + 1) % cyc.size()];
      if (!g.has_edge(v, w))
        return tag + " needs missing edge " + std::to_string(v) + "-" + std::to_string(w);
    }
  }
  return std::nullopt;
}

inline bool verify_embedding(const Graph& g, const FlowerSpec& spec, const FlowerEmbedding& emb) {
  return !embedding_defect(g, spec, emb).has_value();
}

}  // namespace flowers
