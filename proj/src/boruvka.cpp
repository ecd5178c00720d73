#include "bst/boruvka.hpp"

#include <algorithm>
#include <string>

#include "bst/error.hpp"
#include "bst/union_find.hpp"

namespace bst {

std::size_t ceil_log2(std::size_t x) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < x) ++bits;
  return bits;
}

SpanningTree run_boruvka(const ColoredInstance& instance, const StageSolver& solver, Objective objective,
                         std::span<const Edge> seed_edges, RunStats* stats) {
  const std::size_t n = instance.size();
  const EdgeOrder order(instance.points(), objective);
  UnionFind forest(n);
  std::vector<Edge> chosen;
  chosen.reserve(n - 1);

  auto check_endpoints = [&](const Edge& e, ErrorCode code) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n) {
      throw Error(code, "edge endpoint out of range");
    }
    if (instance.rank(e.u) == instance.rank(e.v)) {
      throw Error(code, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is not bichromatic");
    }
  };

  for (const Edge& e : seed_edges) {
    check_endpoints(e, ErrorCode::InvalidSeed);
    if (!forest.unite(e.u, e.v)) {
      throw Error(ErrorCode::InvalidSeed,
                  "seed edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") closes a cycle");
    }
    chosen.push_back(order.make(e.u, e.v));
  }

  RunStats local;
  RunStats& st = stats ? *stats : local;
  st = RunStats{};
  st.initial_components = forest.sets();

  while (forest.sets() > 1) {
    const std::vector<Index> labels = forest.labels();
    const std::size_t components = forest.sets();
    StageRecord record;
    record.components = components;
    const StageView view{labels, components, &record};
    std::vector<std::optional<Edge>> answers = solver(view);
    if (answers.size() != components) {
      throw Error(ErrorCode::Disconnected, "stage solver returned a wrong number of answers");
    }

    std::vector<Edge> proposals;
    proposals.reserve(components);
    for (std::size_t c = 0; c < components; ++c) {
      if (!answers[c]) {
        throw Error(ErrorCode::Disconnected,
                    "component " + std::to_string(c) + " has no outgoing bichromatic edge");
      }
      const Edge& e = *answers[c];
      check_endpoints(e, ErrorCode::Disconnected);
      if (labels[static_cast<std::size_t>(e.u)] == labels[static_cast<std::size_t>(e.v)]) {
        throw Error(ErrorCode::Disconnected, "stage solver proposed an edge inside a component");
      }
      proposals.push_back(order.make(e.u, e.v));
    }
    std::sort(proposals.begin(), proposals.end(), order);
    for (const Edge& e : proposals) {
      if (forest.unite(e.u, e.v)) chosen.push_back(e);
    }
    ++st.stages;
    st.stage_log.push_back(std::move(record));
  }

  return make_tree(instance.points(), chosen);
}

}  // namespace bst
