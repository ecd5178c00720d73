#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bst/instance.hpp"

namespace bst {

/// Everything a stage solver sees about the current forest.
struct StageView {
  std::span<const Index> labels;  // dense component label per point
  std::size_t components = 0;
  StageRecord* record = nullptr;  // solvers may append diagnostics
};

/// For every component, the extreme bichromatic edge leaving it (or nullopt
/// when the component has no unrelated point).
using StageSolver = std::function<std::vector<std::optional<Edge>>(const StageView&)>;

/// Borůvka's algorithm over the complete multipartite graph of `instance`.
///
/// Starts from `seed_edges` (which must be bichromatic and acyclic; throws
/// InvalidSeed otherwise) and repeatedly asks `solver` for one extreme
/// outgoing edge per component. Proposed edges are applied in EdgeOrder,
/// skipping any that would close a cycle, so two components that pick the
/// same edge produce a single union. Throws Disconnected when a component
/// reports no outgoing edge.
SpanningTree run_boruvka(const ColoredInstance& instance, const StageSolver& solver, Objective objective,
                         std::span<const Edge> seed_edges = {}, RunStats* stats = nullptr);

/// ceil(log2(x)), with 0 for x <= 1.
std::size_t ceil_log2(std::size_t x);

}  // namespace bst
