#pragma once

#include <iosfwd>
#include <optional>

#include "bst/instance.hpp"
#include "bst/spanning_trees.hpp"

namespace bst {

struct ResultReport {
  std::size_t n = 0;
  std::size_t k = 0;
  Objective objective = Objective::Min;
  Strategy strategy = Strategy::Structural;
  SpanningTree tree;
  std::size_t stages = 0;
  std::optional<double> elapsed_ms;  // printed only when set
};

/// Header comment lines, then one "u v length" line per edge (12 significant
/// digits) and a final "total_weight" line.
void write_text(std::ostream& out, const ResultReport& report);

/// {n, k, objective, strategy, total_weight, stages, edges: [{u, v, length}]}
void write_json(std::ostream& out, const ResultReport& report);

/// Points as filled circles colored by label, tree edges as segments.
void write_svg(std::ostream& out, const ColoredInstance& instance, const SpanningTree& tree);

/// %.12g
std::string format_length(double value);

}  // namespace bst
