#include "bst/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bst/error.hpp"

namespace bst {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyStructure: return "EmptyStructure";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::MonochromaticInput: return "MonochromaticInput";
    case ErrorCode::InvalidLabels: return "InvalidLabels";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::EmptyHull: return "EmptyHull";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidSeed: return "InvalidSeed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

std::string_view to_string(Objective objective) { return objective == Objective::Min ? "min" : "max"; }

ColoredInstance::ColoredInstance(std::vector<Point> points, std::vector<int> colors)
    : points_(std::move(points)), colors_(std::move(colors)) {
  if (points_.size() != colors_.size()) {
    throw Error(ErrorCode::InvalidArgument, "point and color counts differ");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!is_finite(points_[i])) {
      throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(i) + " has a non-finite coordinate");
    }
    if (colors_[i] < 0) throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(i) + " has a negative color");
  }
  if (points_.size() < 2) throw Error(ErrorCode::TooFewPoints, "at least two points are required");

  std::vector<int> labels = colors_;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() < 2) throw Error(ErrorCode::MonochromaticInput, "no bichromatic spanning tree exists");
  num_colors_ = labels.size();
  ranks_.resize(colors_.size());
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    ranks_[i] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), colors_[i]) - labels.begin());
  }

  std::vector<Index> order(points_.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [this](Index a, Index b) { return lex_less(point(a), point(b)); });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (point(order[k - 1]) == point(order[k])) {
      const Index a = std::min(order[k - 1], order[k]), b = std::max(order[k - 1], order[k]);
      throw Error(ErrorCode::DuplicatePoint,
                  "points " + std::to_string(a) + " and " + std::to_string(b) + " have identical coordinates");
    }
  }
}

std::vector<Index> ColoredInstance::members(int rank) const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] == rank) out.push_back(static_cast<Index>(i));
  }
  return out;
}

SpanningTree make_tree(std::span<const Point> points, std::span<const Edge> edges) {
  SpanningTree tree;
  tree.edges.reserve(edges.size());
  for (const Edge& e : edges) {
    const Index u = std::min(e.u, e.v), v = std::max(e.u, e.v);
    tree.edges.push_back({u, v, std::sqrt(sq_dist(points[static_cast<std::size_t>(u)], points[static_cast<std::size_t>(v)]))});
  }
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const TreeEdge& a, const TreeEdge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  std::vector<double> lengths;
  lengths.reserve(tree.edges.size());
  for (const TreeEdge& e : tree.edges) lengths.push_back(e.length);
  std::sort(lengths.begin(), lengths.end());
  tree.total_weight = std::accumulate(lengths.begin(), lengths.end(), 0.0);
  return tree;
}

}  // namespace bst
