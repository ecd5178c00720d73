#include "bst/oracle.hpp"

#include <string>

#include "bst/error.hpp"

namespace bst::oracle {

SpanningTree brute_multipartite_mst(const ColoredInstance& instance, Objective objective) {
  const std::size_t n = instance.size();
  const auto points = instance.points();
  const auto ranks = instance.ranks();
  const EdgeOrder order(points, objective);

  std::vector<bool> in_tree(n, false);
  std::vector<Edge> key(n);
  std::vector<bool> has_key(n, false);
  std::vector<Edge> chosen;
  chosen.reserve(n - 1);

  std::size_t current = 0;
  in_tree[0] = true;
  for (std::size_t added = 1; added < n; ++added) {
    const Point& pc = points[current];
    for (std::size_t x = 0; x < n; ++x) {
      if (in_tree[x] || ranks[x] == ranks[current]) continue;
      const Edge cand{static_cast<Index>(current), static_cast<Index>(x), sq_dist(pc, points[x])};
      if (!has_key[x] || order.better(cand, key[x])) {
        key[x] = cand;
        has_key[x] = true;
      }
    }
    std::size_t next = n;
    for (std::size_t x = 0; x < n; ++x) {
      if (in_tree[x] || !has_key[x]) continue;
      if (next == n || order.better(key[x], key[next])) next = x;
    }
    if (next == n) throw Error(ErrorCode::MonochromaticInput, "no bichromatic spanning tree exists");
    in_tree[next] = true;
    chosen.push_back(key[next]);
    current = next;
  }
  return make_tree(points, chosen);
}

std::vector<std::optional<Partner>> brute_extreme_unrelated(const ColoredInstance& instance,
                                                            std::span<const Index> labels, Objective objective) {
  const std::size_t n = instance.size();
  if (labels.size() != n) throw Error(ErrorCode::InvalidLabels, "label count differs from point count");
  for (Index l : labels) {
    if (l < 0) throw Error(ErrorCode::InvalidLabels, "negative component label " + std::to_string(l));
  }
  const EdgeOrder order(instance.points(), objective);
  std::vector<std::optional<Partner>> out(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::optional<Edge> best;
    for (std::size_t q = 0; q < n; ++q) {
      if (labels[q] == labels[p] || instance.ranks()[q] == instance.ranks()[p]) continue;
      const Edge cand = order.make(static_cast<Index>(p), static_cast<Index>(q));
      if (!best || order.better(cand, *best)) best = cand;
    }
    if (best) out[p] = Partner{best->v, best->sq_length};
  }
  return out;
}

std::optional<Edge> brute_extreme_pair(std::span<const Point> points, std::span<const Index> first,
                                       std::span<const Index> second, Objective objective) {
  const EdgeOrder order(points, objective);
  std::optional<Edge> best;
  for (Index p : first) {
    for (Index q : second) {
      const Edge cand = order.make(p, q);
      if (!best || order.better(cand, *best)) best = cand;
    }
  }
  return best;
}

}  // namespace bst::oracle
