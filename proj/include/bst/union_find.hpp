#pragma once

#include <numeric>
#include <vector>

#include "bst/geometry.hpp"

namespace bst {

/// Disjoint sets with union by rank and path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index x) {
    while (parent_[idx(x)] != x) {
      parent_[idx(x)] = parent_[idx(parent_[idx(x)])];
      x = parent_[idx(x)];
    }
    return x;
  }

  /// Returns false when x and y were already in the same set.
  bool unite(Index x, Index y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[idx(x)] < rank_[idx(y)]) std::swap(x, y);
    parent_[idx(y)] = x;
    if (rank_[idx(x)] == rank_[idx(y)]) ++rank_[idx(x)];
    --sets_;
    return true;
  }

  std::size_t size() const { return parent_.size(); }
  std::size_t sets() const { return sets_; }

  /// Dense labels 0..sets()-1, numbered by first appearance.
  std::vector<Index> labels() {
    std::vector<Index> root_label(parent_.size(), kNoIndex);
    std::vector<Index> out(parent_.size());
    Index next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      const Index r = find(static_cast<Index>(i));
      if (root_label[idx(r)] == kNoIndex) root_label[idx(r)] = next++;
      out[i] = root_label[idx(r)];
    }
    return out;
  }

 private:
  static std::size_t idx(Index i) { return static_cast<std::size_t>(i); }

  std::vector<Index> parent_;
  std::vector<unsigned char> rank_;
  std::size_t sets_;
};

}  // namespace bst
