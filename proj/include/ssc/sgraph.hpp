#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ssc/pattern.hpp"

namespace ssc {

using Vertex = int;  // 1-based

/// A sorted, duplicate-free set of vertex indices.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init);
  explicit VertexSet(std::vector<Vertex> values);

  /// {lo, lo+1, ..., hi}; empty when lo > hi.
  static VertexSet range(Vertex lo, Vertex hi);

  bool empty() const noexcept { return values_.empty(); }
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(Vertex v) const;

  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;
  VertexSet set_intersection(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  /// Number of elements shared with `other`, stopping early once the count
  /// exceeds `cap` (cap = 0 counts exactly).
  std::size_t intersection_size(const VertexSet& other,
                                std::size_t cap = 0) const;

  Vertex min() const { return values_.front(); }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  const std::vector<Vertex>& values() const noexcept { return values_; }

  std::string to_string() const;  // "{1,2,5}"

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.values_ == b.values_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) {
    return !(a == b);
  }

private:
  std::vector<Vertex> values_;
};

/// The digraph of a pattern pair (a, b) with a square n x n and b of size
/// n x r: vertices 1..n+r, and an edge v -> w exactly when 1 <= w <= n and
/// cell (w, v) of (a | b) is nonzero. State vertices are 1..n, input
/// vertices n+1..n+r; input vertices have no incoming edges. Immutable after
/// construction.
class SystemGraph {
public:
  SystemGraph(const Pattern& a, const Pattern& b);

  int state_count() const noexcept { return n_; }
  int input_count() const noexcept { return r_; }
  int vertex_count() const noexcept { return n_ + r_; }

  /// Post({v}): the successor set of a single vertex.
  const VertexSet& successors(Vertex v) const;

  /// Union of successors over the set; members must lie in 1..n+r.
  VertexSet post(const VertexSet& v) const;

  /// { u : some edge u -> w with w in v }. Members of v outside 1..n (input
  /// vertices) are tolerated; they have no incoming edges.
  VertexSet pre(const VertexSet& v) const;

  std::size_t edge_count() const;

  /// One "v w" pair per line, for eyeballing against a drawn graph.
  std::string edge_list() const;

private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int r_ = 0;
  std::vector<VertexSet> succ_;  // index v-1
};

}  // namespace ssc
