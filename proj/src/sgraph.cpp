#include "ssc/sgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssc {

VertexSet::VertexSet(std::initializer_list<Vertex> init)
    : VertexSet(std::vector<Vertex>(init)) {}

VertexSet::VertexSet(std::vector<Vertex> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

VertexSet VertexSet::range(Vertex lo, Vertex hi) {
  VertexSet s;
  if (lo <= hi) {
    s.values_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (Vertex v = lo; v <= hi; ++v) s.values_[v - lo] = v;
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) values_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it != values_.end() && *it == v) values_.erase(it);
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  VertexSet out;
  out.values_.reserve(size() + other.size());
  std::set_union(values_.begin(), values_.end(), other.values_.begin(),
                 other.values_.end(), std::back_inserter(out.values_));
  return out;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(values_.begin(), values_.end(), other.values_.begin(),
                      other.values_.end(), std::back_inserter(out.values_));
  return out;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(values_.begin(), values_.end(), other.values_.begin(),
                        other.values_.end(), std::back_inserter(out.values_));
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.values_.begin(), other.values_.end(),
                       values_.begin(), values_.end());
}

std::size_t VertexSet::intersection_size(const VertexSet& other,
                                         std::size_t cap) const {
  // iterate over the smaller set, binary-search the larger
  const VertexSet& small = size() <= other.size() ? *this : other;
  const VertexSet& large = size() <= other.size() ? other : *this;
  std::size_t count = 0;
  for (Vertex v : small) {
    if (large.contains(v)) {
      ++count;
      if (cap != 0 && count > cap) return count;
    }
  }
  return count;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : values_) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

SystemGraph::SystemGraph(const Pattern& a, const Pattern& b) {
  if (!a.square())
    throw std::invalid_argument("SystemGraph: state pattern must be square, "
                                "got " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()));
  if (b.rows() != a.rows())
    throw std::invalid_argument("SystemGraph: row mismatch (" +
                                std::to_string(a.rows()) + " vs " +
                                std::to_string(b.rows()) + ")");
  n_ = static_cast<int>(a.rows());
  r_ = static_cast<int>(b.cols());
  succ_.resize(static_cast<std::size_t>(n_ + r_));
  for (int v = 1; v <= n_ + r_; ++v) {
    std::vector<Vertex> targets;
    for (int w = 1; w <= n_; ++w) {
      const bool edge =
          v <= n_ ? a.at(static_cast<std::size_t>(w - 1),
                         static_cast<std::size_t>(v - 1))
                  : b.at(static_cast<std::size_t>(w - 1),
                         static_cast<std::size_t>(v - n_ - 1));
      if (edge) targets.push_back(w);
    }
    succ_[static_cast<std::size_t>(v - 1)] = VertexSet(std::move(targets));
  }
}

void SystemGraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_ + r_)
    throw std::out_of_range("SystemGraph: vertex " + std::to_string(v) +
                            " outside 1.." + std::to_string(n_ + r_));
}

const VertexSet& SystemGraph::successors(Vertex v) const {
  check_vertex(v);
  return succ_[static_cast<std::size_t>(v - 1)];
}

VertexSet SystemGraph::post(const VertexSet& v) const {
  VertexSet out;
  for (Vertex u : v) out = out.set_union(successors(u));
  return out;
}

VertexSet SystemGraph::pre(const VertexSet& v) const {
  for (Vertex u : v) check_vertex(u);
  std::vector<Vertex> preds;
  for (Vertex u = 1; u <= n_ + r_; ++u)
    if (succ_[static_cast<std::size_t>(u - 1)].intersection_size(v, 1) > 0)
      preds.push_back(u);
  return VertexSet(std::move(preds));
}

std::size_t SystemGraph::edge_count() const {
  std::size_t count = 0;
  for (const VertexSet& s : succ_) count += s.size();
  return count;
}

std::string SystemGraph::edge_list() const {
  std::string out;
  for (Vertex v = 1; v <= n_ + r_; ++v)
    for (Vertex w : succ_[static_cast<std::size_t>(v - 1)])
      out += std::to_string(v) + " " + std::to_string(w) + "\n";
  return out;
}

}  // namespace ssc
