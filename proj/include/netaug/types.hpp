#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace netaug {

using Vertex = std::uint32_t;
using Weight = std::uint64_t;
using ArrivalId = std::uint64_t;

inline constexpr Weight kMaxWeight = static_cast<Weight>(std::numeric_limits<std::int64_t>::max());

/// An undirected edge or link as it appears in a stream. Parallel copies are
/// distinct objects, told apart by their arrival number.
struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;
  ArrivalId id = 0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Directed copy of a link. `origin` is the arrival id of the undirected link
/// it was derived from.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  Weight w = 0;
  ArrivalId origin = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Raised when an instance exceeds the declared desk-scale limits of an exact
/// solver or enumerator.
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Checked addition of weights; totals never silently wrap.
inline Weight add_weight(Weight a, Weight b) {
  if (a > std::numeric_limits<Weight>::max() - b) {
    throw std::overflow_error("total weight overflows 64 bits");
  }
  return a + b;
}

inline Weight total_weight(const std::vector<WeightedEdge>& edges) {
  Weight sum = 0;
  for (const auto& e : edges) sum = add_weight(sum, e.w);
  return sum;
}

void check_endpoints(const WeightedEdge& e, std::size_t n);

/// Partition of 0..n-1 into classes. Class ids are contiguous and numbered in
/// order of their smallest member, which is also the class representative.
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes arbitrary labels (equal label = same class).
  static Partition from_labels(const std::vector<std::uint32_t>& labels);
  static Partition singletons(std::size_t n);

  std::size_t vertex_count() const { return label_.size(); }
  std::size_t class_count() const { return rep_.size(); }
  std::uint32_t class_of(Vertex v) const { return label_.at(v); }
  Vertex representative(Vertex v) const { return rep_[label_.at(v)]; }
  Vertex class_representative(std::uint32_t c) const { return rep_.at(c); }
  bool same_class(Vertex a, Vertex b) const { return label_.at(a) == label_.at(b); }

  /// True iff every class of *this lies inside one class of `coarser`.
  bool refines(const Partition& coarser) const;
  std::vector<std::vector<Vertex>> classes() const;
  const std::vector<std::uint32_t>& labels() const { return label_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> label_;
  std::vector<Vertex> rep_;
};

/// One side S of a vertex bipartition, as a bitmask over at most 32 vertices.
struct CutSide {
  std::uint32_t members = 0;
  std::size_t boundary_size = 0;

  bool contains(Vertex v) const { return (members >> v) & 1U; }
  std::vector<Vertex> vertices() const;

  friend bool operator==(const CutSide&, const CutSide&) = default;
};

}  // namespace netaug
