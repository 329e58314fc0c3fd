#pragma once

// Tuple-labelled 3-uniform bi-hypergraphs that one-realize a set
// S = {n1 > n2 > ... > ns >= 2}.
//
// Vertices are (s+1)-tuples (x1,...,xs,b) with 1 <= xi <= ni and a flag bit
// b. Variant I has 2*n1 vertices. Variant II removes (n2,1,...,1,0) and has
// 2*n1 - 1 vertices; it is the minimum-size choice when n2 = n1 - 1.
// Internally vertices are dense indices assigned in ascending label order.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bihyper/core.hpp"

namespace bihyper {

/// Strictly decreasing n1 > n2 > ... > ns with s >= 2 and ns >= 2.
class FeasibleSpec {
 public:
  /// Throws std::invalid_argument describing the first violated condition.
  explicit FeasibleSpec(std::vector<int> values);

  /// Parses "n1,n2,...".
  static FeasibleSpec parse(const std::string& text);

  std::size_t length() const { return values_.size(); }
  /// 1-based, matching the tuple coordinates.
  int n(std::size_t i) const { return values_.at(i - 1); }
  int largest() const { return values_.front(); }
  const std::vector<int>& values() const { return values_; }
  std::vector<std::size_t> as_set() const;
  /// {n2,...,ns}; requires length() >= 3.
  FeasibleSpec tail() const;

  std::string to_string() const;

  friend bool operator==(const FeasibleSpec&, const FeasibleSpec&) = default;

 private:
  std::vector<int> values_;
};

/// Minimum order of a 3-uniform bi-hypergraph one-realizing S:
/// 2*n1 - floor((n2 + 1) / n1).
std::size_t min_size(const FeasibleSpec& spec);

struct LabeledVertex {
  std::vector<int> coords;
  int flag = 0;

  /// Coordinates first, flag last.
  friend auto operator<=>(const LabeledVertex&, const LabeledVertex&) = default;
  friend bool operator==(const LabeledVertex&, const LabeledVertex&) = default;

  /// "(2,1,0)"
  std::string to_string() const;
  static LabeledVertex parse(const std::string& text);
};

enum class Variant { I, II, Auto };

std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

struct LabeledHypergraph {
  MixedHypergraph hypergraph;
  /// labels[v] names vertex v; strictly ascending.
  std::vector<LabeledVertex> labels;
  FeasibleSpec spec;
  /// I or II, never Auto.
  Variant variant = Variant::I;
  /// Variant II with n2 != n1 - 1: constructible, but not known to be a
  /// one-realization.
  bool unproven_regime = false;
  bool special_edge_dropped = false;

  std::optional<Vertex> find(const LabeledVertex& label) const;
  Vertex index_of(const LabeledVertex& label) const;

  friend bool operator==(const LabeledHypergraph&, const LabeledHypergraph&) = default;
};

struct ConstructOptions {
  Variant variant = Variant::Auto;
  /// Leave out the extra edge {(1,..,1,1,0),(ns,..,ns,1,0),(ns,..,ns,ns,0)}.
  bool drop_special_edge = false;
};

/// Auto resolves to II iff n2 = n1 - 1.
Variant resolve_variant(const FeasibleSpec& spec, Variant requested);

LabeledHypergraph construct(const FeasibleSpec& spec, const ConstructOptions& options = {});

/// The three labels of the extra edge that the coordinate rule misses.
std::vector<LabeledVertex> special_edge_labels(const FeasibleSpec& spec);

/// True iff the three labels take exactly two distinct values in every
/// coordinate position, flag included.
bool satisfies_coordinate_rule(const LabeledVertex& a, const LabeledVertex& b,
                               const LabeledVertex& c);

/// Groups vertices by their i-th coordinate (1 <= i <= s). The result has
/// exactly n_i classes and is checked to be proper.
Partition canonical_coloring(const LabeledHypergraph& lh, std::size_t i);

struct Reduction {
  /// construct(spec, I)
  LabeledHypergraph full;
  /// construct(spec.tail(), I)
  LabeledHypergraph tail;
  /// Vertices of `full` whose first two coordinates agree, ascending.
  std::vector<Vertex> subset;
  /// full restricted to `subset`, reindexed in subset order.
  MixedHypergraph restricted;
  /// Drops the first coordinate: restricted vertex -> tail vertex.
  VertexBijection map;
};

/// Requires s >= 3.
Reduction reduction_bijection(const FeasibleSpec& spec);

}  // namespace bihyper
