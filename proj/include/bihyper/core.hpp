#pragma once

// Value types for mixed hypergraphs and their colorings.
//
// A mixed hypergraph carries two edge families over a dense vertex range
// [0, vertex_count): C-edges need two vertices of a common class, D-edges
// need two vertices of distinct classes. Colorings are set partitions of the
// vertex range, always held in restricted-growth form so that equal
// partitions compare equal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bihyper {

using Vertex = std::uint32_t;
using ClassLabel = std::uint32_t;

/// Sorted ascending, no repeats.
using Edge = std::vector<Vertex>;
/// Sorted lexicographically, no duplicate edges.
using EdgeFamily = std::vector<Edge>;

/// Raised when a caller breaks a documented precondition that indicates a
/// harness bug rather than bad user input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string edge_to_string(std::span<const Vertex> edge);

class MixedHypergraph {
 public:
  MixedHypergraph() = default;

  /// Validates and normalizes both families. Throws std::invalid_argument
  /// naming the offending edge on an out-of-range index, a repeated vertex
  /// inside an edge, or an edge with fewer than two vertices.
  MixedHypergraph(std::size_t vertex_count, EdgeFamily c_edges, EdgeFamily d_edges);

  /// Bi-hypergraph: the same family serves as C-edges and D-edges.
  static MixedHypergraph bi(std::size_t vertex_count, EdgeFamily edges);

  std::size_t vertex_count() const { return vertex_count_; }
  const EdgeFamily& c_edges() const { return c_edges_; }
  const EdgeFamily& d_edges() const { return d_edges_; }

  bool is_bi() const { return c_edges_ == d_edges_; }
  bool is_3_uniform() const;

  friend bool operator==(const MixedHypergraph&, const MixedHypergraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  EdgeFamily c_edges_;
  EdgeFamily d_edges_;
};

MixedHypergraph build_hypergraph(std::size_t vertex_count, EdgeFamily c_edges,
                                 EdgeFamily d_edges);

/// A set partition of [0, size()) in restricted-growth form: vertex 0 is in
/// class 0 and each vertex either reuses a class seen earlier or opens the
/// next unused label.
class Partition {
 public:
  Partition() = default;

  /// Any labelling is accepted; it is relabelled to restricted-growth form.
  explicit Partition(std::span<const std::uint32_t> labels);
  explicit Partition(const std::vector<std::uint32_t>& labels)
      : Partition(std::span<const std::uint32_t>(labels)) {}

  /// Builds from explicit classes. Every vertex of [0, vertex_count) must
  /// appear in exactly one nonempty class.
  static Partition from_classes(std::size_t vertex_count,
                                const std::vector<std::vector<Vertex>>& classes);

  std::size_t size() const { return labels_.size(); }
  std::size_t class_count() const { return class_count_; }
  ClassLabel class_of(Vertex v) const { return labels_.at(v); }
  std::span<const ClassLabel> encoding() const { return labels_; }

  /// Classes in label order, each sorted ascending.
  std::vector<std::vector<Vertex>> classes() const;
  std::vector<std::size_t> class_sizes() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<ClassLabel> labels_;
  std::size_t class_count_ = 0;
};

/// r_k counts for k = 1..upper_chromatic(). Trailing zeros are trimmed, so an
/// empty vector means no strict coloring exists.
struct ChromaticSpectrum {
  std::vector<std::uint64_t> counts;

  std::size_t upper_chromatic() const { return counts.size(); }
  std::uint64_t r(std::size_t k) const {
    return k >= 1 && k <= counts.size() ? counts[k - 1] : 0;
  }
  std::uint64_t total() const;
  std::vector<std::size_t> feasible() const;

  /// Builds from a per-k table indexed by k (entry 0 ignored) and trims.
  static ChromaticSpectrum from_table(std::span<const std::uint64_t> by_k);

  friend bool operator==(const ChromaticSpectrum&, const ChromaticSpectrum&) = default;
};

/// Bijection between the vertex ranges of two hypergraphs of equal order.
class VertexBijection {
 public:
  VertexBijection() = default;
  /// forward[v] is the image of v. Throws std::invalid_argument unless
  /// forward is a permutation of [0, forward.size()).
  explicit VertexBijection(std::vector<Vertex> forward);

  static VertexBijection identity(std::size_t n);

  std::size_t size() const { return forward_.size(); }
  Vertex operator()(Vertex v) const { return forward_.at(v); }
  Vertex inverse(Vertex w) const { return inverse_.at(w); }
  std::span<const Vertex> forward() const { return forward_; }

  friend bool operator==(const VertexBijection& a, const VertexBijection& b) {
    return a.forward_ == b.forward_;
  }

 private:
  std::vector<Vertex> forward_;
  std::vector<Vertex> inverse_;
};

struct InducedSubhypergraph {
  MixedHypergraph hypergraph;
  /// original[i] is the vertex of the parent that became vertex i.
  std::vector<Vertex> original;
};

/// Derived sub-hypergraph on `subset`: keeps exactly the edges contained in
/// the subset, reindexed against the sorted subset.
InducedSubhypergraph induced_subhypergraph(const MixedHypergraph& h,
                                           std::span<const Vertex> subset);

bool is_c_edge_satisfied(std::span<const Vertex> edge, const Partition& p);
bool is_d_edge_satisfied(std::span<const Vertex> edge, const Partition& p);

/// Throws std::invalid_argument if the partition does not cover exactly the
/// vertices of h.
bool is_proper(const MixedHypergraph& h, const Partition& p);

/// Number of classes of a proper coloring. An improper coloring is a
/// ContractViolation.
std::size_t strict_class_count(const MixedHypergraph& h, const Partition& p);

/// Unions classes a and b (labels of p's canonical encoding).
Partition merge_classes(const Partition& p, ClassLabel a, ClassLabel b);

/// Applies f to every vertex of p: the result colors f(v) with v's class.
Partition relabel_vertices(const Partition& p, const VertexBijection& f);

/// Image of h under f, normalized.
MixedHypergraph permute_vertices(const MixedHypergraph& h, const VertexBijection& f);

/// True iff f maps the C-edges of h1 onto the C-edges of h2 and the D-edges
/// of h1 onto the D-edges of h2.
bool check_isomorphism_under_map(const MixedHypergraph& h1, const MixedHypergraph& h2,
                                 const VertexBijection& f);

}  // namespace bihyper
