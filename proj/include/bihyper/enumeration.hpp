#pragma once

// Exhaustive enumeration of strict colorings as set partitions.
//
// The search assigns vertices depth-first in a fixed order, offering every
// class already in use and then one fresh class (restricted growth), so
// each set partition is reached exactly once. A branch dies as soon as an
// edge whose vertices are all assigned is violated.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bihyper/core.hpp"

namespace bihyper {

struct EnumerationOptions {
  /// Collect at most this many colorings: the `limit` smallest in canonical
  /// order. Counting is never capped.
  std::optional<std::size_t> limit;
  /// Worker threads; 0 means hardware concurrency. Results do not depend on it.
  unsigned threads = 1;
  /// Explicit assignment order (a permutation of the vertices). Defaults to
  /// descending edge degree, ties by index.
  std::optional<std::vector<Vertex>> order;
};

struct EnumerationReport {
  /// Canonical, deduplicated, sorted by encoding.
  std::vector<Partition> colorings;
  ChromaticSpectrum spectrum;
  std::vector<std::size_t> feasible;
  /// Search-tree nodes that survived pruning, including the root.
  std::uint64_t nodes_explored = 0;

  bool truncated() const { return colorings.size() < spectrum.total(); }

  friend bool operator==(const EnumerationReport&, const EnumerationReport&) = default;
};

/// Descending edge degree (C- and D-memberships counted), ties by index.
std::vector<Vertex> default_vertex_order(const MixedHypergraph& h);

EnumerationReport enumerate_strict_colorings(const MixedHypergraph& h,
                                             const EnumerationOptions& options = {});

ChromaticSpectrum chromatic_spectrum(const MixedHypergraph& h);
std::vector<std::size_t> feasible_set(const MixedHypergraph& h);

struct OneRealizationResult {
  enum class Violation {
    None,
    /// A strict k-coloring exists for some k outside the target set.
    UnexpectedClassCount,
    /// Some k of the target set admits no strict coloring.
    MissingClassCount,
    /// Two distinct strict k-colorings exist.
    Multiplicity,
  };

  bool holds = false;
  Violation violation = Violation::None;
  /// The class count the violation is about (0 when holds).
  std::size_t k = 0;
  /// On success, one partition per element of the target set, by ascending
  /// class count. On failure, the witnessing partitions (1 or 2, none for a
  /// missing class count).
  std::vector<Partition> witnesses;
  /// Colorings examined before the verdict was reached.
  std::uint64_t colorings_seen = 0;

  std::string describe() const;
};

/// Decides whether the feasible set of h is exactly `target` and every
/// spectrum entry is 0 or 1. Stops at the first refuting coloring: a second
/// coloring with the same class count, or a class count outside the target.
OneRealizationResult is_one_realization(const MixedHypergraph& h,
                                        std::span<const std::size_t> target);

}  // namespace bihyper
