#pragma once

// Exhaustive search over all 3-uniform bi-hypergraphs on a few vertices for
// one-realizations of a target set. Below the minimum order the search
// certifies that none exists; at the minimum order it hunts for witnesses.
//
// An instance on v vertices is a bitmask over the C(v,3) triples in
// lexicographic order (bit t set = triple t is a bi-edge).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bihyper/construction.hpp"
#include "bihyper/core.hpp"
#include "bihyper/enumeration.hpp"

namespace bihyper {

inline constexpr std::size_t kDefaultVertexCap = 6;
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
/// Environment variable overriding kDefaultBudget.
inline constexpr const char* kBudgetEnvVar = "BIHYPER_BUDGET";

/// Thrown when a request exceeds the configured instance budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t triple_count(std::size_t v);

class TripleSpace {
 public:
  /// Supports v <= 8 (at most 56 triples).
  explicit TripleSpace(std::size_t v);

  std::size_t vertices() const { return v_; }
  std::size_t triple_count() const { return triples_.size(); }
  /// 2^C(v,3).
  std::uint64_t instance_count() const { return std::uint64_t{1} << triples_.size(); }
  const std::vector<Edge>& triples() const { return triples_; }

  MixedHypergraph instance(std::uint64_t mask) const;
  /// Inverse of instance(); h must be a 3-uniform bi-hypergraph on v vertices.
  std::uint64_t mask_of(const MixedHypergraph& h) const;

  /// Image of the mask under the vertex permutation.
  std::uint64_t permute(std::uint64_t mask, std::span<const Vertex> perm) const;
  /// Minimum mask over all v! relabellings.
  std::uint64_t canonical_mask(std::uint64_t mask) const;
  bool is_canonical(std::uint64_t mask) const;

 private:
  void build_permutation_tables();

  std::size_t v_;
  std::vector<Edge> triples_;
  std::vector<std::size_t> index_;  // triple index by a*v*v + b*v + c
  std::vector<std::vector<std::uint8_t>> perm_tables_;  // triple images, one row per permutation
};

/// Default budget, honouring the BIHYPER_BUDGET environment variable.
std::uint64_t default_budget();

struct BiHypergraphStream {
  std::vector<std::uint64_t> masks;
  std::vector<MixedHypergraph> hypergraphs;
  std::uint64_t instances_total = 0;
  /// Isomorphism classes; equals hypergraphs.size() when reduced.
  std::optional<std::uint64_t> classes;
};

/// Every 3-uniform bi-hypergraph on v vertices, or one canonical
/// representative per isomorphism class. Throws BudgetExceeded when
/// v > vertex_cap, stating 2^C(v,3), and std::invalid_argument when v < 3.
BiHypergraphStream enumerate_bi_hypergraphs(std::size_t v, bool iso_reduce,
                                            std::size_t vertex_cap = kDefaultVertexCap);

/// Streaming form; the visitor returns false to stop.
void for_each_bi_hypergraph(std::size_t v, bool iso_reduce,
                            const std::function<bool(std::uint64_t, const MixedHypergraph&)>& fn,
                            std::size_t vertex_cap = kDefaultVertexCap);

struct SearchCursor {
  std::size_t vertices = 3;
  std::uint64_t index = 0;

  /// "v:index"
  std::string to_string() const;
  static SearchCursor parse(const std::string& text);

  friend auto operator<=>(const SearchCursor&, const SearchCursor&) = default;
};

struct SearchOptions {
  std::size_t max_vertices = 0;
  bool iso_reduce = false;
  /// Maximum number of one-realization tests in this run.
  std::uint64_t budget = kDefaultBudget;
  std::size_t vertex_cap = kDefaultVertexCap;
  std::optional<SearchCursor> resume;
  /// Witnesses kept in the report; all are counted.
  std::size_t max_witnesses = 16;
  /// 0 means hardware concurrency.
  unsigned threads = 1;
};

enum class Verdict { CertifiedNone, WitnessFound, AbortedBudget };

std::string to_string(Verdict v);

struct Witness {
  std::size_t vertices;
  std::uint64_t mask;
  MixedHypergraph hypergraph;
  OneRealizationResult certificate;
};

struct VertexCountProgress {
  std::size_t vertices;
  /// Masks visited, canonical or not.
  std::uint64_t scanned = 0;
  /// One-realization tests run (canonical masks only when iso-reducing).
  std::uint64_t examined = 0;
  bool complete = false;
};

struct SearchReport {
  FeasibleSpec spec;
  std::vector<VertexCountProgress> progress;
  std::vector<Witness> witnesses;
  std::uint64_t witness_count = 0;
  Verdict verdict = Verdict::CertifiedNone;
  /// Where to resume after an abort.
  std::optional<SearchCursor> cursor;
  std::string abort_reason;

  std::uint64_t total_scanned() const;
  std::uint64_t total_examined() const;
};

/// Tests every (iso-reduced) bi-hypergraph on 3..max_vertices vertices.
/// CertifiedNone iff the whole range was covered without a witness.
SearchReport certify_lower_bound(const FeasibleSpec& spec, const SearchOptions& options);

}  // namespace bihyper
