#pragma once

// Line-oriented text format for mixed hypergraphs and vertex maps.
//
//   bihyper-hypergraph 1
//   vertices 8
//   bi yes
//   s 2
//   spec 4,2
//   variant I
//   note unproven-regime
//   provenance construct
//   label 0 (1,1,0)
//   ...
//   c 0 1 2
//   ...
//   d 0 1 2
//   ...
//
// Lines after the header may come in any order on input; '#' starts a
// comment. Output always uses the order above, with labels ascending and
// edges sorted, so equal values serialize to identical bytes.
//
// A vertex map is
//
//   bihyper-map 1
//   size 6
//   0 3
//   ...
//
// with one "source target" line per source vertex.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bihyper/construction.hpp"
#include "bihyper/core.hpp"

namespace bihyper {

inline constexpr int kDocumentFormatVersion = 1;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  /// 1-based; 0 when the problem is not tied to one line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct HypergraphDocument {
  int format_version = kDocumentFormatVersion;
  MixedHypergraph hypergraph;
  /// Tuple length minus the flag, when labels are present.
  std::optional<std::size_t> s;
  /// Empty, or one label per vertex, strictly ascending.
  std::vector<LabeledVertex> labels;
  std::optional<FeasibleSpec> spec;
  std::optional<Variant> variant;
  std::vector<std::string> notes;
  std::string provenance;

  bool is_construction() const { return spec && variant && !labels.empty(); }
  /// Requires is_construction().
  LabeledHypergraph to_labeled() const;

  friend bool operator==(const HypergraphDocument&, const HypergraphDocument&) = default;
};

HypergraphDocument to_document(const MixedHypergraph& h, std::string provenance = {});
HypergraphDocument to_document(const LabeledHypergraph& lh);

std::string serialize(const HypergraphDocument& doc);
std::string serialize(const MixedHypergraph& h);
std::string serialize(const LabeledHypergraph& lh);

/// Validates and normalizes. Unsorted labels are accepted and the vertices
/// renumbered into label order.
HypergraphDocument parse_document(std::string_view text);

std::string serialize_map(const VertexBijection& f);
VertexBijection parse_map(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace bihyper
