#include "bihyper/document.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace bihyper {

namespace {

constexpr std::string_view kHypergraphHeader = "bihyper-hypergraph";
constexpr std::string_view kMapHeader = "bihyper-map";

struct Line {
  std::size_t number;
  std::string key;
  std::string rest;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (!line.empty()) {
      const auto sp = line.find_first_of(" \t");
      if (sp == std::string::npos) {
        out.push_back({number, line, {}});
      } else {
        out.push_back({number, line.substr(0, sp), trim(std::string_view(line).substr(sp + 1))});
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::uint64_t parse_uint(const Line& line, const std::string& token, const char* what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line.number, std::string(what) + ": '" + token + "' is not a nonnegative integer");
  }
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string(what) + ": '" + token + "' is out of range");
  }
}

std::vector<std::uint64_t> parse_uints(const Line& line, const char* what) {
  std::istringstream is(line.rest);
  std::vector<std::uint64_t> out;
  std::string tok;
  while (is >> tok) out.push_back(parse_uint(line, tok, what));
  return out;
}

void write_edges(std::ostringstream& os, const char* key, const EdgeFamily& family) {
  for (const Edge& e : family) {
    os << key;
    for (Vertex v : e) os << ' ' << v;
    os << '\n';
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

LabeledHypergraph HypergraphDocument::to_labeled() const {
  if (!is_construction()) {
    throw std::invalid_argument("document does not describe a labelled construction (needs spec, variant and labels)");
  }
  LabeledHypergraph lh{hypergraph, labels, *spec, *variant, false, false};
  for (const auto& n : notes) {
    if (n == "unproven-regime") lh.unproven_regime = true;
    if (n == "special-edge-dropped") lh.special_edge_dropped = true;
  }
  return lh;
}

HypergraphDocument to_document(const MixedHypergraph& h, std::string provenance) {
  HypergraphDocument doc;
  doc.hypergraph = h;
  doc.provenance = std::move(provenance);
  return doc;
}

HypergraphDocument to_document(const LabeledHypergraph& lh) {
  HypergraphDocument doc;
  doc.hypergraph = lh.hypergraph;
  doc.s = lh.spec.length();
  doc.labels = lh.labels;
  doc.spec = lh.spec;
  doc.variant = lh.variant;
  if (lh.unproven_regime) doc.notes.push_back("unproven-regime");
  if (lh.special_edge_dropped) doc.notes.push_back("special-edge-dropped");
  doc.provenance = "construct";
  return doc;
}

std::string serialize(const HypergraphDocument& doc) {
  std::ostringstream os;
  const MixedHypergraph& h = doc.hypergraph;
  os << kHypergraphHeader << ' ' << doc.format_version << '\n';
  os << "vertices " << h.vertex_count() << '\n';
  os << "bi " << (h.is_bi() ? "yes" : "no") << '\n';
  if (doc.s) os << "s " << *doc.s << '\n';
  if (doc.spec) os << "spec " << doc.spec->to_string() << '\n';
  if (doc.variant) os << "variant " << to_string(*doc.variant) << '\n';
  for (const auto& n : doc.notes) os << "note " << n << '\n';
  if (!doc.provenance.empty()) os << "provenance " << doc.provenance << '\n';
  for (std::size_t v = 0; v < doc.labels.size(); ++v) {
    os << "label " << v << ' ' << doc.labels[v].to_string() << '\n';
  }
  write_edges(os, "c", h.c_edges());
  write_edges(os, "d", h.d_edges());
  return os.str();
}

std::string serialize(const MixedHypergraph& h) { return serialize(to_document(h)); }

std::string serialize(const LabeledHypergraph& lh) { return serialize(to_document(lh)); }

HypergraphDocument parse_document(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty() || lines.front().key != kHypergraphHeader) {
    throw ParseError(lines.empty() ? 0 : lines.front().number,
                     "expected header '" + std::string(kHypergraphHeader) + " <version>'");
  }
  HypergraphDocument doc;
  doc.format_version = static_cast<int>(parse_uint(lines.front(), lines.front().rest, "format version"));
  if (doc.format_version != kDocumentFormatVersion) {
    throw ParseError(lines.front().number, "unsupported format version " + std::to_string(doc.format_version));
  }

  std::optional<std::uint64_t> vertex_count;
  std::optional<bool> claims_bi;
  std::vector<std::pair<const Line*, LabeledVertex>> labels;
  std::vector<std::pair<const Line*, Edge>> c_edges, d_edges;
  std::set<std::string> seen_keys;

  for (auto it = lines.begin() + 1; it != lines.end(); ++it) {
    const Line& line = *it;
    auto once = [&] {
      if (!seen_keys.insert(line.key).second) throw ParseError(line.number, "duplicate '" + line.key + "' line");
    };
    if (line.key == "vertices") {
      once();
      vertex_count = parse_uint(line, line.rest, "vertices");
    } else if (line.key == "bi") {
      once();
      if (line.rest != "yes" && line.rest != "no") throw ParseError(line.number, "bi: expected yes or no");
      claims_bi = line.rest == "yes";
    } else if (line.key == "s") {
      once();
      doc.s = parse_uint(line, line.rest, "s");
    } else if (line.key == "spec") {
      once();
      try {
        doc.spec = FeasibleSpec::parse(line.rest);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (line.key == "variant") {
      once();
      try {
        doc.variant = parse_variant(line.rest);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
      if (*doc.variant == Variant::Auto) throw ParseError(line.number, "variant must be I or II");
    } else if (line.key == "note") {
      doc.notes.push_back(line.rest);
    } else if (line.key == "provenance") {
      once();
      doc.provenance = line.rest;
    } else if (line.key == "label") {
      std::istringstream is(line.rest);
      std::string idx, tuple;
      is >> idx >> tuple;
      if (tuple.empty()) throw ParseError(line.number, "label: expected '<index> (<tuple>)'");
      if (parse_uint(line, idx, "label index") != labels.size()) {
        throw ParseError(line.number, "label: expected index " + std::to_string(labels.size()) + ", got " + idx);
      }
      try {
        labels.push_back({&line, LabeledVertex::parse(tuple)});
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (line.key == "c" || line.key == "d") {
      Edge e;
      for (auto x : parse_uints(line, "edge")) {
        if (x > std::numeric_limits<Vertex>::max()) throw ParseError(line.number, "edge: index too large");
        e.push_back(static_cast<Vertex>(x));
      }
      (line.key == "c" ? c_edges : d_edges).push_back({&line, std::move(e)});
    } else {
      throw ParseError(line.number, "unknown key '" + line.key + "'");
    }
  }

  if (!vertex_count) throw ParseError(0, "missing 'vertices' line");
  const std::size_t n = *vertex_count;

  auto check_family = [&](const std::vector<std::pair<const Line*, Edge>>& family, const char* kind) {
    EdgeFamily out;
    for (const auto& [line, edge] : family) {
      try {
        MixedHypergraph probe(n, {edge}, {});
      } catch (const std::invalid_argument& e) {
        throw ParseError(line->number, std::string(kind) + " " + e.what());
      }
      out.push_back(edge);
    }
    return out;
  };
  EdgeFamily cs = check_family(c_edges, "c:");
  EdgeFamily ds = check_family(d_edges, "d:");
  MixedHypergraph h(n, std::move(cs), std::move(ds));
  if (claims_bi.value_or(false) && !h.is_bi()) {
    throw ParseError(0, "document claims a bi-hypergraph but its C-edges and D-edges differ");
  }

  if (!labels.empty()) {
    if (labels.size() != n) {
      throw ParseError(0, std::to_string(labels.size()) + " labels for " + std::to_string(n) + " vertices");
    }
    const std::size_t width = labels.front().second.coords.size();
    if (doc.s && *doc.s != width) {
      throw ParseError(labels.front().first->number, "label has " + std::to_string(width) +
                                                          " coordinates but s = " + std::to_string(*doc.s));
    }
    doc.s = width;
    std::set<LabeledVertex> distinct;
    for (const auto& [line, label] : labels) {
      if (label.coords.size() != width) throw ParseError(line->number, "label " + label.to_string() + " has the wrong length");
      if (!distinct.insert(label).second) throw ParseError(line->number, "duplicate label " + label.to_string());
      if (doc.spec) {
        for (std::size_t i = 0; i < width; ++i) {
          if (label.coords[i] < 1 || label.coords[i] > doc.spec->n(i + 1)) {
            throw ParseError(line->number, "label " + label.to_string() + ": coordinate " + std::to_string(i + 1) +
                                               " outside [1," + std::to_string(doc.spec->n(i + 1)) + "]");
          }
        }
      }
    }
    if (doc.spec && doc.spec->length() != width) {
      throw ParseError(0, "spec has " + std::to_string(doc.spec->length()) + " values but labels have " +
                              std::to_string(width) + " coordinates");
    }
    // Renumber vertices into ascending label order.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return labels[a].second < labels[b].second; });
    std::vector<Vertex> forward(n);
    for (std::size_t i = 0; i < n; ++i) forward[order[i]] = static_cast<Vertex>(i);
    h = permute_vertices(h, VertexBijection(forward));
    for (Vertex old : order) doc.labels.push_back(labels[old].second);
  } else if (doc.spec || doc.variant) {
    throw ParseError(0, "spec/variant given without vertex labels");
  }
  doc.hypergraph = std::move(h);
  return doc;
}

// ---------------------------------------------------------------------------

std::string serialize_map(const VertexBijection& f) {
  std::ostringstream os;
  os << kMapHeader << ' ' << kDocumentFormatVersion << '\n';
  os << "size " << f.size() << '\n';
  for (std::size_t v = 0; v < f.size(); ++v) os << v << ' ' << f(static_cast<Vertex>(v)) << '\n';
  return os.str();
}

VertexBijection parse_map(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty() || lines.front().key != kMapHeader) {
    throw ParseError(lines.empty() ? 0 : lines.front().number,
                     "expected header '" + std::string(kMapHeader) + " <version>'");
  }
  if (parse_uint(lines.front(), lines.front().rest, "format version") != kDocumentFormatVersion) {
    throw ParseError(lines.front().number, "unsupported map format version");
  }
  std::optional<std::uint64_t> size;
  std::vector<std::optional<Vertex>> forward;
  for (auto it = lines.begin() + 1; it != lines.end(); ++it) {
    const Line& line = *it;
    if (line.key == "size") {
      if (size) throw ParseError(line.number, "duplicate 'size' line");
      size = parse_uint(line, line.rest, "size");
      forward.assign(*size, std::nullopt);
      continue;
    }
    if (!size) throw ParseError(line.number, "'size' must precede the map entries");
    const auto src = parse_uint(line, line.key, "source vertex");
    const auto dst = parse_uint(line, line.rest, "target vertex");
    if (src >= *size || dst >= *size) throw ParseError(line.number, "vertex out of range for size " + std::to_string(*size));
    if (forward[src]) throw ParseError(line.number, "vertex " + std::to_string(src) + " mapped twice");
    forward[src] = static_cast<Vertex>(dst);
  }
  if (!size) throw ParseError(0, "missing 'size' line");
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < forward.size(); ++v) {
    if (!forward[v]) throw ParseError(0, "vertex " + std::to_string(v) + " has no image");
    out.push_back(*forward[v]);
  }
  try {
    return VertexBijection(std::move(out));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

}  // namespace bihyper
