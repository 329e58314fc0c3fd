#include "bihyper/construction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bihyper {

namespace {

// Which generating piece a label came from: 1..s for the pieces indexed by
// t, 0 for the lone vertex (n1,...,ns,1).
struct PieceLabel {
  std::size_t piece;
  LabeledVertex label;
};

std::vector<PieceLabel> generate_pieces(const FeasibleSpec& spec) {
  const std::size_t s = spec.length();
  std::vector<PieceLabel> out;
  auto repeated = [](int value, std::size_t times) { return std::vector<int>(times, value); };

  // Piece s: (j,...,j,0) and (j,...,j,1) for j in [ns].
  for (int j = 1; j <= spec.n(s); ++j) {
    out.push_back({s, {repeated(j, s), 0}});
    out.push_back({s, {repeated(j, s), 1}});
  }
  // Piece i-1 for i = 2..s: for k in [0, n_{i-1} - n_i - 1],
  //   (n_i+k repeated i-1, 1 repeated s-i+1, 0)
  //   (n_i+k repeated i-1, n_i, ..., n_s, 1)
  for (std::size_t i = 2; i <= s; ++i) {
    for (int k = 0; k <= spec.n(i - 1) - spec.n(i) - 1; ++k) {
      std::vector<int> low = repeated(spec.n(i) + k, i - 1);
      std::vector<int> high = low;
      for (std::size_t p = i; p <= s; ++p) {
        low.push_back(1);
        high.push_back(spec.n(p));
      }
      out.push_back({i - 1, {std::move(low), 0}});
      out.push_back({i - 1, {std::move(high), 1}});
    }
  }
  out.push_back({0, {spec.values(), 1}});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

FeasibleSpec::FeasibleSpec(std::vector<int> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("feasible set needs at least 2 values, got " +
                                std::to_string(values_.size()));
  }
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] >= values_[i - 1]) {
      throw std::invalid_argument("feasible set " + to_string() +
                                  " must be listed strictly decreasing");
    }
  }
  if (values_.back() == 1) {
    throw std::invalid_argument(
        "feasible set " + to_string() +
        " contains 1: a strict 1-coloring rules out every D-edge, so no bi-hypergraph with "
        "edges realizes it");
  }
  if (values_.back() < 2) {
    throw std::invalid_argument("feasible set " + to_string() + " must have all values >= 2");
  }
}

FeasibleSpec FeasibleSpec::parse(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("feasible set '" + text + "': '" + item + "' is not an integer");
    }
    if (used != item.size()) {
      throw std::invalid_argument("feasible set '" + text + "': '" + item + "' is not an integer");
    }
    values.push_back(value);
  }
  return FeasibleSpec(std::move(values));
}

std::vector<std::size_t> FeasibleSpec::as_set() const {
  std::vector<std::size_t> out(values_.rbegin(), values_.rend());
  return out;
}

FeasibleSpec FeasibleSpec::tail() const {
  if (values_.size() < 3) {
    throw std::invalid_argument("tail of " + to_string() + " would have fewer than 2 values");
  }
  return FeasibleSpec(std::vector<int>(values_.begin() + 1, values_.end()));
}

std::string FeasibleSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  return os.str();
}

std::size_t min_size(const FeasibleSpec& spec) {
  const int n1 = spec.n(1);
  const int n2 = spec.n(2);
  return static_cast<std::size_t>(2 * n1 - (n2 + 1) / n1);
}

// ---------------------------------------------------------------------------

std::string LabeledVertex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int c : coords) os << c << ',';
  os << flag << ')';
  return os.str();
}

LabeledVertex LabeledVertex::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("label '" + text + "' is not a parenthesized tuple");
  }
  std::vector<int> values;
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      values.push_back(std::stoi(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw std::invalid_argument("label '" + text + "': '" + item + "' is not an integer");
    }
  }
  if (values.size() < 2) throw std::invalid_argument("label '" + text + "' needs coordinates and a flag");
  if (values.back() != 0 && values.back() != 1) {
    throw std::invalid_argument("label '" + text + "': flag must be 0 or 1");
  }
  LabeledVertex out;
  out.flag = values.back();
  values.pop_back();
  out.coords = std::move(values);
  return out;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::I: return "I";
    case Variant::II: return "II";
    case Variant::Auto: return "auto";
  }
  return "?";
}

Variant parse_variant(const std::string& text) {
  if (text == "I") return Variant::I;
  if (text == "II") return Variant::II;
  if (text == "auto") return Variant::Auto;
  throw std::invalid_argument("unknown variant '" + text + "' (expected I, II or auto)");
}

std::optional<Vertex> LabeledHypergraph::find(const LabeledVertex& label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

Vertex LabeledHypergraph::index_of(const LabeledVertex& label) const {
  auto v = find(label);
  if (!v) throw std::out_of_range("no vertex labelled " + label.to_string());
  return *v;
}

// ---------------------------------------------------------------------------

Variant resolve_variant(const FeasibleSpec& spec, Variant requested) {
  if (requested != Variant::Auto) return requested;
  return spec.n(2) == spec.n(1) - 1 ? Variant::II : Variant::I;
}

std::vector<LabeledVertex> special_edge_labels(const FeasibleSpec& spec) {
  const std::size_t s = spec.length();
  const int ns = spec.n(s);
  LabeledVertex ones{std::vector<int>(s, 1), 0};
  LabeledVertex mid{std::vector<int>(s - 1, ns), 0};
  mid.coords.push_back(1);
  LabeledVertex top{std::vector<int>(s, ns), 0};
  return {ones, mid, top};
}

bool satisfies_coordinate_rule(const LabeledVertex& a, const LabeledVertex& b,
                               const LabeledVertex& c) {
  auto two_values = [](int x, int y, int z) {
    const bool xy = x == y, yz = y == z, xz = x == z;
    return (xy || yz || xz) && !(xy && yz);
  };
  for (std::size_t j = 0; j < a.coords.size(); ++j) {
    if (!two_values(a.coords[j], b.coords[j], c.coords[j])) return false;
  }
  return two_values(a.flag, b.flag, c.flag);
}

LabeledHypergraph construct(const FeasibleSpec& spec, const ConstructOptions& options) {
  const std::size_t s = spec.length();
  std::map<LabeledVertex, std::size_t> multiplicity;
  for (const PieceLabel& pl : generate_pieces(spec)) ++multiplicity[pl.label];

  // Exactly one label is produced twice: (ns,...,ns,1), by piece s and by
  // piece s-1 at k = 0.
  const LabeledVertex expected_overlap{std::vector<int>(s, spec.n(s)), 1};
  for (const auto& [label, count] : multiplicity) {
    const std::size_t allowed = label == expected_overlap ? 2 : 1;
    if (count != allowed) {
      throw std::logic_error("construction for " + spec.to_string() + ": label " +
                             label.to_string() + " generated " + std::to_string(count) +
                             " times, expected " + std::to_string(allowed));
    }
  }

  std::vector<LabeledVertex> labels;
  labels.reserve(multiplicity.size());
  for (const auto& entry : multiplicity) labels.push_back(entry.first);

  EdgeFamily edges;
  const std::size_t v = labels.size();
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      for (std::size_t c = b + 1; c < v; ++c) {
        if (satisfies_coordinate_rule(labels[a], labels[b], labels[c])) {
          edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)});
        }
      }
    }
  }

  LabeledHypergraph out{MixedHypergraph(), labels, spec, Variant::I, false,
                        options.drop_special_edge};
  if (!options.drop_special_edge) {
    Edge special;
    for (const LabeledVertex& l : special_edge_labels(spec)) {
      auto idx = out.find(l);
      if (!idx) {
        throw std::logic_error("construction for " + spec.to_string() + ": special edge vertex " +
                               l.to_string() + " missing");
      }
      special.push_back(*idx);
    }
    std::sort(special.begin(), special.end());
    if (std::find(edges.begin(), edges.end(), special) == edges.end()) edges.push_back(special);
  }
  out.hypergraph = MixedHypergraph::bi(v, std::move(edges));

  const Variant variant = resolve_variant(spec, options.variant);
  if (variant == Variant::II) {
    LabeledVertex removed{std::vector<int>(s, 1), 0};
    removed.coords[0] = spec.n(2);
    const Vertex gone = out.index_of(removed);
    std::vector<Vertex> keep;
    for (Vertex x = 0; x < v; ++x) {
      if (x != gone) keep.push_back(x);
    }
    auto sub = induced_subhypergraph(out.hypergraph, keep);
    out.hypergraph = std::move(sub.hypergraph);
    out.labels.erase(out.labels.begin() + gone);
    out.variant = Variant::II;
    out.unproven_regime = spec.n(2) != spec.n(1) - 1;
  }
  return out;
}

Partition canonical_coloring(const LabeledHypergraph& lh, std::size_t i) {
  const std::size_t s = lh.spec.length();
  if (i < 1 || i > s) {
    throw std::out_of_range("canonical coloring index " + std::to_string(i) + " outside [1," +
                            std::to_string(s) + "]");
  }
  std::vector<std::uint32_t> by_coord(lh.labels.size());
  for (std::size_t v = 0; v < lh.labels.size(); ++v) {
    by_coord[v] = static_cast<std::uint32_t>(lh.labels[v].coords[i - 1]);
  }
  Partition p(by_coord);
  if (p.class_count() != static_cast<std::size_t>(lh.spec.n(i))) {
    throw std::logic_error("canonical coloring " + std::to_string(i) + " of " +
                           lh.spec.to_string() + " has " + std::to_string(p.class_count()) +
                           " classes, expected " + std::to_string(lh.spec.n(i)));
  }
  if (!is_proper(lh.hypergraph, p)) {
    throw std::logic_error("canonical coloring " + std::to_string(i) + " of " +
                           lh.spec.to_string() + " is not proper");
  }
  return p;
}

Reduction reduction_bijection(const FeasibleSpec& spec) {
  if (spec.length() < 3) {
    throw std::invalid_argument("reduction needs at least 3 values, got " + spec.to_string());
  }
  LabeledHypergraph full = construct(spec, {.variant = Variant::I});
  LabeledHypergraph tail = construct(spec.tail(), {.variant = Variant::I});

  // Pieces 2..s plus the vertex (n2,n2,n3,...,ns,1).
  LabeledVertex joint{spec.values(), 1};
  joint.coords[0] = spec.n(2);
  std::vector<Vertex> subset;
  for (const PieceLabel& pl : generate_pieces(spec)) {
    if (pl.piece >= 2 || pl.label == joint) subset.push_back(full.index_of(pl.label));
  }
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());

  auto sub = induced_subhypergraph(full.hypergraph, subset);
  if (subset.size() != tail.labels.size()) {
    throw std::logic_error("reduction for " + spec.to_string() + ": subset has " +
                           std::to_string(subset.size()) + " vertices, tail construction has " +
                           std::to_string(tail.labels.size()));
  }
  std::vector<Vertex> forward;
  for (Vertex x : subset) {
    const LabeledVertex& l = full.labels[x];
    if (l.coords[0] != l.coords[1]) {
      throw std::logic_error("reduction subset vertex " + l.to_string() +
                             " has unequal first coordinates");
    }
    LabeledVertex image{std::vector<int>(l.coords.begin() + 1, l.coords.end()), l.flag};
    auto target = tail.find(image);
    if (!target) {
      throw std::logic_error("reduction image " + image.to_string() + " of " + l.to_string() +
                             " is not a vertex of the tail construction");
    }
    forward.push_back(*target);
  }
  VertexBijection map(std::move(forward));
  return Reduction{std::move(full), std::move(tail), std::move(subset), std::move(sub.hypergraph),
                   std::move(map)};
}

}  // namespace bihyper
