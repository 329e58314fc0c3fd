#include "bihyper/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace bihyper {

namespace {

constexpr ClassLabel kUnset = std::numeric_limits<ClassLabel>::max();

void normalize_family(EdgeFamily& family, std::size_t vertex_count, const char* kind) {
  for (Edge& e : family) {
    for (Vertex v : e) {
      if (v >= vertex_count) {
        throw std::invalid_argument(std::string(kind) + " " + edge_to_string(e) +
                                    ": vertex index " + std::to_string(v) +
                                    " out of range (vertex count " +
                                    std::to_string(vertex_count) + ")");
      }
    }
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument(std::string(kind) + " " + edge_to_string(e) +
                                  ": repeated vertex");
    }
    if (sorted.size() < 2) {
      throw std::invalid_argument(std::string(kind) + " " + edge_to_string(e) +
                                  ": an edge needs at least 2 vertices");
    }
    e = std::move(sorted);
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::size_t distinct_classes(std::span<const Vertex> edge, const Partition& p) {
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < edge.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i && !seen; ++j) {
      seen = p.class_of(edge[j]) == p.class_of(edge[i]);
    }
    if (!seen) ++distinct;
  }
  return distinct;
}

EdgeFamily map_family(const EdgeFamily& family, const VertexBijection& f) {
  EdgeFamily out;
  out.reserve(family.size());
  for (const Edge& e : family) {
    Edge image;
    image.reserve(e.size());
    for (Vertex v : e) image.push_back(f(v));
    std::sort(image.begin(), image.end());
    out.push_back(std::move(image));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string edge_to_string(std::span<const Vertex> edge) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < edge.size(); ++i) {
    if (i) os << ',';
    os << edge[i];
  }
  os << '}';
  return os.str();
}

MixedHypergraph::MixedHypergraph(std::size_t vertex_count, EdgeFamily c_edges,
                                 EdgeFamily d_edges)
    : vertex_count_(vertex_count), c_edges_(std::move(c_edges)), d_edges_(std::move(d_edges)) {
  normalize_family(c_edges_, vertex_count_, "C-edge");
  normalize_family(d_edges_, vertex_count_, "D-edge");
}

MixedHypergraph MixedHypergraph::bi(std::size_t vertex_count, EdgeFamily edges) {
  EdgeFamily copy = edges;
  return MixedHypergraph(vertex_count, std::move(copy), std::move(edges));
}

bool MixedHypergraph::is_3_uniform() const {
  auto three = [](const Edge& e) { return e.size() == 3; };
  return std::all_of(c_edges_.begin(), c_edges_.end(), three) &&
         std::all_of(d_edges_.begin(), d_edges_.end(), three);
}

MixedHypergraph build_hypergraph(std::size_t vertex_count, EdgeFamily c_edges,
                                 EdgeFamily d_edges) {
  return MixedHypergraph(vertex_count, std::move(c_edges), std::move(d_edges));
}

// ---------------------------------------------------------------------------

Partition::Partition(std::span<const std::uint32_t> labels) {
  labels_.resize(labels.size());
  std::vector<ClassLabel> rename;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const std::uint32_t raw = labels[v];
    if (raw >= rename.size()) rename.resize(static_cast<std::size_t>(raw) + 1, kUnset);
    if (rename[raw] == kUnset) rename[raw] = static_cast<ClassLabel>(class_count_++);
    labels_[v] = rename[raw];
  }
}

Partition Partition::from_classes(std::size_t vertex_count,
                                  const std::vector<std::vector<Vertex>>& classes) {
  std::vector<std::uint32_t> labels(vertex_count, kUnset);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw std::invalid_argument("partition class " + std::to_string(c) + " is empty");
    for (Vertex v : classes[c]) {
      if (v >= vertex_count) {
        throw std::invalid_argument("partition names vertex " + std::to_string(v) +
                                    " outside [0," + std::to_string(vertex_count) + ")");
      }
      if (labels[v] != kUnset) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two classes");
      }
      labels[v] = static_cast<std::uint32_t>(c);
    }
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (labels[v] == kUnset) throw std::invalid_argument("vertex " + std::to_string(v) + " is in no class");
  }
  return Partition(labels);
}

std::vector<std::vector<Vertex>> Partition::classes() const {
  std::vector<std::vector<Vertex>> out(class_count_);
  for (std::size_t v = 0; v < labels_.size(); ++v) out[labels_[v]].push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<std::size_t> Partition::class_sizes() const {
  std::vector<std::size_t> out(class_count_, 0);
  for (ClassLabel c : labels_) ++out[c];
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  const auto cls = classes();
  for (std::size_t c = 0; c < cls.size(); ++c) {
    if (c) os << " | ";
    os << edge_to_string(cls[c]);
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::uint64_t ChromaticSpectrum::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::vector<std::size_t> ChromaticSpectrum::feasible() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= counts.size(); ++k) {
    if (counts[k - 1] > 0) out.push_back(k);
  }
  return out;
}

ChromaticSpectrum ChromaticSpectrum::from_table(std::span<const std::uint64_t> by_k) {
  ChromaticSpectrum s;
  if (by_k.size() > 1) s.counts.assign(by_k.begin() + 1, by_k.end());
  while (!s.counts.empty() && s.counts.back() == 0) s.counts.pop_back();
  return s;
}

// ---------------------------------------------------------------------------

VertexBijection::VertexBijection(std::vector<Vertex> forward) : forward_(std::move(forward)) {
  inverse_.assign(forward_.size(), std::numeric_limits<Vertex>::max());
  for (std::size_t v = 0; v < forward_.size(); ++v) {
    const Vertex w = forward_[v];
    if (w >= forward_.size() || inverse_[w] != std::numeric_limits<Vertex>::max()) {
      throw std::invalid_argument("vertex map is not a bijection: vertex " + std::to_string(v) +
                                  " maps to " + std::to_string(w));
    }
    inverse_[w] = static_cast<Vertex>(v);
  }
}

VertexBijection VertexBijection::identity(std::size_t n) {
  std::vector<Vertex> f(n);
  for (std::size_t v = 0; v < n; ++v) f[v] = static_cast<Vertex>(v);
  return VertexBijection(std::move(f));
}

// ---------------------------------------------------------------------------

InducedSubhypergraph induced_subhypergraph(const MixedHypergraph& h,
                                           std::span<const Vertex> subset) {
  std::vector<Vertex> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> index(h.vertex_count(), std::numeric_limits<Vertex>::max());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= h.vertex_count()) {
      throw std::invalid_argument("subset vertex " + std::to_string(keep[i]) +
                                  " out of range (vertex count " +
                                  std::to_string(h.vertex_count()) + ")");
    }
    index[keep[i]] = static_cast<Vertex>(i);
  }
  auto restrict = [&](const EdgeFamily& family) {
    EdgeFamily out;
    for (const Edge& e : family) {
      Edge mapped;
      for (Vertex v : e) {
        if (index[v] == std::numeric_limits<Vertex>::max()) break;
        mapped.push_back(index[v]);
      }
      if (mapped.size() == e.size()) out.push_back(std::move(mapped));
    }
    return out;
  };
  return {MixedHypergraph(keep.size(), restrict(h.c_edges()), restrict(h.d_edges())),
          std::move(keep)};
}

bool is_c_edge_satisfied(std::span<const Vertex> edge, const Partition& p) {
  return distinct_classes(edge, p) < edge.size();
}

bool is_d_edge_satisfied(std::span<const Vertex> edge, const Partition& p) {
  return distinct_classes(edge, p) >= 2;
}

bool is_proper(const MixedHypergraph& h, const Partition& p) {
  if (p.size() != h.vertex_count()) {
    throw std::invalid_argument("partition covers " + std::to_string(p.size()) +
                                " vertices, hypergraph has " +
                                std::to_string(h.vertex_count()));
  }
  for (const Edge& e : h.c_edges()) {
    if (!is_c_edge_satisfied(e, p)) return false;
  }
  for (const Edge& e : h.d_edges()) {
    if (!is_d_edge_satisfied(e, p)) return false;
  }
  return true;
}

std::size_t strict_class_count(const MixedHypergraph& h, const Partition& p) {
  if (!is_proper(h, p)) {
    throw ContractViolation("strict_class_count: coloring " + p.to_string() + " is not proper");
  }
  return p.class_count();
}

Partition merge_classes(const Partition& p, ClassLabel a, ClassLabel b) {
  if (a >= p.class_count() || b >= p.class_count()) {
    throw std::invalid_argument("merge_classes: unknown class label " +
                                std::to_string(a >= p.class_count() ? a : b) + " (partition has " +
                                std::to_string(p.class_count()) + " classes)");
  }
  if (a == b) throw std::invalid_argument("merge_classes: labels must differ");
  std::vector<std::uint32_t> labels(p.encoding().begin(), p.encoding().end());
  for (auto& c : labels) {
    if (c == b) c = a;
  }
  return Partition(labels);
}

Partition relabel_vertices(const Partition& p, const VertexBijection& f) {
  if (f.size() != p.size()) throw std::invalid_argument("relabel_vertices: size mismatch");
  std::vector<std::uint32_t> labels(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) labels[f(static_cast<Vertex>(v))] = p.class_of(static_cast<Vertex>(v));
  return Partition(labels);
}

MixedHypergraph permute_vertices(const MixedHypergraph& h, const VertexBijection& f) {
  if (f.size() != h.vertex_count()) throw std::invalid_argument("permute_vertices: size mismatch");
  return MixedHypergraph(h.vertex_count(), map_family(h.c_edges(), f), map_family(h.d_edges(), f));
}

bool check_isomorphism_under_map(const MixedHypergraph& h1, const MixedHypergraph& h2,
                                 const VertexBijection& f) {
  if (f.size() != h1.vertex_count() || f.size() != h2.vertex_count()) {
    throw std::invalid_argument("vertex map spans " + std::to_string(f.size()) +
                                " vertices but the hypergraphs have " +
                                std::to_string(h1.vertex_count()) + " and " +
                                std::to_string(h2.vertex_count()));
  }
  // Both families are sorted sets and f is injective on edges, so the image
  // equals the target family iff the sorted images coincide.
  return map_family(h1.c_edges(), f) == h2.c_edges() &&
         map_family(h1.d_edges(), f) == h2.d_edges();
}

}  // namespace bihyper
