#include "bihyper/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <thread>

namespace bihyper {

namespace {

// Edge checks are attached to the position of the edge's last-assigned
// vertex, so every check sees a fully assigned edge and runs once per node.
struct EdgeCheck {
  std::uint32_t begin;
  std::uint32_t end;
  bool c_side;
  bool d_side;
};

class ColoringSearch {
 public:
  ColoringSearch(const MixedHypergraph& h, std::vector<Vertex> order)
      : n_(h.vertex_count()), order_(std::move(order)) {
    std::vector<Vertex> position(n_);
    for (std::size_t p = 0; p < n_; ++p) position[order_[p]] = static_cast<Vertex>(p);

    std::map<Edge, std::pair<bool, bool>> sides;
    for (const Edge& e : h.c_edges()) sides[e].first = true;
    for (const Edge& e : h.d_edges()) sides[e].second = true;

    std::vector<std::vector<std::pair<Edge, std::pair<bool, bool>>>> at(n_);
    for (const auto& [edge, flags] : sides) {
      Edge positions;
      for (Vertex v : edge) positions.push_back(position[v]);
      const Vertex last = *std::max_element(positions.begin(), positions.end());
      at[last].push_back({std::move(positions), flags});
    }
    check_begin_.assign(n_ + 1, 0);
    for (std::size_t p = 0; p < n_; ++p) {
      check_begin_[p] = static_cast<std::uint32_t>(checks_.size());
      for (auto& [positions, flags] : at[p]) {
        const auto b = static_cast<std::uint32_t>(edge_positions_.size());
        edge_positions_.insert(edge_positions_.end(), positions.begin(), positions.end());
        checks_.push_back({b, static_cast<std::uint32_t>(edge_positions_.size()), flags.first,
                           flags.second});
      }
    }
    check_begin_[n_] = static_cast<std::uint32_t>(checks_.size());
  }

  std::size_t size() const { return n_; }
  std::span<const Vertex> order() const { return order_; }

  struct State {
    std::vector<ClassLabel> classes;  // by position
    std::size_t depth = 0;            // positions assigned
    ClassLabel used = 0;              // classes opened so far
  };

  State root() const { return State{std::vector<ClassLabel>(n_, 0), 0, 0}; }

  // Visits every completion of `state`. on_leaf(classes, k) returns false to
  // stop the whole search. If stop_depth < n, on_frontier(state) receives the
  // partial states at that depth instead of descending further.
  template <class Leaf, class Frontier>
  bool explore(State& state, std::uint64_t& nodes, std::size_t stop_depth, Leaf& on_leaf,
               Frontier& on_frontier) const {
    const std::size_t pos = state.depth;
    if (pos == n_) return on_leaf(std::span<const ClassLabel>(state.classes), state.used);
    if (pos == stop_depth) return on_frontier(state);
    const ClassLabel used = state.used;
    for (ClassLabel c = 0; c <= used; ++c) {
      state.classes[pos] = c;
      if (!consistent(state.classes, pos)) continue;
      ++nodes;
      state.depth = pos + 1;
      state.used = c == used ? used + 1 : used;
      const bool go_on = explore(state, nodes, stop_depth, on_leaf, on_frontier);
      state.depth = pos;
      state.used = used;
      if (!go_on) return false;
    }
    return true;
  }

  Partition to_partition(std::span<const ClassLabel> by_position) const {
    std::vector<std::uint32_t> labels(n_);
    for (std::size_t p = 0; p < n_; ++p) labels[order_[p]] = by_position[p];
    return Partition(labels);
  }

 private:
  bool consistent(const std::vector<ClassLabel>& classes, std::size_t pos) const {
    for (std::uint32_t i = check_begin_[pos]; i < check_begin_[pos + 1]; ++i) {
      const EdgeCheck& chk = checks_[i];
      const std::size_t size = chk.end - chk.begin;
      std::size_t distinct = 0;
      for (std::uint32_t a = chk.begin; a < chk.end; ++a) {
        bool seen = false;
        for (std::uint32_t b = chk.begin; b < a && !seen; ++b) {
          seen = classes[edge_positions_[a]] == classes[edge_positions_[b]];
        }
        if (!seen) ++distinct;
      }
      if (chk.c_side && distinct == size) return false;
      if (chk.d_side && distinct == 1) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<EdgeCheck> checks_;
  std::vector<Vertex> edge_positions_;
  std::vector<std::uint32_t> check_begin_;
};

// Per-worker accumulator. With a limit it keeps the `limit` smallest
// colorings in a max-heap.
struct Collector {
  std::optional<std::size_t> limit;
  std::vector<std::uint64_t> by_k;
  std::uint64_t nodes = 0;
  std::vector<Partition> colorings;
  std::priority_queue<Partition> heap;

  Collector(std::size_t n, std::optional<std::size_t> cap) : limit(cap), by_k(n + 1, 0) {}

  void add(Partition p) {
    ++by_k[p.class_count()];
    if (!limit) {
      colorings.push_back(std::move(p));
    } else if (*limit > 0) {
      if (heap.size() < *limit) {
        heap.push(std::move(p));
      } else if (p < heap.top()) {
        heap.pop();
        heap.push(std::move(p));
      }
    }
  }

  std::vector<Partition> take() {
    if (limit) {
      while (!heap.empty()) {
        colorings.push_back(heap.top());
        heap.pop();
      }
    }
    return std::move(colorings);
  }
};

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<Vertex> checked_order(const MixedHypergraph& h, const EnumerationOptions& options) {
  if (!options.order) return default_vertex_order(h);
  std::vector<Vertex> order = *options.order;
  if (order.size() != h.vertex_count()) {
    throw std::invalid_argument("vertex order has " + std::to_string(order.size()) +
                                " entries, hypergraph has " + std::to_string(h.vertex_count()) +
                                " vertices");
  }
  VertexBijection check(order);  // throws unless a permutation
  return order;
}

}  // namespace

std::vector<Vertex> default_vertex_order(const MixedHypergraph& h) {
  std::vector<std::size_t> degree(h.vertex_count(), 0);
  for (const Edge& e : h.c_edges()) {
    for (Vertex v : e) ++degree[v];
  }
  for (const Edge& e : h.d_edges()) {
    for (Vertex v : e) ++degree[v];
  }
  std::vector<Vertex> order(h.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
  return order;
}

EnumerationReport enumerate_strict_colorings(const MixedHypergraph& h,
                                             const EnumerationOptions& options) {
  EnumerationReport report;
  const std::size_t n = h.vertex_count();
  // A strict coloring has at least one class, so the empty vertex set has none.
  if (n == 0) return report;

  const ColoringSearch search(h, checked_order(h, options));
  const unsigned threads = resolve_threads(options.threads);

  std::vector<Collector> collectors;
  collectors.emplace_back(n, options.limit);
  auto on_leaf_into = [&search](Collector& col) {
    return [&search, &col](std::span<const ClassLabel> by_position, std::size_t) {
      col.add(search.to_partition(by_position));
      return true;
    };
  };

  if (threads <= 1 || n < 4) {
    auto leaf = on_leaf_into(collectors[0]);
    auto no_frontier = [](const ColoringSearch::State&) { return true; };
    auto state = search.root();
    collectors[0].nodes = 1;
    search.explore(state, collectors[0].nodes, n, leaf, no_frontier);
  } else {
    // Split on a prefix of the assignment order deep enough to give every
    // worker several subtrees.
    std::vector<ColoringSearch::State> frontier;
    std::uint64_t prefix_nodes = 0;
    for (std::size_t depth = 1; depth < n; ++depth) {
      frontier.clear();
      prefix_nodes = 1;
      auto leaf = [](std::span<const ClassLabel>, std::size_t) { return true; };
      auto keep = [&frontier](const ColoringSearch::State& s) {
        frontier.push_back(s);
        return true;
      };
      auto state = search.root();
      search.explore(state, prefix_nodes, depth, leaf, keep);
      if (frontier.size() >= 8 * static_cast<std::size_t>(threads)) break;
    }
    collectors[0].nodes = prefix_nodes;
    for (unsigned t = 1; t < threads; ++t) collectors.emplace_back(n, options.limit);

    std::atomic<std::size_t> next{0};
    auto work = [&](Collector& col) {
      auto leaf = on_leaf_into(col);
      auto no_frontier = [](const ColoringSearch::State&) { return true; };
      for (std::size_t i = next++; i < frontier.size(); i = next++) {
        ColoringSearch::State state = frontier[i];
        search.explore(state, col.nodes, n, leaf, no_frontier);
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, std::ref(collectors[t]));
    work(collectors[0]);
  }

  std::vector<std::uint64_t> by_k(n + 1, 0);
  for (Collector& col : collectors) {
    report.nodes_explored += col.nodes;
    for (std::size_t k = 0; k <= n; ++k) by_k[k] += col.by_k[k];
    auto part = col.take();
    report.colorings.insert(report.colorings.end(), std::make_move_iterator(part.begin()),
                            std::make_move_iterator(part.end()));
  }
  std::sort(report.colorings.begin(), report.colorings.end());
  if (options.limit && report.colorings.size() > *options.limit) {
    report.colorings.resize(*options.limit);
  }
  report.spectrum = ChromaticSpectrum::from_table(by_k);
  report.feasible = report.spectrum.feasible();
  return report;
}

ChromaticSpectrum chromatic_spectrum(const MixedHypergraph& h) {
  EnumerationOptions count_only;
  count_only.limit = 0;
  return enumerate_strict_colorings(h, count_only).spectrum;
}

std::vector<std::size_t> feasible_set(const MixedHypergraph& h) {
  return chromatic_spectrum(h).feasible();
}

OneRealizationResult is_one_realization(const MixedHypergraph& h,
                                        std::span<const std::size_t> target) {
  std::vector<std::size_t> wanted(target.begin(), target.end());
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  if (wanted.empty() || wanted.front() < 1) {
    throw std::invalid_argument("is_one_realization: target must be a nonempty set of positive integers");
  }

  OneRealizationResult result;
  const std::size_t n = h.vertex_count();
  std::vector<std::optional<Partition>> first(n + 1);
  if (n > 0) {
    const ColoringSearch search(h, default_vertex_order(h));
    auto leaf = [&](std::span<const ClassLabel> by_position, std::size_t k) {
      ++result.colorings_seen;
      Partition p = search.to_partition(by_position);
      if (!std::binary_search(wanted.begin(), wanted.end(), k)) {
        result.violation = OneRealizationResult::Violation::UnexpectedClassCount;
        result.k = k;
        result.witnesses = {std::move(p)};
        return false;
      }
      if (first[k]) {
        result.violation = OneRealizationResult::Violation::Multiplicity;
        result.k = k;
        result.witnesses = {*first[k], std::move(p)};
        std::sort(result.witnesses.begin(), result.witnesses.end());
        return false;
      }
      first[k] = std::move(p);
      return true;
    };
    auto no_frontier = [](const ColoringSearch::State&) { return true; };
    auto state = search.root();
    std::uint64_t nodes = 1;
    search.explore(state, nodes, n, leaf, no_frontier);
  }
  if (result.violation != OneRealizationResult::Violation::None) return result;

  for (std::size_t k : wanted) {
    if (k > n || !first[k]) {
      result.violation = OneRealizationResult::Violation::MissingClassCount;
      result.k = k;
      return result;
    }
  }
  result.holds = true;
  for (std::size_t k : wanted) result.witnesses.push_back(*first[k]);
  return result;
}

std::string OneRealizationResult::describe() const {
  std::ostringstream os;
  switch (violation) {
    case Violation::None:
      os << "one-realization: one strict coloring for each of " << witnesses.size()
         << " class counts, none elsewhere";
      break;
    case Violation::UnexpectedClassCount:
      os << "not a realization: strict " << k << "-coloring exists but " << k
         << " is not in the target set";
      break;
    case Violation::MissingClassCount:
      os << "not a realization: no strict " << k << "-coloring exists";
      break;
    case Violation::Multiplicity:
      os << "not a one-realization: at least two distinct strict " << k << "-colorings";
      break;
  }
  return os.str();
}

}  // namespace bihyper
