#include "bihyper/minimality.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

namespace bihyper {

namespace {

constexpr std::uint64_t kBlock = 1 << 14;

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(i) for i in [0, count) on `threads` workers.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t lo = next.fetch_add(kChunk); lo < count; lo = next.fetch_add(kChunk)) {
      const std::size_t hi = std::min(count, lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i) body(i);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
}

std::string instance_count_text(std::size_t v) {
  std::ostringstream os;
  os << "2^" << triple_count(v);
  if (triple_count(v) < 64) os << " = " << (std::uint64_t{1} << triple_count(v));
  return os.str();
}

void check_vertex_cap(std::size_t v, std::size_t cap) {
  if (v > cap) {
    throw BudgetExceeded("bi-hypergraphs on " + std::to_string(v) + " vertices: " +
                         instance_count_text(v) + " instances, above the vertex cap " +
                         std::to_string(cap));
  }
}

}  // namespace

std::uint64_t triple_count(std::size_t v) {
  if (v < 3) return 0;
  return static_cast<std::uint64_t>(v) * (v - 1) * (v - 2) / 6;
}

TripleSpace::TripleSpace(std::size_t v) : v_(v), index_(v * v * v, 0) {
  if (v > 8) throw std::invalid_argument("TripleSpace supports at most 8 vertices, got " + std::to_string(v));
  for (Vertex a = 0; a < v; ++a) {
    for (Vertex b = a + 1; b < v; ++b) {
      for (Vertex c = b + 1; c < v; ++c) {
        index_[(a * v + b) * v + c] = triples_.size();
        triples_.push_back({a, b, c});
      }
    }
  }
  build_permutation_tables();
}

void TripleSpace::build_permutation_tables() {
  std::vector<Vertex> perm(v_);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    std::vector<std::uint8_t> row(triples_.size());
    for (std::size_t t = 0; t < triples_.size(); ++t) {
      std::array<Vertex, 3> img{perm[triples_[t][0]], perm[triples_[t][1]], perm[triples_[t][2]]};
      std::sort(img.begin(), img.end());
      row[t] = static_cast<std::uint8_t>(index_[(img[0] * v_ + img[1]) * v_ + img[2]]);
    }
    perm_tables_.push_back(std::move(row));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

MixedHypergraph TripleSpace::instance(std::uint64_t mask) const {
  EdgeFamily edges;
  for (std::size_t t = 0; t < triples_.size(); ++t) {
    if (mask >> t & 1) edges.push_back(triples_[t]);
  }
  return MixedHypergraph::bi(v_, std::move(edges));
}

std::uint64_t TripleSpace::mask_of(const MixedHypergraph& h) const {
  if (h.vertex_count() != v_ || !h.is_bi() || !h.is_3_uniform()) {
    throw std::invalid_argument("mask_of: expected a 3-uniform bi-hypergraph on " +
                                std::to_string(v_) + " vertices");
  }
  std::uint64_t mask = 0;
  for (const Edge& e : h.c_edges()) mask |= std::uint64_t{1} << index_[(e[0] * v_ + e[1]) * v_ + e[2]];
  return mask;
}

std::uint64_t TripleSpace::permute(std::uint64_t mask, std::span<const Vertex> perm) const {
  if (perm.size() != v_) throw std::invalid_argument("permute: permutation size mismatch");
  std::uint64_t out = 0;
  for (std::size_t t = 0; t < triples_.size(); ++t) {
    if (!(mask >> t & 1)) continue;
    std::array<Vertex, 3> img{perm[triples_[t][0]], perm[triples_[t][1]], perm[triples_[t][2]]};
    std::sort(img.begin(), img.end());
    out |= std::uint64_t{1} << index_[(img[0] * v_ + img[1]) * v_ + img[2]];
  }
  return out;
}

std::uint64_t TripleSpace::canonical_mask(std::uint64_t mask) const {
  std::uint64_t best = mask;
  for (const auto& row : perm_tables_) {
    std::uint64_t img = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      img |= std::uint64_t{1} << row[static_cast<std::size_t>(std::countr_zero(m))];
    }
    best = std::min(best, img);
  }
  return best;
}

bool TripleSpace::is_canonical(std::uint64_t mask) const {
  for (const auto& row : perm_tables_) {
    std::uint64_t img = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      img |= std::uint64_t{1} << row[static_cast<std::size_t>(std::countr_zero(m))];
    }
    if (img < mask) return false;
  }
  return true;
}

std::uint64_t default_budget() {
  const char* env = std::getenv(kBudgetEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw std::invalid_argument(std::string(kBudgetEnvVar) + "='" + env + "' is not a nonnegative integer");
  }
  return value;
}

// ---------------------------------------------------------------------------

void for_each_bi_hypergraph(std::size_t v, bool iso_reduce,
                            const std::function<bool(std::uint64_t, const MixedHypergraph&)>& fn,
                            std::size_t vertex_cap) {
  if (v < 3) throw std::invalid_argument("bi-hypergraph stream needs at least 3 vertices");
  check_vertex_cap(v, vertex_cap);
  const TripleSpace space(v);
  for (std::uint64_t mask = 0; mask < space.instance_count(); ++mask) {
    if (iso_reduce && !space.is_canonical(mask)) continue;
    if (!fn(mask, space.instance(mask))) return;
  }
}

BiHypergraphStream enumerate_bi_hypergraphs(std::size_t v, bool iso_reduce, std::size_t vertex_cap) {
  BiHypergraphStream out;
  for_each_bi_hypergraph(
      v, iso_reduce,
      [&](std::uint64_t mask, const MixedHypergraph& h) {
        out.masks.push_back(mask);
        out.hypergraphs.push_back(h);
        return true;
      },
      vertex_cap);
  out.instances_total = std::uint64_t{1} << triple_count(v);
  if (iso_reduce) out.classes = out.hypergraphs.size();
  return out;
}

// ---------------------------------------------------------------------------

std::string SearchCursor::to_string() const {
  return std::to_string(vertices) + ":" + std::to_string(index);
}

SearchCursor SearchCursor::parse(const std::string& text) {
  const auto colon = text.find(':');
  auto bad = [&] { return std::invalid_argument("cursor '" + text + "' is not of the form V:INDEX"); };
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) throw bad();
  const std::string v = text.substr(0, colon), idx = text.substr(colon + 1);
  auto digits = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(v) || !digits(idx)) throw bad();
  SearchCursor c{static_cast<std::size_t>(std::stoull(v)), std::stoull(idx)};
  if (c.vertices < 3) throw std::invalid_argument("cursor '" + text + "': vertex count must be >= 3");
  if (c.vertices <= 8 && c.index >= (std::uint64_t{1} << triple_count(c.vertices))) {
    throw std::invalid_argument("cursor '" + text + "': index past the last instance");
  }
  return c;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedNone: return "certified-none";
    case Verdict::WitnessFound: return "witness-found";
    case Verdict::AbortedBudget: return "aborted-budget";
  }
  return "?";
}

std::uint64_t SearchReport::total_scanned() const {
  std::uint64_t n = 0;
  for (const auto& p : progress) n += p.scanned;
  return n;
}

std::uint64_t SearchReport::total_examined() const {
  std::uint64_t n = 0;
  for (const auto& p : progress) n += p.examined;
  return n;
}

SearchReport certify_lower_bound(const FeasibleSpec& spec, const SearchOptions& options) {
  SearchReport report{spec, {}, {}, 0, Verdict::CertifiedNone, std::nullopt, {}};
  const std::vector<std::size_t> target = spec.as_set();
  const unsigned threads = resolve_threads(options.threads);
  const SearchCursor start = options.resume.value_or(SearchCursor{});
  std::uint64_t remaining = options.budget;

  auto abort_at = [&](SearchCursor at, std::string why) {
    report.cursor = at;
    report.abort_reason = std::move(why);
  };

  for (std::size_t v = std::max<std::size_t>(3, start.vertices); v <= options.max_vertices; ++v) {
    if (v > options.vertex_cap) {
      abort_at({v, 0}, "bi-hypergraphs on " + std::to_string(v) + " vertices: " +
                           instance_count_text(v) + " instances, above the vertex cap " +
                           std::to_string(options.vertex_cap));
      break;
    }
    const TripleSpace space(v);
    VertexCountProgress prog{v};
    std::uint64_t index = v == start.vertices ? start.index : 0;
    const std::uint64_t total = space.instance_count();

    while (index < total) {
      const std::uint64_t hi = std::min(total, index + kBlock);
      std::vector<std::uint64_t> candidates;
      if (options.iso_reduce) {
        std::vector<char> canonical(hi - index);
        parallel_for(canonical.size(), threads,
                     [&](std::size_t i) { canonical[i] = space.is_canonical(index + i) ? 1 : 0; });
        for (std::size_t i = 0; i < canonical.size(); ++i) {
          if (canonical[i]) candidates.push_back(index + i);
        }
      } else {
        candidates.resize(hi - index);
        std::iota(candidates.begin(), candidates.end(), index);
      }

      std::uint64_t stop = hi;
      if (candidates.size() > remaining) {
        stop = candidates[remaining];
        candidates.resize(remaining);
      }

      std::vector<std::optional<OneRealizationResult>> found(candidates.size());
      parallel_for(candidates.size(), threads, [&](std::size_t i) {
        auto result = is_one_realization(space.instance(candidates[i]), target);
        if (result.holds) found[i] = std::move(result);
      });
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!found[i]) continue;
        ++report.witness_count;
        if (report.witnesses.size() < options.max_witnesses) {
          report.witnesses.push_back(
              {v, candidates[i], space.instance(candidates[i]), std::move(*found[i])});
        }
      }
      prog.scanned += stop - index;
      prog.examined += candidates.size();
      remaining -= candidates.size();
      index = stop;
      if (stop < hi) break;
    }

    prog.complete = index == total;
    report.progress.push_back(prog);
    if (!prog.complete) {
      abort_at({v, index}, "budget of " + std::to_string(options.budget) +
                               " one-realization tests exhausted");
      break;
    }
  }

  if (report.witness_count > 0) {
    report.verdict = Verdict::WitnessFound;
  } else if (report.cursor) {
    report.verdict = Verdict::AbortedBudget;
  }
  return report;
}

}  // namespace bihyper
