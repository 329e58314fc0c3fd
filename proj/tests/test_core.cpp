#include "doctest.h"

#include <numeric>
#include <random>

#include "bihyper/construction.hpp"
#include "bihyper/core.hpp"
#include "oracles.hpp"

using namespace bihyper;

TEST_CASE("build_hypergraph normalizes and flags") {
  SUBCASE("smallest bi-hypergraph") {
    auto h = build_hypergraph(3, {{0, 1, 2}}, {{0, 1, 2}});
    CHECK(h.vertex_count() == 3);
    CHECK(h.is_bi());
    CHECK(h.is_3_uniform());
    CHECK(h.c_edges().size() == 1);
  }
  SUBCASE("edgeless is vacuously bi") {
    auto h = build_hypergraph(5, {}, {});
    CHECK(h.is_bi());
    CHECK(h.is_3_uniform());
    CHECK(h.c_edges().empty());
  }
  SUBCASE("duplicate edges collapse") {
    auto h = build_hypergraph(3, {{0, 1, 2}, {2, 1, 0}}, {});
    REQUIRE(h.c_edges().size() == 1);
    CHECK(h.c_edges()[0] == Edge{0, 1, 2});
    CHECK_FALSE(h.is_bi());
  }
  SUBCASE("edges sorted, families sorted") {
    auto h = build_hypergraph(4, {{3, 1, 2}, {2, 0, 1}}, {{1, 0}});
    CHECK(h.c_edges() == EdgeFamily{{0, 1, 2}, {1, 2, 3}});
    CHECK(h.d_edges() == EdgeFamily{{0, 1}});
    CHECK_FALSE(h.is_3_uniform());
  }
}

TEST_CASE("build_hypergraph rejects bad edges with the edge named") {
  CHECK_THROWS_WITH_AS(build_hypergraph(3, {{0, 1, 9}}, {}), doctest::Contains("{0,1,9}"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_hypergraph(3, {}, {{0, 0, 1}}), doctest::Contains("repeated"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_hypergraph(3, {{1}}, {}), doctest::Contains("at least 2"),
                       std::invalid_argument);
}

TEST_CASE("partition canonical form") {
  Partition p(std::vector<std::uint32_t>{7, 7, 3, 9, 3});
  CHECK(std::vector<ClassLabel>(p.encoding().begin(), p.encoding().end()) ==
        std::vector<ClassLabel>{0, 0, 1, 2, 1});
  CHECK(p.class_count() == 3);
  CHECK(p == Partition::from_classes(5, {{3}, {4, 2}, {1, 0}}));
  CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1, 2}, {}}), std::invalid_argument);
}

TEST_CASE("canonical encodings are unique per set partition (n <= 6, brute force)") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = oracle::all_set_partitions(n);
    std::set<std::vector<ClassLabel>> encodings;
    for (const auto& blocks : all) {
      Partition p = Partition::from_classes(n, blocks);
      encodings.insert({p.encoding().begin(), p.encoding().end()});
      // Any relabelling of the same blocks gives the same encoding.
      auto reversed = blocks;
      std::reverse(reversed.begin(), reversed.end());
      CHECK(Partition::from_classes(n, reversed) == p);
    }
    CHECK(encodings.size() == all.size());
  }
}

TEST_CASE("is_proper on a single bi-edge") {
  auto h = MixedHypergraph::bi(3, {{0, 1, 2}});
  CHECK(is_proper(h, Partition::from_classes(3, {{0, 1}, {2}})));
  CHECK_FALSE(is_proper(h, Partition::from_classes(3, {{0, 1, 2}})));
  CHECK_FALSE(is_proper(h, Partition::from_classes(3, {{0}, {1}, {2}})));
  CHECK_THROWS_AS(is_proper(h, Partition::from_classes(2, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("bi-edge characterization: proper iff every bi-edge meets exactly 2 classes") {
  std::mt19937_64 rng(11);
  for (std::size_t v = 3; v <= 6; ++v) {
    for (int trial = 0; trial < 6; ++trial) {
      auto h = oracle::random_bi3(rng, v, 0.35);
      for (const auto& blocks : oracle::all_set_partitions(v)) {
        Partition p = Partition::from_classes(v, blocks);
        bool every_two = true;
        for (const Edge& e : h.c_edges()) every_two = every_two && oracle::classes_on(e, blocks) == 2;
        CHECK(is_proper(h, p) == every_two);
      }
    }
  }
}

TEST_CASE("strict_class_count") {
  auto h = MixedHypergraph::bi(3, {{0, 1, 2}});
  CHECK(strict_class_count(h, Partition::from_classes(3, {{0, 1}, {2}})) == 2);
  CHECK(strict_class_count(MixedHypergraph(4, {}, {}), Partition(std::vector<std::uint32_t>{0, 1, 2, 3})) == 4);
  CHECK_THROWS_AS(strict_class_count(h, Partition::from_classes(3, {{0, 1, 2}})), ContractViolation);

  auto h42 = construct(FeasibleSpec({4, 2}), {.variant = Variant::I});
  CHECK(strict_class_count(h42.hypergraph, canonical_coloring(h42, 1)) == 4);
}

TEST_CASE("merge_classes") {
  auto p = Partition::from_classes(4, {{0}, {1}, {2, 3}});
  CHECK(merge_classes(p, 0, 1) == Partition::from_classes(4, {{0, 1}, {2, 3}}));
  auto q = Partition::from_classes(3, {{0, 1}, {2}});
  auto merged = merge_classes(q, 0, 1);
  CHECK(merged == Partition::from_classes(3, {{0, 1, 2}}));
  CHECK(merged.class_count() == 1);
  CHECK_THROWS_AS(merge_classes(q, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(merge_classes(q, 1, 1), std::invalid_argument);
}

TEST_CASE("merging never breaks the C-side (exhaustive, v <= 5)") {
  std::mt19937_64 rng(5);
  for (std::size_t v = 2; v <= 5; ++v) {
    for (int trial = 0; trial < 8; ++trial) {
      auto h = oracle::random_mixed(rng, v);
      const MixedHypergraph c_only(v, h.c_edges(), {});
      for (const auto& blocks : oracle::all_set_partitions(v)) {
        Partition p = Partition::from_classes(v, blocks);
        if (!is_proper(c_only, p) || p.class_count() < 2) continue;
        for (ClassLabel a = 0; a < p.class_count(); ++a) {
          for (ClassLabel b = a + 1; b < p.class_count(); ++b) {
            Partition m = merge_classes(p, a, b);
            CHECK(m.class_count() + 1 == p.class_count());
            CHECK(is_proper(c_only, m));
          }
        }
      }
    }
  }
}

TEST_CASE("merging two singleton classes keeps random 3-uniform bi-hypergraphs") {
  std::mt19937_64 rng(23);
  oracle::MergeTally tally;
  for (std::size_t v = 3; v <= 7; ++v) {
    for (int trial = 0; trial < 20; ++trial) {
      auto h = oracle::random_bi3(rng, v, 0.3);
      oracle::singleton_merge_check(h, oracle::strict_colorings(h), tally);
    }
  }
  CHECK(tally.merges_checked > 0);
  CHECK(tally.failures == 0);
}

TEST_CASE("induced_subhypergraph") {
  auto h = MixedHypergraph::bi(3, {{0, 1, 2}});
  auto sub = induced_subhypergraph(h, std::vector<Vertex>{0, 1});
  CHECK(sub.hypergraph.vertex_count() == 2);
  CHECK(sub.hypergraph.c_edges().empty());
  CHECK(sub.original == std::vector<Vertex>{0, 1});
  CHECK_THROWS_AS(induced_subhypergraph(h, std::vector<Vertex>{0, 3}), std::invalid_argument);

  auto h32 = construct(FeasibleSpec({3, 2}), {.variant = Variant::I});
  std::vector<Vertex> all(h32.labels.size());
  std::iota(all.begin(), all.end(), Vertex{0});
  CHECK(induced_subhypergraph(h32.hypergraph, all).hypergraph == h32.hypergraph);

  // Reindexing follows the sorted subset; mixed edges keep their side.
  auto m = MixedHypergraph(5, {{1, 3, 4}, {0, 2}}, {{3, 4}, {0, 1, 4}});
  auto ms = induced_subhypergraph(m, std::vector<Vertex>{4, 3, 1});
  CHECK(ms.original == std::vector<Vertex>{1, 3, 4});
  CHECK(ms.hypergraph.c_edges() == EdgeFamily{{0, 1, 2}});
  CHECK(ms.hypergraph.d_edges() == EdgeFamily{{1, 2}});
}

TEST_CASE("check_isomorphism_under_map") {
  auto h = MixedHypergraph(4, {{0, 1, 2}}, {{1, 3}});
  CHECK(check_isomorphism_under_map(h, h, VertexBijection::identity(4)));

  const VertexBijection swap03(std::vector<Vertex>{3, 1, 2, 0});
  CHECK(check_isomorphism_under_map(h, permute_vertices(h, swap03), swap03));
  CHECK_FALSE(check_isomorphism_under_map(h, h, swap03));

  auto edge = MixedHypergraph::bi(3, {{0, 1, 2}});
  CHECK_FALSE(check_isomorphism_under_map(edge, MixedHypergraph(3, {}, {}), VertexBijection::identity(3)));

  // C and D sides are not interchangeable.
  CHECK_FALSE(check_isomorphism_under_map(MixedHypergraph(3, {{0, 1, 2}}, {}),
                                          MixedHypergraph(3, {}, {{0, 1, 2}}),
                                          VertexBijection::identity(3)));
  CHECK_THROWS_AS(check_isomorphism_under_map(h, h, VertexBijection::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(VertexBijection(std::vector<Vertex>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(VertexBijection(std::vector<Vertex>{0, 3, 1}), std::invalid_argument);
}

TEST_CASE("chromatic spectrum type") {
  std::vector<std::uint64_t> table{0, 0, 3, 0, 0};
  auto s = ChromaticSpectrum::from_table(table);
  CHECK(s.counts == std::vector<std::uint64_t>{0, 3});
  CHECK(s.upper_chromatic() == 2);
  CHECK(s.total() == 3);
  CHECK(s.feasible() == std::vector<std::size_t>{2});
  CHECK(s.r(7) == 0);
  CHECK(ChromaticSpectrum::from_table(std::vector<std::uint64_t>{0, 0}).upper_chromatic() == 0);
}
