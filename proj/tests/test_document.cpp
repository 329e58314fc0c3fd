#include "doctest.h"

#include <random>

#include "bihyper/document.hpp"
#include "oracles.hpp"

using namespace bihyper;

TEST_CASE("construction round trip") {
  for (const char* text : {"4,2", "3,2", "5,3,2", "6,5,4,3,2"}) {
    CAPTURE(text);
    const auto lh = construct(FeasibleSpec::parse(text));
    const std::string bytes = serialize(lh);
    const auto doc = parse_document(bytes);
    CHECK(doc.is_construction());
    CHECK(doc.to_labeled() == lh);
    CHECK(serialize(doc) == bytes);
  }
  const auto forced = construct(FeasibleSpec({4, 2}), {.variant = Variant::II, .drop_special_edge = true});
  CHECK(parse_document(serialize(forced)).to_labeled() == forced);
}

TEST_CASE("plain mixed hypergraphs round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto h = oracle::random_mixed(rng, 1 + trial % 8);
    const auto doc = parse_document(serialize(h));
    CHECK(doc.hypergraph == h);
    CHECK_FALSE(doc.is_construction());
  }
  const auto empty = parse_document("bihyper-hypergraph 1\nvertices 0\n");
  CHECK(empty.hypergraph.vertex_count() == 0);
  CHECK(serialize(empty.hypergraph) == "bihyper-hypergraph 1\nvertices 0\nbi yes\n");
}

TEST_CASE("serialization is deterministic and order-insensitive on input") {
  const auto lh = construct(FeasibleSpec({4, 2}));
  CHECK(serialize(lh) == serialize(lh));
  const std::string shuffled =
      "bihyper-hypergraph 1\n"
      "# edges before the header fields\n"
      "c 2 0 1\n"
      "d 0 1 2\n"
      "vertices 3\n"
      "\n"
      "bi yes\n";
  const auto doc = parse_document(shuffled);
  CHECK(doc.hypergraph == MixedHypergraph::bi(3, {{0, 1, 2}}));
  CHECK(serialize(doc) == "bihyper-hypergraph 1\nvertices 3\nbi yes\nc 0 1 2\nd 0 1 2\n");
}

TEST_CASE("labels are renumbered into ascending order") {
  const std::string text =
      "bihyper-hypergraph 1\nvertices 3\nbi no\ns 1\n"
      "label 0 (2,0)\nlabel 1 (1,0)\nlabel 2 (1,1)\n"
      "c 0 1\n";
  const auto doc = parse_document(text);
  CHECK(doc.labels == std::vector<LabeledVertex>{LabeledVertex::parse("(1,0)"), LabeledVertex::parse("(1,1)"),
                                                 LabeledVertex::parse("(2,0)")});
  // Old vertex 0 = (2,0) is now vertex 2, old 1 = (1,0) is now 0.
  CHECK(doc.hypergraph.c_edges() == EdgeFamily{{0, 2}});
}

TEST_CASE("parse errors name the line") {
  auto fails = [](const std::string& text, const std::string& fragment) {
    CAPTURE(text);
    CHECK_THROWS_WITH_AS(parse_document(text), doctest::Contains(fragment.c_str()), ParseError);
  };
  fails("bihyper-hypergraph 1\nvertices 3\nc 0 1 9\n", "line 3");
  fails("bihyper-hypergraph 1\nvertices 3\nc 0 1 9\n", "{0,1,9}");
  fails("bihyper-hypergraph 1\nvertices 3\nbi yes\nc 0 1 2\n", "bi-hypergraph");
  fails("bihyper-hypergraph 1\nvertices 3\nvertices 4\n", "duplicate");
  fails("bihyper-hypergraph 2\nvertices 3\n", "version");
  fails("hypergraph\nvertices 3\n", "line 1");
  fails("bihyper-hypergraph 1\nc 0 1\n", "vertices");
  fails("bihyper-hypergraph 1\nvertices x\n", "line 2");
  fails("bihyper-hypergraph 1\nvertices 2\nbogus 1\n", "unknown key");
  fails("bihyper-hypergraph 1\nvertices 2\nspec 4,2\nvariant I\n", "labels");
  fails("bihyper-hypergraph 1\nvertices 2\nlabel 0 (1,0)\nlabel 1 (1,0)\n", "duplicate label");
  fails("bihyper-hypergraph 1\nvertices 2\nspec 3,2\nvariant I\nlabel 0 (1,1,0)\nlabel 1 (4,1,0)\n", "coordinate");
  fails("bihyper-hypergraph 1\nvertices 2\nlabel 0 (1,0)\n", "labels for");

  try {
    parse_document("bihyper-hypergraph 1\nvertices 3\n\nd 0 7\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("vertex maps") {
  const VertexBijection f(std::vector<Vertex>{2, 0, 1});
  const std::string text = serialize_map(f);
  CHECK(text == "bihyper-map 1\nsize 3\n0 2\n1 0\n2 1\n");
  CHECK(parse_map(text) == f);
  CHECK_THROWS_AS(parse_map("bihyper-map 1\nsize 3\n0 2\n1 2\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_map("bihyper-map 1\nsize 3\n0 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_map("bihyper-map 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_map("bihyper-map 1\nsize 2\n0 5\n1 0\n"), ParseError);
}
