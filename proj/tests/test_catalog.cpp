#include "chardeg/catalog.hpp"

#include <gtest/gtest.h>

using namespace chardeg;

namespace {

std::string error_of(const std::string &text) {
  try {
    parse_catalog(text);
  } catch (const CatalogError &e) {
    return e.what();
  }
  return "";
}

const CatalogGroup &by_label(const std::vector<CatalogGroup> &catalog, const std::string &label) {
  for (const auto &g : catalog)
    if (g.label() == label) return g;
  throw std::out_of_range(label);
}

} // namespace

TEST(Catalog, ParsesNestedAndFlatMatrices) {
  const auto entries = parse_catalog(R"([
    {"label": "a", "p": 3, "dim": 2, "generators": [[[2, 0], [0, 1]], [5, -2, 2, 0]],
     "metadata": {"order": "48", "solvable": true, "expected_checks": ["x"], "note": "n"}}
  ])");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].generators[1], FpMatrix::from_entries(3, 2, {2, 1, 2, 0}));
  EXPECT_EQ(*entries[0].metadata.claimed_order, 48);
  EXPECT_EQ(entries[0].metadata.label, "a");
  EXPECT_TRUE(entries[0].metadata.expects("x"));
  EXPECT_EQ(entries[0].position, "entries[0]");
}

TEST(Catalog, PositionPreciseErrors) {
  EXPECT_NE(error_of(R"([{"label": "a", "p": 3, "dim": 2, "generators": [[[1, 0], [0, "x"]]]}])")
                .find("entries[0].generators[0][1][1]"),
            std::string::npos);
  EXPECT_NE(error_of(R"([{"label": "a", "p": 3, "dim": 2, "generators": [[[1, 0]]]}])").find("entries[0].generators[0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"([{"label": "a", "p": 4, "dim": 2}])").find("entries[0].p"), std::string::npos);
  EXPECT_NE(error_of(R"([{"label": "a", "p": 3, "dim": 9}])").find("entries[0].dim"), std::string::npos);
  EXPECT_NE(error_of(R"([{"label": "a", "p": 3, "dim": 1}, {"label": "a", "p": 3, "dim": 1}])").find("entries[1].label"),
            std::string::npos);
  EXPECT_NE(error_of(R"([{"label": "a", "p": 3, "dim": 1, "colour": 1}])").find("entries[0].colour"), std::string::npos);
  EXPECT_NE(error_of(R"([{"label": "a", "p": 3, "dim": 1, "metadata": {"size": 3}}])").find("entries[0].metadata.size"),
            std::string::npos);
  EXPECT_NE(error_of(R"([{"label": "a", "p": 3, "dim": 1, "construct": {"op": "tensor", "of": "b"}}])")
                .find("entries[0].construct.op"),
            std::string::npos);
  EXPECT_NE(error_of(R"([{"label": "a", "p": 3, "dim": 1}, {"p": 3}])").find("entries[1]"), std::string::npos);
  EXPECT_FALSE(error_of("[").empty());
  EXPECT_FALSE(error_of(R"({"entries": []})").empty());
}

TEST(Catalog, OrderMismatchIsEntryLevel) {
  const auto catalog = ingest_catalog(std::string(CHARDEG_TEST_DATA_DIR) + "/order_mismatch_catalog.json");
  ASSERT_EQ(catalog.size(), 2u);
  EXPECT_EQ(catalog[0].status, EntryStatus::Error);
  EXPECT_NE(catalog[0].message.find("claimed order 47"), std::string::npos);
  EXPECT_NE(catalog[0].message.find("48"), std::string::npos);
  EXPECT_EQ(catalog[1].status, EntryStatus::Ready);
  EXPECT_EQ(catalog[1].table->order(), 6u);
}

TEST(Catalog, GatingAndConstructions) {
  const auto catalog = build_catalog(parse_catalog(R"([
    {"label": "G", "p": 2, "dim": 2, "generators": [[[1, 1], [0, 1]], [[0, 1], [1, 0]]]},
    {"label": "W", "p": 2, "dim": 4, "construct": {"op": "wreath", "of": "G", "k": 2}, "metadata": {"order": 72}},
    {"label": "S", "p": 2, "dim": 4, "construct": {"op": "direct_sum", "of": ["G", "G"]}},
    {"label": "A", "kind": "affine", "p": 2, "dim": 2, "generators": [[[1, 1], [0, 1]], [[0, 1], [1, 0]]],
     "metadata": {"order": 24}},
    {"label": "gated", "p": 3, "dim": 4, "generators": [], "metadata": {"expected_checks": ["k-le-module"]}},
    {"label": "bad-source", "p": 2, "dim": 4, "construct": {"op": "wreath", "of": "missing", "k": 2}}
  ])"));
  EXPECT_EQ(by_label(catalog, "W").status, EntryStatus::Ready);
  EXPECT_EQ(by_label(catalog, "W").linear->order(), 72u);
  EXPECT_EQ(by_label(catalog, "S").table->order(), 36u);
  EXPECT_EQ(by_label(catalog, "A").table->order(), 24u);
  EXPECT_EQ(by_label(catalog, "A").linear->order(), 6u);
  EXPECT_EQ(by_label(catalog, "gated").status, EntryStatus::AwaitingGenerators);
  EXPECT_FALSE(by_label(catalog, "gated").table);
  EXPECT_EQ(by_label(catalog, "bad-source").status, EntryStatus::Error);
  EXPECT_NE(by_label(catalog, "bad-source").message.find("missing"), std::string::npos);
}

TEST(Catalog, CapExceededIsEntryLevel) {
  const auto catalog = build_catalog(parse_catalog(R"([
    {"label": "big", "p": 3, "dim": 2, "generators": [[[2, 0], [0, 1]], [[2, 1], [2, 0]]]},
    {"label": "small", "p": 5, "dim": 1, "generators": [[[2]]]}
  ])"), 20);
  EXPECT_EQ(catalog[0].status, EntryStatus::Error);
  EXPECT_EQ(catalog[1].status, EntryStatus::Ready);
}

TEST(Catalog, BundledCatalog) {
  const auto catalog = ingest_catalog(std::string(CHARDEG_DATA_DIR) + "/catalog.json");
  EXPECT_GE(catalog.size(), 8u);
  std::size_t ready = 0, awaiting = 0;
  for (const auto &g : catalog) {
    EXPECT_NE(g.status, EntryStatus::Error) << g.label() << ": " << g.message;
    if (g.status == EntryStatus::Ready) {
      ++ready;
      if (g.metadata().claimed_order) { EXPECT_EQ(*g.metadata().claimed_order, g.table->order()) << g.label(); }
    }
    if (g.status == EntryStatus::AwaitingGenerators) ++awaiting;
  }
  EXPECT_EQ(ready, 12u);
  EXPECT_EQ(awaiting, 4u);
  for (const char *label : {"GL(2,2)", "GL(2,3)", "SL(2,3)", "GL(1,5)", "GL(2,2)wrS3", "GL(2,3)wrS2", "AGL(2,3)"})
    EXPECT_EQ(by_label(catalog, label).status, EntryStatus::Ready) << label;
  EXPECT_EQ(by_label(catalog, "H1152<GL(4,3)").status, EntryStatus::AwaitingGenerators);
  EXPECT_THROW(ingest_catalog("/nonexistent/catalog.json"), CatalogError);
}
