#include <gtest/gtest.h>

#include <filesystem>

#include "catcheck/io/description.hpp"

using namespace catcheck;

namespace {

  std::filesystem::path corpus(std::string const& name) {
    return std::filesystem::path(CATCHECK_CORPUS_DIR) / name;
  }

  DescriptionError parse_error(std::string const& text) {
    try {
      auto const doc = Document::parse(text);
      if (doc.kind() == "algebra" || doc.kind() == "bialgebra") {
        (void)read_algebra(doc);
      } else if (doc.kind() == "finite_category") {
        (void)read_finite_category(doc);
      } else if (doc.kind() == "category") {
        (void)read_monoidal(doc);
      }
    } catch (DescriptionError const& e) {
      return e;
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return DescriptionError("", 0, "");
  }

}  // namespace

TEST(Description, CorpusLoads) {
  for (auto const& entry : std::filesystem::directory_iterator(CATCHECK_CORPUS_DIR)) {
    if (entry.path().extension() != ".json") {
      continue;
    }
    auto const doc = Document::load(entry.path());
    auto const& k  = doc.kind();
    if (k == "algebra" || k == "bialgebra") {
      EXPECT_NO_THROW((void)read_algebra(doc)) << entry.path();
    } else if (k == "category") {
      EXPECT_NO_THROW((void)read_monoidal(doc)) << entry.path();
    } else if (k == "finite_category") {
      EXPECT_NO_THROW((void)read_finite_category(doc)) << entry.path();
    } else if (k == "simplicial_set") {
      EXPECT_NO_THROW((void)read_simplicial_set(doc)) << entry.path();
    } else {
      EXPECT_EQ(k, "coherent_cube");
      EXPECT_NO_THROW((void)read_coherent_cube(doc)) << entry.path();
    }
  }
}

TEST(Description, MonoidTablesBecomeGroupAlgebras) {
  auto const a = std::get<AlgebraInstance<MatrixCategory>>(read_algebra(Document::load(corpus("f2_s3.json"))));
  ASSERT_TRUE(a.monoid.has_value());
  EXPECT_TRUE(a.monoid->is_group());
  EXPECT_EQ(a.algebra.carrier, 6u);
  EXPECT_TRUE(a.bialgebra->antipode.has_value());
}

TEST(Description, PrimeOverride) {
  LoadOptions o;
  o.prime_override = 5;
  auto const a = std::get<AlgebraInstance<MatrixCategory>>(
      read_algebra(Document::load(corpus("f2_c2.json")), o));
  EXPECT_EQ(a.category.ring(), Ring::prime_field(5));
}

TEST(Description, EmptyAndMalformedJson) {
  auto const e = parse_error("");
  EXPECT_EQ(e.path(), "");
  EXPECT_EQ(e.line(), 1u);
  auto const f = parse_error("{\n  \"schema\": \"catcheck/v1\",\n  \"kind\": \n}");
  EXPECT_EQ(f.line(), 4u);
}

TEST(Description, SchemaAndKind) {
  auto const e = parse_error("{\n  \"schema\": \"catcheck/v0\",\n  \"kind\": \"algebra\"\n}");
  EXPECT_EQ(e.path(), "/schema");
  EXPECT_EQ(e.line(), 2u);
  auto const k = parse_error("{\n  \"schema\": \"catcheck/v1\",\n  \"kind\": \"sheaf\"\n}");
  EXPECT_EQ(k.path(), "/kind");
  EXPECT_EQ(k.line(), 3u);
  EXPECT_NE(std::string(k.what()).find("/kind:3:"), std::string::npos);
}

TEST(Description, MatrixShapeNamesTheRow) {
  auto const e = parse_error(R"({
  "schema": "catcheck/v1",
  "kind": "algebra",
  "category": {"type": "matrix", "ring": {"prime": 2}},
  "carrier": 2,
  "mu": [
    [1, 0, 0, 1],
    [0, 1, 1]
  ],
  "eta": [[1], [0]]
})");
  EXPECT_EQ(e.path(), "/mu/1");
  EXPECT_EQ(e.line(), 8u);
  EXPECT_NE(e.rule().find("entries"), std::string::npos);
}

TEST(Description, RingMustBePrime) {
  auto const e = parse_error(R"({
  "schema": "catcheck/v1",
  "kind": "bialgebra",
  "category": {"type": "matrix", "ring": {"prime": 6}},
  "monoid": {"elements": ["e"], "table": [[0]]}
})");
  EXPECT_EQ(e.path().rfind("/category/ring", 0), 0u) << e.path();
  EXPECT_EQ(e.line(), 4u);
}

TEST(Description, MonoidTableMustBeAssociative) {
  auto const e = parse_error(R"({
  "schema": "catcheck/v1",
  "kind": "bialgebra",
  "category": {"type": "matrix", "ring": {"prime": 2}},
  "monoid": {"elements": ["e", "a", "b"],
             "table": [[0, 1, 2], [1, 2, 0], [2, 1, 0]]}
})");
  EXPECT_EQ(e.path(), "/monoid/table");
  EXPECT_EQ(e.line(), 6u);
}

TEST(Description, FiniteCategoryMissingComposite) {
  auto const e = parse_error(R"({
  "schema": "catcheck/v1",
  "kind": "finite_category",
  "objects": ["a", "b"],
  "arrows": [{"name": "1a", "from": "a", "to": "a"}, {"name": "1b", "from": "b", "to": "b"},
             {"name": "f", "from": "a", "to": "b"}, {"name": "e", "from": "a", "to": "a"}],
  "identities": ["1a", "1b"],
  "composition": [["e", "e", "e"]]
})");
  EXPECT_EQ(e.path(), "/composition");
  EXPECT_NE(e.rule().find("f∘e"), std::string::npos) << e.rule();
}

TEST(Description, MonoidWitnessFeedsBack) {
  auto const m   = Monoid::idempotent();
  nlohmann::json j{{"schema", kSchemaTag},
                   {"kind", "bialgebra"},
                   {"category", {{"type", "finset"}}},
                   {"monoid", m.to_json()}};
  auto const a = std::get<AlgebraInstance<FinSetCategory>>(read_algebra(Document::parse(j.dump())));
  EXPECT_EQ(a.monoid->table(), m.table());
}
