#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "posetpart/error.hpp"
#include "posetpart/text_format.hpp"

using namespace posetpart;

namespace {

struct Failure {
  ErrorCode code;
  std::optional<std::size_t> line;
};

Failure failure_of(const std::function<void()>& action) {
  try {
    action();
  } catch (const Error& e) {
    return {e.code(), e.line()};
  }
  ADD_FAILURE() << "no error thrown";
  return {ErrorCode::internal_invariant_violation, std::nullopt};
}

std::vector<PosetDocument> loaded() {
  return {{"V", fixture::V()}, {"C2", fixture::C2()}, {"C1", fixture::C1()}};
}

}  // namespace

TEST(ParsePoset, FixtureV) {
  const PosetDocument doc = parse_poset("poset V\nelements a b c\ncover a c\ncover b c\n");
  EXPECT_EQ(doc.name, "V");
  EXPECT_EQ(doc.poset, fixture::V());
}

TEST(ParsePoset, CommentsBlankLinesAndSplitElements) {
  const PosetDocument doc = parse_poset(
      "# leading comment\n\n  poset   V  # trailing\r\nelements a\telements_are_tokens\n");
  EXPECT_EQ(doc.poset.labels(), (std::vector<std::string>{"a", "elements_are_tokens"}));
  const PosetDocument two = parse_poset("poset X\nelements a b\nelements c\ncover a c\n");
  EXPECT_EQ(two.poset.size(), 3u);
}

TEST(ParsePoset, UnknownLabelReportsLine) {
  const Failure f = failure_of([] { parse_poset("poset X\nelements a\ncover a b\n"); });
  EXPECT_EQ(f.code, ErrorCode::unknown_label);
  EXPECT_EQ(f.line, 3u);
}

TEST(ParsePoset, CycleReportsClosingLine) {
  const Failure f = failure_of([] { parse_poset("poset L\nelements a b\ncover a b\ncover b a\n"); });
  EXPECT_EQ(f.code, ErrorCode::cycle_detected);
  EXPECT_EQ(f.line, 4u);
}

TEST(ParsePoset, SyntaxErrors) {
  EXPECT_EQ(failure_of([] { parse_poset(""); }).code, ErrorCode::syntax_error);
  EXPECT_EQ(failure_of([] { parse_poset("elements a\n"); }).line, 1u);
  const Failure extra = failure_of([] { parse_poset("poset A\nelements a\ncover a\n"); });
  EXPECT_EQ(extra.code, ErrorCode::syntax_error);
  EXPECT_EQ(extra.line, 3u);
  EXPECT_EQ(failure_of([] { parse_poset("poset A\nelements a a\n"); }).code,
            ErrorCode::duplicate_label);
  EXPECT_EQ(failure_of([] { parse_poset("poset A\nposet B\n"); }).line, 2u);
  EXPECT_EQ(failure_of([] { parse_poset("poset A\nfrobnicate\n"); }).line, 2u);
}

TEST(ParsePartition, OrderedDocument) {
  const auto posets = loaded();
  const PartitionDocument doc =
      parse_partition("partition of V\nblock B1 = a c\nblock B2 = b\norder B2 <= B1\n", posets);
  EXPECT_EQ(doc.poset_name, "V");
  EXPECT_EQ(doc.support, make_set_partition(fixture::V(), {{"a", "c"}, {"b"}}));
  EXPECT_EQ(doc.block_names, (std::vector<std::string>{"B1", "B2"}));
  ASSERT_TRUE(doc.order.has_value());
  EXPECT_EQ(*doc.order, Relation::from_pairs(2, {{0, 0}, {1, 1}, {1, 0}}));
}

TEST(ParsePartition, SupportOnlyDocument) {
  const auto posets = loaded();
  const PartitionDocument doc =
      parse_partition("partition of V\nblock B2 = b\nblock B1 = a c\n", posets);
  EXPECT_FALSE(doc.order.has_value());
  EXPECT_EQ(doc.block_names, (std::vector<std::string>{"B1", "B2"}));
}

TEST(ParsePartition, Errors) {
  const auto posets = loaded();
  const Failure overlap =
      failure_of([&] { parse_partition("partition of V\nblock B1 = a\nblock B2 = a b\n", posets); });
  EXPECT_EQ(overlap.code, ErrorCode::overlapping_blocks);
  EXPECT_EQ(overlap.line, 3u);

  const Failure unknown_block = failure_of([&] {
    parse_partition("partition of V\nblock B1 = a b c\norder B1 <= B9\n", posets);
  });
  EXPECT_EQ(unknown_block.code, ErrorCode::unknown_block_name);
  EXPECT_EQ(unknown_block.line, 3u);

  const Failure incomplete =
      failure_of([&] { parse_partition("partition of V\nblock B1 = a b\n", posets); });
  EXPECT_EQ(incomplete.code, ErrorCode::incomplete_cover);
  EXPECT_EQ(incomplete.line, 1u);

  const Failure cycle = failure_of([&] {
    parse_partition(
        "partition of V\nblock X = a\nblock Y = b c\norder X <= Y\norder Y <= X\n", posets);
  });
  EXPECT_EQ(cycle.code, ErrorCode::cycle_detected);
  EXPECT_EQ(cycle.line, 5u);

  EXPECT_EQ(failure_of([&] { parse_partition("partition of W\nblock B = a\n", posets); }).code,
            ErrorCode::unknown_poset);
  EXPECT_EQ(failure_of([&] { parse_partition("partition of V\nblock B =\n", posets); }).code,
            ErrorCode::empty_block);
}

TEST(ParseMap, Document) {
  const auto posets = loaded();
  const MapDocument doc = parse_map("map f : V -> C2\nsend a a\nsend b a\nsend c b\n", posets);
  EXPECT_EQ(doc.name, "f");
  EXPECT_EQ(doc.map.assignment(), (std::vector<std::size_t>{0, 0, 1}));
}

TEST(ParseMap, Errors) {
  const auto posets = loaded();
  const Failure missing = failure_of([&] { parse_map("map f : C2 -> C2\nsend a a\n", posets); });
  EXPECT_EQ(missing.code, ErrorCode::missing_assignment);
  EXPECT_EQ(missing.line, 1u);
  const Failure twice = failure_of(
      [&] { parse_map("map f : C2 -> C2\nsend a a\nsend a b\nsend b b\n", posets); });
  EXPECT_EQ(twice.code, ErrorCode::conflicting_assignment);
  EXPECT_EQ(twice.line, 3u);
  EXPECT_EQ(failure_of([&] { parse_map("map f : C2 -> Q\n", posets); }).code,
            ErrorCode::unknown_poset);
  EXPECT_EQ(failure_of([&] { parse_map("map f C2 -> C1\n", posets); }).code,
            ErrorCode::syntax_error);
}

TEST(Serialize, PosetRoundTrip) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Poset& p : all_labelled_posets(n)) {
      const PosetDocument back = parse_poset(serialize_poset(p, "P"));
      EXPECT_EQ(back.name, "P");
      EXPECT_EQ(back.poset, p);
    }
  }
}

TEST(Serialize, MapRoundTrip) {
  const auto posets = loaded();
  const PosetMap f = make_map(fixture::V(), fixture::C2(), {{"a", "a"}, {"b", "a"}, {"c", "b"}});
  EXPECT_EQ(parse_map(serialize_map(f, "f", "V", "C2"), posets).map, f);
}

TEST(Format, SupportAndOrderedPartition) {
  const Poset v = fixture::V();
  const OrderedPartition op = fixture::ordered(v, {{"a", "c"}, {"b"}}, {{1, 0}});
  EXPECT_EQ(format_support(v, op.support()), "{a,c}{b}");
  EXPECT_EQ(format_ordered_partition(v, op), "{a,c}{b} | B2<=B1");
  EXPECT_EQ(format_ordered_partition(v, fixture::ordered(v, {{"a"}, {"b"}, {"c"}}, {{0, 2}, {1, 2}})),
            "{a}{b}{c} | B1<=B3 B2<=B3");
  EXPECT_EQ(format_ordered_partition(v, fixture::ordered(v, {{"a", "b", "c"}}, {})), "{a,b,c} | -");
}

TEST(Dot, DrawsCoversOnly) {
  const std::string dot = to_dot(fixture::C3(), "C3");
  EXPECT_NE(dot.find("rankdir=BT;"), std::string::npos);
  EXPECT_NE(dot.find("\"a\" -> \"b\";"), std::string::npos);
  EXPECT_NE(dot.find("\"b\" -> \"c\";"), std::string::npos);
  EXPECT_EQ(dot.find("\"a\" -> \"c\";"), std::string::npos);
}

TEST(Dot, EdgeCountEqualsCoverCount) {
  for (const Poset& p : all_labelled_posets(4)) {
    const std::string dot = to_dot(p, "P");
    std::size_t edges = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2))
      ++edges;
    EXPECT_EQ(edges, p.cover_relation().pair_count());
  }
}

namespace {

// Runs every parser on `text`; only posetpart::Error may escape, and it must
// carry a line number.
void parse_everything(const std::string& text, const std::vector<PosetDocument>& posets) {
  const std::function<void()> parsers[] = {
      [&] { parse_poset(text); },
      [&] { parse_partition(text, posets); },
      [&] { parse_map(text, posets); },
  };
  for (const auto& parse : parsers) {
    try {
      parse();
    } catch (const Error& e) {
      ASSERT_TRUE(e.line().has_value()) << e.what() << "\ninput: " << text;
    } catch (const std::exception& e) {
      FAIL() << "unexpected exception " << e.what() << "\ninput: " << text;
    }
  }
}

}  // namespace

TEST(Fuzz, RandomBytes) {
  const auto posets = loaded();
  std::mt19937 rng(20261016);
  for (int round = 0; round < 10000; ++round) {
    std::string text(rng() % 200, '\0');
    for (char& c : text) c = static_cast<char>(rng() & 0xff);
    parse_everything(text, posets);
  }
}

TEST(Fuzz, RandomTokenSoup) {
  const auto posets = loaded();
  const std::vector<std::string> vocabulary = {
      "poset", "elements", "cover", "partition", "of", "block", "=", "order", "<=", "map", ":",
      "->", "send", "V", "C2", "C1", "a", "b", "c", "B1", "B2", "#", "\n", "\n", "\n", " ", "\t"};
  std::mt19937 rng(42);
  for (int round = 0; round < 10000; ++round) {
    std::string text;
    const std::size_t length = rng() % 40;
    for (std::size_t i = 0; i < length; ++i) {
      text += vocabulary[rng() % vocabulary.size()];
      text += ' ';
    }
    parse_everything(text, posets);
  }
}
