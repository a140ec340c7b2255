#include "grasp/query.hpp"

#include <gtest/gtest.h>

#include "grasp/errors.hpp"

namespace grasp {
namespace {

std::size_t syntax_offset(const std::string& text) {
  try {
    parse_query(text);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "accepted: " << text;
  return 0;
}

TEST(ParseQuery, AtomicForms) {
  EXPECT_EQ(parse_query("COUNT () -[l5]-> ()").path, PathExpr{SingleLabel{Label("l5")}});
  EXPECT_EQ(parse_query("COUNT () <-[l5]- ()").path, PathExpr{InverseLabel{Label("l5")}});
  EXPECT_EQ(parse_query("COUNT () -[l2?]-> ()").path,
            PathExpr(OptionalLabel{Label("l2"), Direction::forward}));
  EXPECT_EQ(parse_query("COUNT () <-/l0+/- ()").path,
            PathExpr(KleenePlus{Label("l0"), Direction::backward}));
  EXPECT_EQ(parse_query("COUNT () -/l0*/-> ()").path,
            PathExpr(KleeneStar{Label("l0"), Direction::forward}));
  EXPECT_EQ(parse_query("COUNT () <-[l4|l1]- ()").path,
            PathExpr(Disjunction{Label("l4"), Label("l1"), Direction::backward}));
  EXPECT_EQ(parse_query("COUNT ()").path, PathExpr{Epsilon{}});
  EXPECT_EQ(parse_query("  count(  )-[knows]->( ) ").path, PathExpr{SingleLabel{Label("knows")}});
}

TEST(ParseQuery, ConcatenationSides) {
  using enum Incidence;
  const Label a("a"), b("b");
  EXPECT_EQ(parse_query("COUNT () -[a]-> () <-[b]- ()").path,
            PathExpr(Concatenation{a, b, incoming, incoming}));
  EXPECT_EQ(parse_query("COUNT () -[a]-> () -[b]-> ()").path,
            PathExpr(Concatenation{a, b, incoming, outgoing}));
  EXPECT_EQ(parse_query("COUNT () <-[a]- () <-[b]- ()").path,
            PathExpr(Concatenation{a, b, outgoing, incoming}));
  EXPECT_EQ(parse_query("COUNT () <-[a]- () -[b]-> ()").path,
            PathExpr(Concatenation{a, b, outgoing, outgoing}));
}

TEST(ParseQuery, Filters) {
  const auto q = parse_query("COUNT (x) <-[l4]- () -[l5]-> () WHERE x.age >= 18 AND x.age <= 24");
  ASSERT_EQ(q.filters.size(), 2u);
  EXPECT_EQ(q.filters[0], (Filter{0, "age", Comparator::greater_equal, 18}));
  EXPECT_EQ(q.filters[1], (Filter{0, "age", Comparator::less_equal, 24}));
  EXPECT_EQ(q.variables, (std::vector<std::string>{"x", "", ""}));

  const auto s = parse_query("COUNT (a) -[l]-> (b) WHERE b.w < -1.5 and a.w > 2");
  EXPECT_EQ(s.filters[0], (Filter{1, "w", Comparator::less, -1.5}));
  EXPECT_EQ(s.filters[1], (Filter{0, "w", Comparator::greater, 2}));
}

TEST(ParseQuery, SyntaxErrorsCarryOffsets) {
  EXPECT_EQ(syntax_offset("COUNT () -[l|]-> ()"), 13u);
  EXPECT_EQ(syntax_offset("SELECT () -[l]-> ()"), 0u);
  EXPECT_EQ(syntax_offset("COUNT () -[l]-> () -[m]-> () -[n]-> ()"), 29u);
  EXPECT_EQ(syntax_offset("COUNT () -[l]-> "), 16u);
  EXPECT_EQ(syntax_offset("COUNT () -[l]- ()"), 13u);
  EXPECT_EQ(syntax_offset("COUNT () <-[l]-> ()"), 15u);
  EXPECT_EQ(syntax_offset("COUNT () -[l]-> () junk"), 19u);
  EXPECT_EQ(syntax_offset("COUNT () -/l/-> ()"), 12u);
  EXPECT_EQ(syntax_offset("COUNT () -[l?]-> () -[m]-> ()"), 9u);
  EXPECT_EQ(syntax_offset("COUNT (x) -[l]-> () WHERE y.age > 1"), 26u);
  EXPECT_EQ(syntax_offset("COUNT (x) -[l]-> () WHERE x.age > ten"), 34u);
}

TEST(ParseQuery, UnknownComparator) {
  try {
    parse_query("COUNT (x) -[l]-> () WHERE x.age = 3");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 32u);
    EXPECT_NE(std::string(e.what()).find("unknown comparator"), std::string::npos);
  }
  EXPECT_THROW(parse_query("COUNT (x) -[l]-> () WHERE x.age != 3"), SyntaxError);
  EXPECT_THROW(parse_query("COUNT (x) -[l]-> () WHERE x.age => 3"), SyntaxError);
}

TEST(ParseQuery, FilterOnUnsupportedForm) {
  for (const char* text : {"COUNT (x) -/l+/-> () WHERE x.a > 1", "COUNT (x) -[l?]-> () WHERE x.a > 1",
                           "COUNT (x) -[l|m]-> () WHERE x.a > 1", "COUNT (x) WHERE x.a > 1"}) {
    try {
      parse_query(text);
      ADD_FAILURE() << text;
    } catch (const SyntaxError& e) {
      EXPECT_NE(std::string(e.what()).find("unsupported path form"), std::string::npos) << text;
    }
  }
}

TEST(PrintQuery, RoundTrip) {
  for (const char* text :
       {"COUNT () -[l5]-> ()", "COUNT () <-[l5]- ()", "COUNT () -[l2?]-> ()", "COUNT () <-[l2?]- ()",
        "COUNT () -/l0+/-> ()", "COUNT () <-/l0*/- ()", "COUNT () -[a|b]-> ()", "COUNT ()",
        "COUNT () -[a]-> () <-[b]- ()", "COUNT () <-[a]- () -[b]-> ()",
        "COUNT (x) <-[l4]- (m) -[l5]-> (y) WHERE x.age >= 18 AND y.age < 24.5 AND m.z > -3"}) {
    const auto q = parse_query(text);
    EXPECT_EQ(print_query(q), text);
    EXPECT_EQ(parse_query(print_query(q)), q);
  }
}

TEST(PrintQuery, RoundTripOverGeneratedQueries) {
  const char* labels[] = {"a", "b2", "x_y"};
  const char* edges[] = {"-[%]->", "<-[%]-", "-[%?]->", "<-[%?]-", "-/%+/->", "<-/%*/-", "-[%|%]->"};
  for (const char* e : edges) {
    for (const char* l : labels) {
      std::string hop = e;
      for (auto pos = hop.find('%'); pos != std::string::npos; pos = hop.find('%'))
        hop.replace(pos, 1, l);
      const auto q = parse_query("COUNT () " + hop + " ()");
      EXPECT_EQ(parse_query(print_query(q)), q);
    }
  }
}

TEST(QueryHelpers, LabelsAndForms) {
  EXPECT_EQ(labels_of(parse_query("COUNT () -[a|b]-> ()").path),
            (std::vector<Label>{Label("a"), Label("b")}));
  EXPECT_EQ(form_name(parse_query("COUNT () -[a]-> () -[b]-> ()").path), "concatenation");
  EXPECT_EQ(form_name(parse_query("COUNT () <-/a*/- ()").path), "star");
  EXPECT_EQ(read_query_lines("# c\n\n  COUNT ()  \nCOUNT () -[a]-> ()\n"),
            (std::vector<std::string>{"COUNT ()", "COUNT () -[a]-> ()"}));
}

}  // namespace
}  // namespace grasp
