#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grasp/label.hpp"
#include "grasp/supergraph.hpp"

namespace grasp {

enum class Direction { forward, backward };

/// `()` on its own: every vertex matches itself.
struct Epsilon {
  friend bool operator==(const Epsilon&, const Epsilon&) = default;
};
/// `-[l]->`
struct SingleLabel {
  Label label;
  friend bool operator==(const SingleLabel&, const SingleLabel&) = default;
};
/// `<-[l]-`
struct InverseLabel {
  Label label;
  friend bool operator==(const InverseLabel&, const InverseLabel&) = default;
};
/// `-[l?]->`
struct OptionalLabel {
  Label label;
  Direction direction = Direction::forward;
  friend bool operator==(const OptionalLabel&, const OptionalLabel&) = default;
};
/// `-/l+/->`
struct KleenePlus {
  Label label;
  Direction direction = Direction::forward;
  friend bool operator==(const KleenePlus&, const KleenePlus&) = default;
};
/// `-/l*/->`
struct KleeneStar {
  Label label;
  Direction direction = Direction::forward;
  friend bool operator==(const KleeneStar&, const KleeneStar&) = default;
};
/// `-[l1|l2]->`
struct Disjunction {
  Label first;
  Label second;
  Direction direction = Direction::forward;
  friend bool operator==(const Disjunction&, const Disjunction&) = default;
};
/// Two plain hops through a middle vertex m. `first_side` says whether m is
/// the target (incoming) or the source (outgoing) of the first edge; same for
/// `second_side` and the second edge. `() <-[a]- () -[b]-> ()` has both outgoing.
struct Concatenation {
  Label first;
  Label second;
  Incidence first_side = Incidence::incoming;
  Incidence second_side = Incidence::outgoing;
  friend bool operator==(const Concatenation&, const Concatenation&) = default;
};

using PathExpr = std::variant<Epsilon, SingleLabel, InverseLabel, OptionalLabel, KleenePlus,
                              KleeneStar, Disjunction, Concatenation>;

enum class Comparator { less_equal, less, greater_equal, greater };

struct Filter {
  std::size_t node = 0;  // position of the bound node pattern, 0-based
  std::string property;
  Comparator op = Comparator::less_equal;
  double value = 0;
  friend bool operator==(const Filter&, const Filter&) = default;

  bool accepts(double x) const;
};

struct CountQuery {
  PathExpr path;
  /// One entry per node pattern; empty for `()`.
  std::vector<std::string> variables;
  std::vector<Filter> filters;
  friend bool operator==(const CountQuery&, const CountQuery&) = default;
};

/// Grammar:
///   COUNT <node> (<edge> <node>){0,2} [WHERE <var>.<prop> <op> <number> {AND ...}]
/// with <node> `()` or `(x)` and <edge> one of `-[L]->`, `<-[L]-`, `-[L?]->`,
/// `-[L1|L2]->`, `-/L+/->`, `-/L*/->` (or their backward forms). Two hops must
/// both be plain labels. Throws SyntaxError with the byte offset of the problem.
CountQuery parse_query(std::string_view text);

std::string print_query(const CountQuery& q);
std::string to_string(Comparator op);

/// Every label mentioned by the path.
std::vector<Label> labels_of(const PathExpr& path);

/// Short name of the path form, e.g. "single" or "concatenation".
std::string form_name(const PathExpr& path);

/// Reads one query per line; blank lines and `#` comments are skipped.
std::vector<std::string> read_query_lines(std::string_view text);

}  // namespace grasp
