#include "grasp/query.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "grasp/errors.hpp"

namespace grasp {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool is_label_char(char c) {
  switch (c) {
    case ',': case '|': case '-': case '>': case '<': case ']': case '[': case '?':
    case '/': case '+': case '*': case '(': case ')':
      return false;
    default:
      return !is_space(c);
  }
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// One hop as written, before concatenation is resolved.
struct Hop {
  enum class Form { plain, optional, disjunction, plus, star };
  Form form = Form::plain;
  Direction direction = Direction::forward;
  Label first, second;
  std::size_t offset = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CountQuery parse() {
    CountQuery q;
    skip();
    keyword("COUNT");
    q.variables.push_back(node());
    std::vector<Hop> hops;
    while (true) {
      skip();
      if (done() || peek_keyword("WHERE")) break;
      if (hops.size() == 2) fail("at most two edge hops are supported");
      hops.push_back(hop());
      q.variables.push_back(node());
    }
    q.path = assemble(hops);

    skip();
    if (!done()) {
      const auto where_at = pos_;
      keyword("WHERE");
      const bool filterable = std::holds_alternative<SingleLabel>(q.path) ||
                              std::holds_alternative<InverseLabel>(q.path) ||
                              std::holds_alternative<Concatenation>(q.path);
      if (!filterable) fail_at("filter attached to unsupported path form", where_at);
      do {
        q.filters.push_back(filter(q.variables));
        skip();
      } while (!done() && try_keyword("AND"));
    }
    skip();
    if (!done()) fail("unexpected trailing input");
    return q;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw SyntaxError(what, at);
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void skip() {
    while (!done() && is_space(text_[pos_])) ++pos_;
  }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) {
      fail("expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  bool peek_keyword(std::string_view word) const {
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != word[i]) return false;
    }
    const auto end = pos_ + word.size();
    return end == text_.size() || !is_ident_char(text_[end]);
  }

  bool try_keyword(std::string_view word) {
    if (!peek_keyword(word)) return false;
    pos_ += word.size();
    return true;
  }

  void keyword(std::string_view word) {
    if (!try_keyword(word)) fail("expected " + std::string(word));
  }

  std::string identifier() {
    const auto start = pos_;
    if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected a variable name");
    }
    while (!done() && is_ident_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string node() {
    skip();
    expect("(");
    skip();
    std::string var;
    if (peek() != ')') var = identifier();
    skip();
    expect(")");
    return var;
  }

  Label label() {
    const auto start = pos_;
    while (!done() && is_label_char(peek())) ++pos_;
    if (pos_ == start) fail("expected a label");
    return Label(std::string(text_.substr(start, pos_ - start)));
  }

  Hop hop() {
    Hop h;
    h.offset = pos_;
    if (peek() == '<') {
      expect("<");
      h.direction = Direction::backward;
    }
    expect("-");
    if (peek() == '[') {
      ++pos_;
      h.first = label();
      if (peek() == '?') {
        ++pos_;
        h.form = Hop::Form::optional;
      } else if (peek() == '|') {
        ++pos_;
        h.second = label();
        h.form = Hop::Form::disjunction;
      }
      expect("]");
    } else if (peek() == '/') {
      ++pos_;
      h.first = label();
      if (peek() == '+') {
        h.form = Hop::Form::plus;
      } else if (peek() == '*') {
        h.form = Hop::Form::star;
      } else {
        fail("expected '+' or '*'");
      }
      ++pos_;
      expect("/");
    } else {
      fail("expected '[' or '/'");
    }
    expect(h.direction == Direction::forward ? "->" : "-");
    if (h.direction == Direction::backward && peek() == '>') fail("edge has two arrow heads");
    return h;
  }

  PathExpr assemble(const std::vector<Hop>& hops) const {
    if (hops.empty()) return Epsilon{};
    if (hops.size() == 2) {
      for (const auto& h : hops) {
        if (h.form != Hop::Form::plain) {
          fail_at("only plain label hops can be concatenated", h.offset);
        }
      }
      return Concatenation{
          hops[0].first, hops[1].first,
          hops[0].direction == Direction::forward ? Incidence::incoming : Incidence::outgoing,
          hops[1].direction == Direction::forward ? Incidence::outgoing : Incidence::incoming};
    }
    const auto& h = hops[0];
    switch (h.form) {
      case Hop::Form::plain:
        if (h.direction == Direction::forward) return SingleLabel{h.first};
        return InverseLabel{h.first};
      case Hop::Form::optional:
        return OptionalLabel{h.first, h.direction};
      case Hop::Form::disjunction:
        return Disjunction{h.first, h.second, h.direction};
      case Hop::Form::plus:
        return KleenePlus{h.first, h.direction};
      case Hop::Form::star:
        return KleeneStar{h.first, h.direction};
    }
    return Epsilon{};
  }

  Comparator comparator() {
    const auto start = pos_;
    std::string op;
    while (!done() && (peek() == '<' || peek() == '>' || peek() == '=' || peek() == '!')) {
      op += peek();
      ++pos_;
    }
    if (op == "<=") return Comparator::less_equal;
    if (op == "<") return Comparator::less;
    if (op == ">=") return Comparator::greater_equal;
    if (op == ">") return Comparator::greater;
    fail_at("unknown comparator '" + op + "'", start);
  }

  double number() {
    const auto start = pos_;
    while (!done() && !is_space(peek())) ++pos_;
    const auto token = text_.substr(start, pos_ - start);
    double value = 0;
    const auto* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      fail_at("expected a number", start);
    }
    return value;
  }

  Filter filter(const std::vector<std::string>& variables) {
    skip();
    const auto var_at = pos_;
    const auto var = identifier();
    Filter f;
    bool bound = false;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (variables[i] == var) {
        f.node = i;
        bound = true;
        break;
      }
    }
    if (!bound) fail_at("unbound variable '" + var + "'", var_at);
    expect(".");
    f.property = identifier();
    skip();
    f.op = comparator();
    skip();
    f.value = number();
    return f;
  }
};

std::string arrow(Direction d, const std::string& inside) {
  return d == Direction::forward ? "-" + inside + "->" : "<-" + inside + "-";
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

bool Filter::accepts(double x) const {
  switch (op) {
    case Comparator::less_equal: return x <= value;
    case Comparator::less: return x < value;
    case Comparator::greater_equal: return x >= value;
    case Comparator::greater: return x > value;
  }
  return false;
}

std::string to_string(Comparator op) {
  switch (op) {
    case Comparator::less_equal: return "<=";
    case Comparator::less: return "<";
    case Comparator::greater_equal: return ">=";
    case Comparator::greater: return ">";
  }
  return "?";
}

CountQuery parse_query(std::string_view text) { return Parser(text).parse(); }

std::string print_query(const CountQuery& q) {
  std::vector<std::string> hops;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SingleLabel>) {
          hops.push_back(arrow(Direction::forward, "[" + p.label.str() + "]"));
        } else if constexpr (std::is_same_v<T, InverseLabel>) {
          hops.push_back(arrow(Direction::backward, "[" + p.label.str() + "]"));
        } else if constexpr (std::is_same_v<T, OptionalLabel>) {
          hops.push_back(arrow(p.direction, "[" + p.label.str() + "?]"));
        } else if constexpr (std::is_same_v<T, KleenePlus>) {
          hops.push_back(arrow(p.direction, "/" + p.label.str() + "+/"));
        } else if constexpr (std::is_same_v<T, KleeneStar>) {
          hops.push_back(arrow(p.direction, "/" + p.label.str() + "*/"));
        } else if constexpr (std::is_same_v<T, Disjunction>) {
          hops.push_back(arrow(p.direction, "[" + p.first.str() + "|" + p.second.str() + "]"));
        } else if constexpr (std::is_same_v<T, Concatenation>) {
          hops.push_back(arrow(p.first_side == Incidence::incoming ? Direction::forward
                                                                   : Direction::backward,
                               "[" + p.first.str() + "]"));
          hops.push_back(arrow(p.second_side == Incidence::outgoing ? Direction::forward
                                                                    : Direction::backward,
                               "[" + p.second.str() + "]"));
        }
      },
      q.path);

  auto var = [&](std::size_t i) { return i < q.variables.size() ? q.variables[i] : std::string(); };
  std::string out = "COUNT (" + var(0) + ")";
  for (std::size_t i = 0; i < hops.size(); ++i) out += " " + hops[i] + " (" + var(i + 1) + ")";
  for (std::size_t i = 0; i < q.filters.size(); ++i) {
    const auto& f = q.filters[i];
    out += i == 0 ? " WHERE " : " AND ";
    out += var(f.node) + "." + f.property + " " + to_string(f.op) + " " + format_number(f.value);
  }
  return out;
}

std::vector<Label> labels_of(const PathExpr& path) {
  return std::visit(
      [](const auto& p) -> std::vector<Label> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Epsilon>) {
          return {};
        } else if constexpr (std::is_same_v<T, Disjunction> || std::is_same_v<T, Concatenation>) {
          return {p.first, p.second};
        } else {
          return {p.label};
        }
      },
      path);
}

std::string form_name(const PathExpr& path) {
  static const char* const names[] = {"epsilon", "single",      "inverse",    "optional",
                                      "plus",    "star",        "disjunction", "concatenation"};
  return names[path.index()];
}

std::vector<std::string> read_query_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::size_t a = 0;
    while (a < line.size() && is_space(line[a])) ++a;
    if (a == line.size() || line[a] == '#') continue;
    auto b = line.size();
    while (b > a && is_space(line[b - 1])) --b;
    out.push_back(line.substr(a, b - a));
  }
  return out;
}

}  // namespace grasp
