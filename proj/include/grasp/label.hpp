#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

namespace grasp {

/// Vertex type or edge label. Non-empty, no whitespace and none of `,|-><`.
/// Ordering is byte-lexicographic.
class Label {
 public:
  Label() = default;
  explicit Label(std::string text);

  static bool valid(std::string_view text) noexcept;

  const std::string& str() const noexcept { return text_; }
  bool empty() const noexcept { return text_.empty(); }

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) noexcept {
    return a.text_.compare(b.text_) <=> 0;
  }
  friend std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.text_; }

 private:
  std::string text_;
};

using LabelSet = std::set<Label>;

}  // namespace grasp

template <>
struct std::hash<grasp::Label> {
  std::size_t operator()(const grasp::Label& l) const noexcept {
    return std::hash<std::string>{}(l.str());
  }
};
