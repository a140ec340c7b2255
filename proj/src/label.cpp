#include "grasp/label.hpp"

#include <cctype>

#include "grasp/errors.hpp"

namespace grasp {

Label::Label(std::string text) : text_(std::move(text)) {
  if (!valid(text_)) throw InputError("invalid label '" + text_ + "'");
}

bool Label::valid(std::string_view text) noexcept {
  if (text.empty()) return false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    switch (c) {
      case ',':
      case '|':
      case '-':
      case '>':
      case '<':
        return false;
      default:
        break;
    }
  }
  return true;
}

}  // namespace grasp
