#include "coulomb/rational.hpp"

#include <cctype>

namespace coulomb {

std::optional<Rat> rat_from_string(const std::string& text) {
  if (text.empty()) return std::nullopt;
  // mpq_class accepts a superset (whitespace, hex); keep the boundary strict:
  // optional sign, digits, optional "/digits".
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  if (digits == 0) return std::nullopt;
  if (i != text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    std::size_t den_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != text.size()) return std::nullopt;
  }
  try {
    Rat value(text);
    if (value.get_den() == 0) return std::nullopt;
    value.canonicalize();
    return value;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

}  // namespace coulomb
