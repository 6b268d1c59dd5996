#include "fusscat/integer.hpp"

#include <cctype>
#include <limits>

#include "fusscat/errors.hpp"

namespace fusscat {

std::string to_decimal(const Integer& value) { return value.str(); }

Integer parse_integer(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (start == text.size()) throw ValidationError("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ValidationError("malformed integer literal '" + std::string(text) + "'");
    }
  }
  return Integer(std::string(text));
}

std::uint64_t saturating_u64(const Integer& value) {
  if (value <= 0) return 0;
  if (value >= Integer(std::numeric_limits<std::uint64_t>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return value.convert_to<std::uint64_t>();
}

}  // namespace fusscat
