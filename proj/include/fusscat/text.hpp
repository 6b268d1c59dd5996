#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fusscat {

/// Non-empty lines of a text block with surrounding whitespace removed.
std::vector<std::string> split_lines(std::string_view text);

/// Comma-separated integers, e.g. "3,3,-1". Throws ValidationError on empty
/// items, stray characters or values outside int range.
std::vector<int> parse_int_list(std::string_view text);

std::string join_ints(const std::vector<int>& values, std::string_view sep = ",");

}  // namespace fusscat
