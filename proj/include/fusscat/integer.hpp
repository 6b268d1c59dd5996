#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fusscat {

// Expression templates are disabled so the type composes cleanly with Eigen.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

std::string to_decimal(const Integer& value);

/// Parses an optionally signed decimal string. Throws ValidationError on
/// anything else (no whitespace, no leading '+').
Integer parse_integer(std::string_view text);

/// Clamps to [0, UINT64_MAX]; used for search-volume estimates.
std::uint64_t saturating_u64(const Integer& value);

}  // namespace fusscat
