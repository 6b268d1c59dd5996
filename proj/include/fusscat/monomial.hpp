#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fusscat {

struct ParsedMonomial {
  std::vector<int> x_exponents;  // indexed from x_1; missing variables are 0
  bool has_y = false;            // trailing "y" (the product of all y_j)
};

/// Parses TeX-style monomials such as "x_{1}^{3}x_{2}x_{4}^{7}y".
/// Throws ValidationError on malformed text.
ParsedMonomial parse_tex_monomial(std::string_view text);

}  // namespace fusscat
