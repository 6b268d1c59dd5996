#include "fusscat/monomial.hpp"

#include <cctype>

#include "fusscat/errors.hpp"

namespace fusscat {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  bool accept(char c) {
    if (!done() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  // "{123}"
  int braced_number() {
    expect('{');
    int value = 0;
    bool any = false;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      any = true;
    }
    if (!any) fail("expected digits");
    expect('}');
    return value;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("malformed monomial '" + std::string(text_) + "' at offset " +
                          std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedMonomial parse_tex_monomial(std::string_view text) {
  ParsedMonomial out;
  Cursor cur(text);
  while (cur.accept('x')) {
    cur.expect('_');
    const int index = cur.braced_number();
    if (index < 1) cur.fail("variable index must be positive");
    const int exponent = cur.accept('^') ? cur.braced_number() : 1;
    if (out.x_exponents.size() < static_cast<std::size_t>(index)) out.x_exponents.resize(index, 0);
    out.x_exponents[index - 1] += exponent;
  }
  out.has_y = cur.accept('y');
  if (!cur.done()) cur.fail("unexpected trailing text");
  return out;
}

}  // namespace fusscat
