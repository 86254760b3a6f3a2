#include "autoseq/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "autoseq/errors.hpp"

namespace autoseq {

Rat rat_from_decimal(const std::string& text) {
  std::string s = text;
  bool neg = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_digit = false, seen_dot = false;
  long exp10 = 0;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_dot) ++frac_len;
      seen_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      char* end = nullptr;
      exp10 = std::strtol(s.c_str() + pos + 1, &end, 10);
      if (end != s.c_str() + s.size())
        throw ParseError("bad exponent in number '" + text + "'");
      break;
    } else {
      throw ParseError("bad number '" + text + "'");
    }
  }
  if (!seen_digit) throw ParseError("bad number '" + text + "'");
  if (digits.empty()) digits = "0";
  Int num(digits, 10);
  if (neg) num = -num;
  long shift = exp10 - frac_len;
  Int pow10 = 1;
  for (long i = 0; i < (shift < 0 ? -shift : shift); ++i) pow10 *= 10;
  Rat q;
  if (shift >= 0)
    q = Rat(num * pow10);
  else
    q = Rat(num, pow10);
  q.canonicalize();
  return q;
}

}  // namespace autoseq
