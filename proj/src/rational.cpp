#include "fgc/rational.hpp"

#include <cstdlib>

namespace fgc {

Rational Rational::parse(const std::string& text) {
  const char* s = text.c_str();
  char* end = nullptr;
  long long num = std::strtoll(s, &end, 10);
  if (end == s) fail(ErrorCode::Parse, "rational: expected integer in '" + text + "'");
  if (*end == '\0') return Rational(num);
  if (*end != '/') fail(ErrorCode::Parse, "rational: expected 'p' or 'p/q', got '" + text + "'");
  const char* den_start = end + 1;
  long long den = std::strtoll(den_start, &end, 10);
  if (end == den_start || *end != '\0')
    fail(ErrorCode::Parse, "rational: malformed denominator in '" + text + "'");
  if (den == 0) fail(ErrorCode::Parse, "rational: zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::str_slash() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace fgc
