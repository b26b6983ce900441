#include "parse.hpp"

#include <cmath>
#include <cstdlib>

#include "types.hpp"

namespace elw {

namespace {

// Leading [sign][digits[.digits]] with empty digits defaulting to 1;
// advances pos past what was consumed.
double parse_number_prefix(const std::string& s, size_t& pos, bool* had_digits) {
  double sign = 1.0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') sign = -1.0;
    ++pos;
  }
  const size_t start = pos;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
    ++pos;
  if (had_digits) *had_digits = pos > start;
  if (pos == start) return sign;
  return sign * std::strtod(s.substr(start, pos - start).c_str(), nullptr);
}

}  // namespace

double parse_angle(const std::string& token) {
  if (token.empty()) fail(ErrorCode::parse_error, "empty angle token");
  size_t pos = 0;
  bool had_digits = false;
  double value = parse_number_prefix(token, pos, &had_digits);

  if (pos + 1 < token.size() + 1 && token.compare(pos, 2, "pi") == 0) {
    pos += 2;
    value *= kPi;
    if (pos < token.size() && token[pos] == '/') {
      ++pos;
      bool dd = false;
      const double den = parse_number_prefix(token, pos, &dd);
      if (!dd || den == 0.0) fail(ErrorCode::parse_error, "bad angle token: " + token);
      value /= den;
    }
  } else if (!had_digits) {
    fail(ErrorCode::parse_error, "bad angle token: " + token);
  }
  if (pos != token.size()) fail(ErrorCode::parse_error, "bad angle token: " + token);
  return value;
}

double parse_coefficient(const std::string& token) {
  if (token.empty()) fail(ErrorCode::parse_error, "empty coefficient token");
  size_t pos = 0;
  bool had_digits = false;
  double value = parse_number_prefix(token, pos, &had_digits);
  bool had_sqrt = false;
  if (token.compare(pos, 5, "sqrt3") == 0) {
    pos += 5;
    value *= std::sqrt(3.0);
    had_sqrt = true;
  }
  if (!had_digits && !had_sqrt)
    fail(ErrorCode::parse_error, "bad coefficient token: " + token);

  if (pos < token.size() && token[pos] == '/') {
    ++pos;
    if (token.compare(pos, 5, "sqrt3") == 0) {
      pos += 5;
      value /= std::sqrt(3.0);
    } else {
      bool dd = false;
      const double den = parse_number_prefix(token, pos, &dd);
      if (!dd || den == 0.0)
        fail(ErrorCode::parse_error, "bad coefficient token: " + token);
      value /= den;
    }
  }
  if (pos != token.size())
    fail(ErrorCode::parse_error, "bad coefficient token: " + token);
  return value;
}

}  // namespace elw
