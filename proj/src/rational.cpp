#include "confsect/rational.hpp"

#include <stdexcept>

namespace confsect {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    for (char c : whole + frac) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed rational literal: " + s);
    }
    mpz_class denominator = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) denominator *= 10;
    Rational value(mpz_class(whole) * denominator + mpz_class(frac), denominator);
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }
  Rational value;
  if (value.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + s);
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace confsect
