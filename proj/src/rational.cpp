#include "ordtop/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ordtop {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  // Accept only the shapes we document: [-]digits or [-]digits/digits.
  auto digits = [](const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::size_t start = (text[0] == '-') ? 1 : 0;
  std::size_t slash = text.find('/');
  bool well_formed;
  if (slash == std::string::npos) {
    well_formed = digits(text, start, text.size());
  } else {
    well_formed = digits(text, start, slash) && digits(text, slash + 1, text.size());
  }
  if (!well_formed)
    throw std::invalid_argument("rational: malformed literal '" + text + "'");
  if (slash != std::string::npos) {
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0)
      throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  }
  return Rational(text);
}

std::string format_rational(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace ordtop
