#pragma once

#include <cstdint>
#include <string>

namespace hintgen {

// Exact rational, used for the validation thresholds. Boundary cases such as
// n2/n == 0.50 must compare stably, which rules out floating point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  // Parses "0.5", ".25", "1", "3/4". Throws std::invalid_argument on anything else.
  static Rational from_decimal_string(const std::string& text);

  double to_double() const;
  std::string str() const;
};

bool operator==(Rational a, Rational b);
bool operator!=(Rational a, Rational b);
bool operator<(Rational a, Rational b);
bool operator<=(Rational a, Rational b);
bool operator>(Rational a, Rational b);
bool operator>=(Rational a, Rational b);
Rational operator+(Rational a, Rational b);

}  // namespace hintgen
