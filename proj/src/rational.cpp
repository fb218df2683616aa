#include "hintgen/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace hintgen {

namespace {

void normalize(std::int64_t& num, std::int64_t& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

__int128 cross(Rational a, Rational b) {
  return static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(num, den); }

Rational Rational::from_decimal_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const std::string lhs = text.substr(0, slash);
    const std::string rhs = text.substr(slash + 1);
    if (lhs.empty() || rhs.empty()) throw std::invalid_argument("bad rational literal: " + text);
    return Rational(std::stoll(lhs), std::stoll(rhs));
  }
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  std::int64_t scale = 1;
  bool any_digit = false;
  for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
    whole = whole * 10 + (text[pos] - '0');
    any_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
      if (scale > 1000000000000000LL) throw std::invalid_argument("rational literal too precise: " + text);
      frac = frac * 10 + (text[pos] - '0');
      scale *= 10;
      any_digit = true;
    }
  }
  if (!any_digit || pos != text.size())
    throw std::invalid_argument("bad rational literal: " + text);
  std::int64_t num = whole * scale + frac;
  if (negative) num = -num;
  return Rational(num, scale);
}

double Rational::to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator==(Rational a, Rational b) { return cross(a, b) == 0; }
bool operator!=(Rational a, Rational b) { return cross(a, b) != 0; }
bool operator<(Rational a, Rational b) { return cross(a, b) < 0; }
bool operator<=(Rational a, Rational b) { return cross(a, b) <= 0; }
bool operator>(Rational a, Rational b) { return cross(a, b) > 0; }
bool operator>=(Rational a, Rational b) { return cross(a, b) >= 0; }

Rational operator+(Rational a, Rational b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

}  // namespace hintgen
