#include "jp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace jp {

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    BigInt d(den);
    if (d == 0) return std::nullopt;
    return Rational(BigInt(num), d);
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || !is_integer_token(whole)) return std::nullopt;
    for (char ch : frac)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    const bool neg = !whole.empty() && whole[0] == '-';
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt value = BigInt(whole) * scale;
    BigInt f(frac);
    value += neg ? -f : f;
    return Rational(value, scale);
  }
  if (!is_integer_token(text)) return std::nullopt;
  return Rational(BigInt(text));
}

Interval sqrt_enclosure(const Rational& x, unsigned bits) {
  if (x < 0) throw std::invalid_argument("sqrt_enclosure: negative argument");
  if (x == 0) return {Rational(0), Rational(0)};
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  // sqrt(num/den) = sqrt(num*den)/den; scale by 2^bits for the grid.
  const BigInt scaled = (num * den) << (2 * bits);
  const BigInt root = sqrt(scaled);  // floor
  const BigInt grid_den = den << bits;
  if (root * root == scaled) {
    Rational exact(root, grid_den);
    return {exact, exact};
  }
  return {Rational(root, grid_den), Rational(root + 1, grid_den)};
}

}  // namespace jp
