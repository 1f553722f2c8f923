#pragma once

// Exact rational arithmetic used everywhere in the library.

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ucat {

using Rational = mpq_class;

// n/d in canonical form (gmp's two-argument constructor does not reduce).
inline Rational ratio(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational value(numerator);
  value /= denominator;
  return value;
}

// Parses "p/q", an integer, or a terminating decimal ("0.25") into an exact
// rational. Returns nullopt on malformed text or a zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;

  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  auto digits_from = [&](std::size_t start, std::size_t end) {
    if (start >= end) return false;
    for (std::size_t i = start; i < end; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
  };

  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!digits_from(pos, slash) || !digits_from(slash + 1, text.size())) {
      return std::nullopt;
    }
    mpz_class num(std::string(text.substr(pos, slash - pos)), 10);
    mpz_class den(std::string(text.substr(slash + 1)), 10);
    if (den == 0) return std::nullopt;
    result = Rational(num, den);
    result.canonicalize();
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    if (!digits_from(pos, dot) || !digits_from(dot + 1, text.size())) {
      return std::nullopt;
    }
    std::string whole(text.substr(pos, dot - pos));
    std::string frac(text.substr(dot + 1));
    mpz_class num(whole + frac, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    result = Rational(num, den);
    result.canonicalize();
  } else {
    if (!digits_from(pos, text.size())) return std::nullopt;
    result = Rational(mpz_class(std::string(text.substr(pos)), 10));
  }
  if (negative) result = -result;
  return result;
}

inline Rational rational_from_string(std::string_view text) {
  auto value = parse_rational(text);
  if (!value) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) +
                                "'");
  }
  return *value;
}

// Always "p/q", including integers ("2/1") and zero ("0/1").
inline std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

// Compact form for human-facing output: "2", "1/3".
inline std::string to_display_string(const Rational& value) {
  return value.get_str();
}

}  // namespace ucat
