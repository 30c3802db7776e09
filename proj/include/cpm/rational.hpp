#pragma once

#include <string>
#include <string_view>

namespace cpm {

// Exact fraction with den > 0 and gcd(|num|, den) = 1. All quality values,
// thresholds and gamma ranges in this library are carried as Rationals or as
// integer multiples of 1/den; nothing is ever rounded.
struct Rational {
    long long num = 0;
    long long den = 1;
};

Rational make_rational(long long num, long long den);

int rat_cmp(Rational a, Rational b);  // -1, 0, +1

inline bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(Rational a, Rational b) { return !(a == b); }
inline bool operator<(Rational a, Rational b) { return rat_cmp(a, b) < 0; }
inline bool operator<=(Rational a, Rational b) { return rat_cmp(a, b) <= 0; }
inline bool operator>(Rational a, Rational b) { return rat_cmp(a, b) > 0; }
inline bool operator>=(Rational a, Rational b) { return rat_cmp(a, b) >= 0; }

Rational rat_add(Rational a, Rational b);
Rational rat_sub(Rational a, Rational b);
Rational rat_mul(Rational a, Rational b);
Rational rat_div(Rational a, Rational b);
Rational rat_min(Rational a, Rational b);
Rational rat_max(Rational a, Rational b);
Rational midpoint(Rational a, Rational b);

double to_double(Rational r);
std::string to_string(Rational r);  // "num/den", e.g. "1/3", "0/1"

// Accepts "b/c", an integer ("1"), or a decimal ("0.25", ".5"); decimals are
// read as exact fractions over a power of ten and reduced. Throws
// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Resolution parameter of the quality function: a rational in [0, 1].
using Resolution = Rational;

Resolution parse_resolution(std::string_view text);  // parse + range check

}  // namespace cpm
