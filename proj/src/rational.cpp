#include "cpm/rational.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace cpm {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    return Rational{num, den};
}

int rat_cmp(Rational a, Rational b) {
    __int128 lhs = static_cast<__int128>(a.num) * b.den;
    __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

Rational rat_add(Rational a, Rational b) {
    return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational rat_sub(Rational a, Rational b) {
    return make_rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational rat_mul(Rational a, Rational b) { return make_rational(a.num * b.num, a.den * b.den); }

Rational rat_div(Rational a, Rational b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return make_rational(a.num * b.den, a.den * b.num);
}

Rational rat_min(Rational a, Rational b) { return rat_cmp(a, b) <= 0 ? a : b; }

Rational rat_max(Rational a, Rational b) { return rat_cmp(a, b) >= 0 ? a : b; }

Rational midpoint(Rational a, Rational b) {
    return make_rational(a.num * b.den + b.num * a.den, 2 * a.den * b.den);
}

double to_double(Rational r) { return static_cast<double>(r.num) / static_cast<double>(r.den); }

std::string to_string(Rational r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

long long parse_digits(std::string_view s) {
    long long value = 0;
    for (char c : s) {
        if (value > (9223372036854775807LL - (c - '0')) / 10) {
            throw std::invalid_argument("number too large in rational");
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("empty rational: '" + std::string(text) + "'");

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw std::invalid_argument("invalid fraction: '" + std::string(text) + "'");
        }
        long long d = parse_digits(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        Rational r = make_rational(parse_digits(num), d);
        if (negative) r.num = -r.num;
        return r;
    }

    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac))) {
            throw std::invalid_argument("invalid decimal: '" + std::string(text) + "'");
        }
        if (frac.size() > 18) {
            throw std::invalid_argument("too many decimal digits: '" + std::string(text) + "'");
        }
        long long den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        long long whole_part = whole.empty() ? 0 : parse_digits(whole);
        long long frac_part = frac.empty() ? 0 : parse_digits(frac);
        Rational r = make_rational(whole_part * den + frac_part, den);
        if (negative) r.num = -r.num;
        return r;
    }

    if (!all_digits(s)) throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
    Rational r = make_rational(parse_digits(s), 1);
    if (negative) r.num = -r.num;
    return r;
}

Resolution parse_resolution(std::string_view text) {
    Rational r = parse_rational(text);
    if (r.num < 0 || rat_cmp(r, Rational{1, 1}) > 0) {
        throw std::invalid_argument("resolution outside [0, 1]: '" + std::string(text) + "'");
    }
    return r;
}

}  // namespace cpm
