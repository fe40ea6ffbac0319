#include "netform/rational.hpp"

#include <charconv>
#include <limits>

#include "netform/errors.hpp"

namespace netform {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ParseError("invalid rational: '" + std::string(whole) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_int(trim(text.substr(0, slash)), whole);
        const auto den = parse_int(trim(text.substr(slash + 1)), whole);
        if (den == 0) throw ParseError("zero denominator: '" + std::string(whole) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            negative = int_part.front() == '-';
            int_part.remove_prefix(1);
        }
        if (frac_part.size() > 15 || (int_part.empty() && frac_part.empty())) {
            throw ParseError("invalid rational: '" + std::string(whole) + "'");
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        const std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, whole);
        const std::int64_t fp = frac_part.empty() ? 0 : parse_int(frac_part, whole);
        if (ip < 0 || fp < 0) throw ParseError("invalid rational: '" + std::string(whole) + "'");
        if (ip > std::numeric_limits<std::int64_t>::max() / scale) {
            throw ParseError("rational out of range: '" + std::string(whole) + "'");
        }
        Rational value(ip * scale + fp, scale);
        return negative ? -value : value;
    }
    return Rational(parse_int(text, whole));
}

std::string to_string(const Rational& value) {
    if (value.denominator() == 1) return std::to_string(value.numerator());
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

double to_double(const Rational& value) {
    return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

}  // namespace netform
