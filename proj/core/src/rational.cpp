#include "tcr/rational.hpp"

#include "tcr/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace tcr {

namespace {

Integer pow10(unsigned exponent) {
    Integer result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= 10;
    return result;
}

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw ConfigError("not a rational number: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text) {
    std::string_view body = text;
    int exponent = 0;
    if (auto epos = body.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view etext = body.substr(epos + 1);
        body = body.substr(0, epos);
        bool eneg = false;
        if (!etext.empty() && (etext.front() == '+' || etext.front() == '-')) {
            eneg = etext.front() == '-';
            etext.remove_prefix(1);
        }
        if (!all_digits(etext) || etext.size() > 4) bad(text);
        exponent = std::atoi(std::string(etext).c_str());
        if (eneg) exponent = -exponent;
    }

    std::string_view int_part = body;
    std::string_view frac_part;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
        int_part = body.substr(0, dot);
        frac_part = body.substr(dot + 1);
        if (frac_part.find('.') != std::string_view::npos) bad(text);
    }
    if (int_part.empty() && frac_part.empty()) bad(text);
    if (!int_part.empty() && !all_digits(int_part)) bad(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad(text);

    Integer digits = int_part.empty() ? Integer(0) : Integer(std::string(int_part));
    Integer scale = pow10(static_cast<unsigned>(frac_part.size()));
    digits *= scale;
    if (!frac_part.empty()) digits += Integer(std::string(frac_part));

    Rational value(digits, scale);
    if (exponent > 0) value *= pow10(static_cast<unsigned>(exponent));
    if (exponent < 0) value /= pow10(static_cast<unsigned>(-exponent));
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.empty()) bad(text);

    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) bad(text);

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        const Integer d{std::string(den)};
        if (d == 0) throw ConfigError("zero denominator: '" + std::string(text) + "'");
        const Integer n{std::string(num)};
        value = Rational(n, d);
    } else {
        value = parse_decimal(body);
    }
    return negative ? -value : value;
}

std::string decimal_string(const Rational& value, int precision) {
    if (precision < 0) throw ConfigError("negative rendering precision");
    const bool negative = value < 0;
    const Rational magnitude = negative ? -value : value;
    const Integer num = numerator(magnitude);
    const Integer den = denominator(magnitude);
    const Integer scale = pow10(static_cast<unsigned>(precision));

    // Round half away from zero: floor((num*scale/den) + 1/2) on the magnitude.
    Integer scaled = (num * scale * 2 + den) / (den * 2);
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;

    std::ostringstream out;
    if (negative && (whole != 0 || frac != 0)) out << '-';
    out << whole;
    if (precision > 0) {
        std::string digits = frac.str();
        out << '.' << std::string(static_cast<std::size_t>(precision) - digits.size(), '0') << digits;
    }
    return out.str();
}

std::string fraction_string(const Rational& value) {
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace tcr
