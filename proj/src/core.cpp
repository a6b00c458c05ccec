#include "uccone/core.hpp"

#include <algorithm>
#include <cctype>

namespace uccone {

void check_dimension(int n, int max_n) {
    if (n < 1 || n > max_n) {
        throw std::invalid_argument("dimension " + std::to_string(n) + " outside [1, " + std::to_string(max_n) +
                                    "]");
    }
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string SubsetMask::to_string() const {
    std::string out;
    for (int e : elements()) {
        if (!out.empty()) out += ',';
        out += std::to_string(e);
    }
    return out;
}

SubsetMask SubsetMask::parse(std::string_view text, int n) {
    std::uint32_t bits = 0;
    int previous = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view token = text.substr(pos, end - pos);
        if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(c); }) ||
            token.size() > 3) {
            throw ParseError("malformed subset label \"" + std::string(text) + "\"");
        }
        int element = std::stoi(std::string(token));
        if (element < 1 || element > n) {
            throw ParseError("element " + std::to_string(element) + " outside [1, " + std::to_string(n) + "]");
        }
        if (element <= previous) {
            throw ParseError("subset label \"" + std::string(text) + "\" must list elements strictly ascending");
        }
        previous = element;
        bits |= std::uint32_t{1} << (element - 1);
        pos = end + 1;
        if (end == text.size() - 1) throw ParseError("trailing comma in \"" + std::string(text) + "\"");
    }
    return SubsetMask(bits);
}

std::vector<SubsetMask> canonical_subset_order(int n) {
    check_dimension(n);
    return nonempty_subsets(SubsetMask::full(n));
}

std::vector<SubsetMask> nonempty_subsets(SubsetMask ground) {
    std::vector<SubsetMask> out;
    // Enumerate submasks of ground.
    for (std::uint32_t s = ground.bits(); s != 0; s = (s - 1) & ground.bits()) out.emplace_back(s);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational \"" + std::string(text) + "\"");
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Rational value = Rational(Integer{std::string(num)}) / Rational(d);
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
    if (boost::multiprecision::denominator(value) == 1) return boost::multiprecision::numerator(value).str();
    return value.str();
}

Real to_real(const Rational& value) {
    return Real(boost::multiprecision::numerator(value)) / Real(boost::multiprecision::denominator(value));
}

Rational to_dyadic(const Real& value, int mantissa_bits) {
    if (value == 0) return Rational(0);
    int exponent = 0;
    Real mantissa = boost::multiprecision::frexp(value, &exponent);
    Integer scaled = static_cast<Integer>(boost::multiprecision::round(boost::multiprecision::ldexp(mantissa, mantissa_bits)));
    int shift = exponent - mantissa_bits;
    if (shift >= 0) return Rational(scaled << shift);
    return Rational(scaled) / Rational(Integer(1) << -shift);
}

Rational to_decimal_rational(const Real& value, int digits) {
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
    Integer scaled = static_cast<Integer>(boost::multiprecision::round(value * Real(scale)));
    return Rational(scaled) / Rational(scale);
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational square = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= square;
        exponent >>= 1;
        if (exponent != 0) square *= square;
    }
    return result;
}

RealVector to_real(const ProjectionVector& v) {
    RealVector out(v.n());
    for (SubsetMask a : canonical_subset_order(v.n())) out[a] = to_real(v[a]);
    return out;
}

}  // namespace uccone
