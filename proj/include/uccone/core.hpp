#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace uccone {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
/// 50 decimal digits; log-space quantities are carried at this precision.
using Real = boost::multiprecision::cpp_bin_float_50;

inline constexpr int kMaxDimension = 16;

/// Raised for malformed textual input (rationals, subset labels, files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration or LP exceeds its configured resource cap.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check_dimension(int n, int max_n = kMaxDimension);

/// A subset of [n] stored as a bitmask: bit (i-1) is set iff element i is present.
class SubsetMask {
public:
    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

    static constexpr SubsetMask full(int n) { return SubsetMask((std::uint32_t{1} << n) - 1); }
    static constexpr SubsetMask singleton(int element) { return SubsetMask(std::uint32_t{1} << (element - 1)); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int element) const { return (bits_ >> (element - 1)) & 1u; }
    constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool fits(int n) const { return n >= 32 || bits_ < (std::uint32_t{1} << n); }
    /// Smallest element, 1-based. Undefined for the empty set.
    constexpr int min_element() const { return std::countr_zero(bits_) + 1; }

    /// 1-based elements in ascending order.
    std::vector<int> elements() const;

    /// Ascending comma-separated labels, e.g. "1,2,4"; the empty set is "".
    std::string to_string() const;
    static SubsetMask parse(std::string_view text, int n);

    constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
    constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
    constexpr SubsetMask without(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }

    friend constexpr bool operator==(SubsetMask, SubsetMask) = default;

private:
    std::uint32_t bits_ = 0;
};

/// Order by popcount, then by bits. Used for every canonical listing.
constexpr bool canonical_less(SubsetMask a, SubsetMask b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
}

struct CanonicalLess {
    constexpr bool operator()(SubsetMask a, SubsetMask b) const { return canonical_less(a, b); }
};

/// All 2^n - 1 nonempty subsets of [n] sorted by (popcount, bits).
std::vector<SubsetMask> canonical_subset_order(int n);

/// Nonempty subsets of `ground` in canonical order.
std::vector<SubsetMask> nonempty_subsets(SubsetMask ground);

/// Exact rational from "p/q", "-p/q" or an integer string. Decimals are rejected.
Rational parse_rational(std::string_view text);
/// Integer string when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& value);

Real to_real(const Rational& value);
/// Dyadic rational within relative error 2^-mantissa_bits of `value`.
Rational to_dyadic(const Real& value, int mantissa_bits = 64);
/// Exact value rounded to a rational with denominator 10^digits.
Rational to_decimal_rational(const Real& value, int digits = 30);

Rational pow(const Rational& base, unsigned exponent);

/// One scalar per nonempty subset of [n], indexed by mask bits - 1.
template <class Scalar>
class BasicProjectionVector {
public:
    BasicProjectionVector() = default;
    explicit BasicProjectionVector(int n) : n_(n), entries_(checked_size(n)) {}

    int n() const { return n_; }
    std::size_t size() const { return entries_.size(); }

    Scalar& operator[](SubsetMask a) { return entries_.at(index(a)); }
    const Scalar& operator[](SubsetMask a) const { return entries_.at(index(a)); }

    const std::vector<Scalar>& entries() const { return entries_; }

    BasicProjectionVector& operator+=(const BasicProjectionVector& o) {
        require_same(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    BasicProjectionVector& operator*=(const Scalar& s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }
    friend BasicProjectionVector operator+(BasicProjectionVector a, const BasicProjectionVector& b) { return a += b; }
    friend BasicProjectionVector operator*(const Scalar& s, BasicProjectionVector v) { return v *= s; }

    friend bool operator==(const BasicProjectionVector&, const BasicProjectionVector&) = default;

    /// Every coordinate shifted by the same amount.
    BasicProjectionVector shifted(const Scalar& amount) const {
        BasicProjectionVector out = *this;
        for (auto& e : out.entries_) e += amount;
        return out;
    }

    static BasicProjectionVector constant(int n, const Scalar& value) {
        BasicProjectionVector out(n);
        for (auto& e : out.entries_) e = value;
        return out;
    }

private:
    static std::size_t checked_size(int n) {
        check_dimension(n);
        return (std::size_t{1} << n) - 1;
    }
    std::size_t index(SubsetMask a) const {
        if (a.empty() || !a.fits(n_)) throw std::out_of_range("subset " + a.to_string() + " outside [n]");
        return a.bits() - 1;
    }
    void require_same(const BasicProjectionVector& o) const {
        if (o.n_ != n_) throw std::invalid_argument("projection vectors of different dimension");
    }

    int n_ = 0;
    std::vector<Scalar> entries_;
};

using ProjectionVector = BasicProjectionVector<Rational>;
using RealVector = BasicProjectionVector<Real>;

RealVector to_real(const ProjectionVector& v);

}  // namespace uccone
