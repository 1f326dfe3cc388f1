#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace critexp {

/// Exact fraction with 64-bit numerator and positive 64-bit denominator,
/// always kept in lowest terms. Intermediate products use 128-bit integers;
/// a result that does not fit back into 64 bits throws std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    /// Parses "p/q", an integer, or a finite decimal such as "2.1" (= 21/10).
    /// Anything else throws std::invalid_argument.
    static Rational parse(std::string_view text);

    std::int64_t floor() const noexcept;
    std::int64_t ceil() const noexcept;
    bool is_integer() const noexcept { return den_ == 1; }

    /// Always "num/den", also for integers ("3/1").
    std::string str() const;
    /// Decimal rendering for display only; never used for comparisons.
    std::string decimal(int digits = 6) const;
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Compares len/period against q without forming the fraction: the sign of
/// len*q.den - q.num*period, evaluated in 128 bits.
std::strong_ordering compare_ratio(std::uint64_t len, std::uint64_t period, const Rational& q) noexcept;

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace critexp
