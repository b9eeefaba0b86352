#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace riemcurv {

/// Exact rational scalar. Always stored reduced with positive denominator;
/// gmp guarantees both after canonicalize().
using Rat = mpq_class;

/// Thrown when an operation leaves the mathematical domain of the calculus
/// (curvature 0 where invertibility is required, inexact square roots, ...).
/// The CLI maps this to its own exit code, distinct from usage errors.
class MathDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

/// r^e for integer e; e < 0 requires r != 0.
Rat rat_pow(const Rat& r, long e);

/// Exact square root, or nullopt if r is not the square of a rational.
std::optional<Rat> rat_sqrt(const Rat& r);

/// A half-integer n/2, kept as the doubled numerator so map keys and
/// exponent arithmetic stay integral.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt whole(long n) { return HalfInt(2 * n); }
    static constexpr HalfInt halves(long n) { return HalfInt(n); }

    constexpr long twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    long as_integer() const {
        if (!is_integer()) throw std::invalid_argument("HalfInt: not an integer");
        return twice_ / 2;
    }

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(long n) const { return HalfInt(twice_ + 2 * n); }
    constexpr HalfInt operator-(long n) const { return HalfInt(twice_ - 2 * n); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    Rat to_rat() const { return make_rat(twice_, 2); }

private:
    explicit constexpr HalfInt(long twice) : twice_(twice) {}
    long twice_ = 0;
};

Rat factorial(unsigned long n);

/// n!! with the conventions (-1)!! = 0!! = 1. Rejects n < -1.
Rat double_factorial(long n);

/// Ordinary binomial coefficient for integer arguments.
Rat binom(unsigned long n, unsigned long k);

/// Generalized binomial coefficient r(r-1)...(r-j+1)/j! for half-integer r.
/// Coincides with binom(r, j) when r is a nonnegative integer.
Rat gen_binomial(HalfInt r, unsigned long j);

}  // namespace riemcurv
