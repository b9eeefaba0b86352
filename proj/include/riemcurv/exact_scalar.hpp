#pragma once

#include <map>
#include <string>
#include <utility>

#include "riemcurv/rational.hpp"

namespace riemcurv {

/// Exact coefficient of the calculus: a finite sum of terms
/// c * pi^a * lambda^(h/2) with rational c, integer a and integer h (the
/// lambda exponent is kept doubled so keys stay integral). Forms a
/// commutative ring; values are immutable in spirit -- every operation
/// returns a fresh scalar.
class ExactScalar {
public:
    /// (piExp, lambdaHalfExp); lambdaHalfExp counts halves of the exponent.
    using Key = std::pair<long, long>;

    ExactScalar() = default;
    ExactScalar(const Rat& c) { add_term(c, 0, 0); }  // NOLINT(google-explicit-constructor)
    ExactScalar(long c) { add_term(Rat(c), 0, 0); }   // NOLINT(google-explicit-constructor)

    static ExactScalar monomial(const Rat& c, long pi_exp, long lambda_half_exp);
    static ExactScalar pi_power(long e) { return monomial(Rat(1), e, 0); }
    static ExactScalar lambda_power(HalfInt e) { return monomial(Rat(1), 0, e.twice()); }
    /// The curvature symbol itself.
    static ExactScalar lambda() { return lambda_power(HalfInt::whole(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// The purely rational value; throws if pi or lambda is present.
    Rat as_rational() const;
    bool is_monomial() const { return terms_.size() == 1; }

    const std::map<Key, Rat>& terms() const { return terms_; }

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
    bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }

    /// Multiplicative inverse; defined only for a single nonzero term.
    ExactScalar inverse() const;
    ExactScalar pow_int(long e) const;
    /// Raise to a half-integer power. Requires a single term whose rational
    /// part has an exact square root when e is not an integer, and whose
    /// exponents stay integral/half-integral. Throws MathDomainError otherwise.
    ExactScalar pow_half(HalfInt e) const;

    /// Substitute a rational value for the symbol lambda. Odd half-exponents
    /// need an exact square root of the value; negative exponents need a
    /// nonzero value. pi is left symbolic.
    ExactScalar eval_lambda(const Rat& value) const;

    /// Canonical rendering, terms ordered by (piExp, lambdaHalfExp) ascending,
    /// e.g. "3/8 * pi^-1 * lambda^(1/2)". parse() is the exact inverse.
    std::string to_string() const;
    static ExactScalar parse(const std::string& s);

private:
    void add_term(const Rat& c, long pi_exp, long lambda_half_exp);
    std::map<Key, Rat> terms_;
};

/// Volume of the unit ball in R^k: pi^m/m! in even dimension 2m,
/// 2^(m+1) pi^m/(2m+1)!! in odd dimension 2m+1.
ExactScalar omega(unsigned long k);

}  // namespace riemcurv
