#include "riemcurv/exact_scalar.hpp"

#include <sstream>
#include <vector>

namespace riemcurv {

void ExactScalar::add_term(const Rat& c, long pi_exp, long lambda_half_exp) {
    if (c == 0) return;
    Key key{pi_exp, lambda_half_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExactScalar ExactScalar::monomial(const Rat& c, long pi_exp, long lambda_half_exp) {
    ExactScalar s;
    s.add_term(c, pi_exp, lambda_half_exp);
    return s;
}

bool ExactScalar::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0};
}

Rat ExactScalar::as_rational() const {
    if (terms_.empty()) return Rat(0);
    if (!is_rational()) throw std::invalid_argument("ExactScalar: not a plain rational");
    return terms_.begin()->second;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    for (const auto& [k, c] : o.terms_) add_term(-c, k.first, k.second);
    return *this;
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return out;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    *this = *this * o;
    return *this;
}

ExactScalar ExactScalar::inverse() const {
    if (terms_.size() != 1)
        throw MathDomainError("ExactScalar: only single-term scalars are invertible");
    const auto& [k, c] = *terms_.begin();
    return monomial(Rat(1) / c, -k.first, -k.second);
}

ExactScalar ExactScalar::pow_int(long e) const {
    if (e == 0) return ExactScalar(Rat(1));
    if (e < 0) return inverse().pow_int(-e);
    ExactScalar out(Rat(1));
    ExactScalar base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) out *= base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

ExactScalar ExactScalar::pow_half(HalfInt e) const {
    if (e.is_integer()) return pow_int(e.as_integer());
    if (terms_.empty()) throw MathDomainError("ExactScalar: 0 to a half-integer power");
    if (terms_.size() != 1)
        throw MathDomainError("ExactScalar: half-integer power of a sum");
    const auto& [k, c] = *terms_.begin();
    if ((k.first * e.twice()) % 2 != 0)
        throw MathDomainError("ExactScalar: fractional pi exponent");
    if ((k.second * e.twice()) % 2 != 0)
        throw MathDomainError("ExactScalar: quarter-integer lambda exponent");
    long pi_exp = k.first * e.twice() / 2;
    long lh_exp = k.second * e.twice() / 2;
    // c^e = c^w * sqrt(c) with e = w + 1/2
    long w = (e.twice() - 1) / 2;
    auto root = rat_sqrt(c);
    if (!root) throw MathDomainError("ExactScalar: inexact square root of " + rat_to_string(c));
    return monomial(rat_pow(c, w) * *root, pi_exp, lh_exp);
}

ExactScalar ExactScalar::eval_lambda(const Rat& value) const {
    ExactScalar out;
    for (const auto& [k, c] : terms_) {
        long h = k.second;
        Rat factor;
        if (h % 2 == 0) {
            long e = h / 2;
            if (value == 0) {
                if (e < 0) throw MathDomainError("eval_lambda: negative power of 0");
                factor = (e == 0) ? Rat(1) : Rat(0);
            } else {
                factor = rat_pow(value, e);
            }
        } else {
            auto root = rat_sqrt(value);
            if (!root)
                throw MathDomainError("eval_lambda: " + rat_to_string(value) +
                                      " has no exact square root");
            if (*root == 0 && h < 0) throw MathDomainError("eval_lambda: negative power of 0");
            factor = (*root == 0) ? Rat(0) : rat_pow(*root, h);
        }
        out.add_term(c * factor, k.first, 0);
    }
    return out;
}

namespace {

std::string render_lambda(long h) {
    if (h % 2 == 0) {
        long e = h / 2;
        if (e == 1) return "lambda";
        return "lambda^" + std::to_string(e);
    }
    return "lambda^(" + std::to_string(h) + "/2)";
}

}  // namespace

std::string ExactScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += rat_to_string(c);
        if (k.first != 0) {
            out += " * pi";
            if (k.first != 1) out += "^" + std::to_string(k.first);
        }
        if (k.second != 0) out += " * " + render_lambda(k.second);
    }
    return out;
}

namespace {

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(s.substr(pos));
            return parts;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
}

long parse_long(const std::string& s) {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("ExactScalar: bad exponent '" + s + "'");
    return v;
}

}  // namespace

ExactScalar ExactScalar::parse(const std::string& s) {
    if (s == "0") return ExactScalar();
    ExactScalar out;
    for (const std::string& term : split(s, " + ")) {
        auto factors = split(term, " * ");
        if (factors.empty()) throw std::invalid_argument("ExactScalar: empty term");
        Rat c = rat_from_string(factors[0]);
        long pi_exp = 0;
        long lh_exp = 0;
        for (size_t i = 1; i < factors.size(); ++i) {
            const std::string& f = factors[i];
            if (f == "pi") {
                pi_exp = 1;
            } else if (f.starts_with("pi^")) {
                pi_exp = parse_long(f.substr(3));
            } else if (f == "lambda") {
                lh_exp = 2;
            } else if (f.starts_with("lambda^(") && f.ends_with("/2)")) {
                lh_exp = parse_long(f.substr(8, f.size() - 8 - 3));
            } else if (f.starts_with("lambda^")) {
                lh_exp = 2 * parse_long(f.substr(7));
            } else {
                throw std::invalid_argument("ExactScalar: bad factor '" + f + "'");
            }
        }
        out.add_term(c, pi_exp, lh_exp);
    }
    return out;
}

ExactScalar omega(unsigned long k) {
    if (k % 2 == 0) {
        unsigned long m = k / 2;
        return ExactScalar::monomial(Rat(1) / factorial(m), static_cast<long>(m), 0);
    }
    unsigned long m = (k - 1) / 2;
    Rat c = rat_pow(Rat(2), static_cast<long>(m) + 1) / double_factorial(static_cast<long>(k));
    return ExactScalar::monomial(c, static_cast<long>(m), 0);
}

}  // namespace riemcurv
