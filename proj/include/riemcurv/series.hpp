#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "riemcurv/exact_scalar.hpp"

namespace riemcurv {

struct Variable {
    std::string name;
    int weight = 1;
    bool operator==(const Variable&) const = default;
};

/// Immutable ordered list of weighted variables. Cheap to copy.
class Alphabet {
public:
    explicit Alphabet(std::vector<Variable> vars);

    // The standard alphabets of the calculus.
    static const Alphabet& xi_eta();       // {xi:1, eta:2}
    static const Alphabet& xyz();          // {x:1, y:2, z:2}
    static const Alphabet& zy();           // {z:2, y:2}
    static const Alphabet& xib_etab();     // {xib:2, etab:2}
    static const Alphabet& xi_xib_etab();  // {xi:1, xib:2, etab:2}
    static const Alphabet& univariate_x(); // {x:1}

    size_t size() const { return vars_->size(); }
    const Variable& var(size_t i) const { return (*vars_)[i]; }
    const std::vector<Variable>& vars() const { return *vars_; }
    size_t index_of(const std::string& name) const;

    bool operator==(const Alphabet& o) const { return vars_ == o.vars_ || *vars_ == *o.vars_; }

private:
    std::shared_ptr<const std::vector<Variable>> vars_;
};

/// Exponent vector over an Alphabet (which is carried by the series).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
    static Monomial unit(size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
    static Monomial var(size_t nvars, size_t index, unsigned e = 1);

    const std::vector<unsigned>& exps() const { return exps_; }
    unsigned operator[](size_t i) const { return exps_[i]; }
    size_t size() const { return exps_.size(); }

    Monomial operator*(const Monomial& o) const;
    long weighted_degree(const Alphabet& a) const;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<unsigned> exps_;
};

/// Graded lexicographic order: weighted degree first, then exponent vector.
struct GrlexLess {
    std::vector<int> weights;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse formal power series truncated by weighted total degree.
/// Coefficients of all monomials of degree <= order() are exact; nothing is
/// stored or claimed above. Operations return the largest order they can
/// certify (min of the inputs, adjusted for derivatives).
class GradedSeries {
public:
    using TermMap = std::map<Monomial, ExactScalar, GrlexLess>;

    GradedSeries(const Alphabet& alphabet, long order);
    static GradedSeries constant(const Alphabet& a, long order, const ExactScalar& c);
    /// The series consisting of the named variable alone.
    static GradedSeries variable(const Alphabet& a, long order, const std::string& name);

    const Alphabet& alphabet() const { return alphabet_; }
    long order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Smallest weighted degree with a nonzero term; nullopt for the zero series.
    std::optional<long> min_degree() const;

    /// Stored coefficient (zero if absent). Throws if the monomial's degree
    /// exceeds the truncation order: that coefficient is not determined.
    ExactScalar coeff(const Monomial& m) const;
    /// Accumulate a term; silently truncates monomials beyond the order.
    void add_term(const Monomial& m, const ExactScalar& c);

    GradedSeries truncated(long new_order) const;
    GradedSeries homogeneous_component(long degree) const;

    GradedSeries operator-() const;
    GradedSeries& operator+=(const GradedSeries& o);
    GradedSeries& operator-=(const GradedSeries& o);
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    GradedSeries& operator*=(const GradedSeries& o);

    GradedSeries scaled(const ExactScalar& c) const;
    GradedSeries pow(unsigned long e) const;

    /// Strict equality: same alphabet, same order, identical term maps.
    bool operator==(const GradedSeries& o) const;
    /// Equality of all coefficients up to min(order(), o.order()).
    bool agrees_with(const GradedSeries& o) const;
    /// First monomial (graded-lex) whose coefficients differ below the joint
    /// order, or nullopt if the series agree.
    std::optional<Monomial> first_disagreement(const GradedSeries& o) const;

    std::string to_string() const;

    // Cauchy-product kernels. operator* picks the parallel one for large
    // inputs when OpenMP is available; the serial kernel is the reference.
    static GradedSeries mul_serial(const GradedSeries& a, const GradedSeries& b);
    static GradedSeries mul_parallel(const GradedSeries& a, const GradedSeries& b);

private:
    void check_same_alphabet(const GradedSeries& o) const;

    Alphabet alphabet_;
    long order_;
    TermMap terms_;
};

/// (1 - u)^r for half-integer r, as sum_j (-1)^j gen_binomial(r, j) u^j.
/// u must have zero constant term.
GradedSeries binomial_power(const GradedSeries& u, HalfInt r);

/// Ring-homomorphic evaluation: every variable of f's alphabet is replaced by
/// its image, a series over the common target alphabet. Each image must have
/// minimal weighted degree >= the weight of the variable it replaces, so that
/// truncation stays exact.
GradedSeries substitute(const GradedSeries& f,
                        const std::map<std::string, GradedSeries>& images);

/// Formal partial derivative; the result's order shrinks by the variable's weight.
GradedSeries derivative(const GradedSeries& f, const std::string& var);

/// Coefficientwise relabeling: applies fn to every (monomial, coeff) term and
/// accumulates the results in the target alphabet. Used for the basis
/// transforms that rescale term by term.
GradedSeries transform_terms(
    const GradedSeries& f, const Alphabet& target, long order,
    const std::function<std::pair<Monomial, ExactScalar>(const Monomial&, const ExactScalar&)>&
        fn);

}  // namespace riemcurv
