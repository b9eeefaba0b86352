#include "riemcurv/series.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace riemcurv {

Alphabet::Alphabet(std::vector<Variable> vars) {
    for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].weight < 1) throw std::invalid_argument("Alphabet: weight must be positive");
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i].name == vars[j].name)
                throw std::invalid_argument("Alphabet: duplicate variable " + vars[i].name);
    }
    vars_ = std::make_shared<const std::vector<Variable>>(std::move(vars));
}

const Alphabet& Alphabet::xi_eta() {
    static const Alphabet a({{"xi", 1}, {"eta", 2}});
    return a;
}
const Alphabet& Alphabet::xyz() {
    static const Alphabet a({{"x", 1}, {"y", 2}, {"z", 2}});
    return a;
}
const Alphabet& Alphabet::zy() {
    static const Alphabet a({{"z", 2}, {"y", 2}});
    return a;
}
const Alphabet& Alphabet::xib_etab() {
    static const Alphabet a({{"xib", 2}, {"etab", 2}});
    return a;
}
const Alphabet& Alphabet::xi_xib_etab() {
    static const Alphabet a({{"xi", 1}, {"xib", 2}, {"etab", 2}});
    return a;
}
const Alphabet& Alphabet::univariate_x() {
    static const Alphabet a({{"x", 1}});
    return a;
}

size_t Alphabet::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i].name == name) return i;
    throw std::invalid_argument("Alphabet: no variable named " + name);
}

Monomial Monomial::var(size_t nvars, size_t index, unsigned e) {
    std::vector<unsigned> exps(nvars, 0);
    exps.at(index) = e;
    return Monomial(std::move(exps));
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (exps_.size() != o.exps_.size())
        throw std::invalid_argument("Monomial: size mismatch");
    std::vector<unsigned> exps(exps_.size());
    for (size_t i = 0; i < exps.size(); ++i) exps[i] = exps_[i] + o.exps_[i];
    return Monomial(std::move(exps));
}

long Monomial::weighted_degree(const Alphabet& a) const {
    long deg = 0;
    for (size_t i = 0; i < exps_.size(); ++i)
        deg += static_cast<long>(exps_[i]) * a.var(i).weight;
    return deg;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    long da = 0, db = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
        da += static_cast<long>(a[i]) * weights[i];
        db += static_cast<long>(b[i]) * weights[i];
    }
    if (da != db) return da < db;
    return a.exps() < b.exps();
}

namespace {

GrlexLess cmp_for(const Alphabet& a) {
    GrlexLess cmp;
    cmp.weights.reserve(a.size());
    for (const auto& v : a.vars()) cmp.weights.push_back(v.weight);
    return cmp;
}

}  // namespace

GradedSeries::GradedSeries(const Alphabet& alphabet, long order)
    : alphabet_(alphabet), order_(order), terms_(cmp_for(alphabet)) {
    if (order < 0) throw std::invalid_argument("GradedSeries: negative order");
}

GradedSeries GradedSeries::constant(const Alphabet& a, long order, const ExactScalar& c) {
    GradedSeries s(a, order);
    s.add_term(Monomial::unit(a.size()), c);
    return s;
}

GradedSeries GradedSeries::variable(const Alphabet& a, long order, const std::string& name) {
    GradedSeries s(a, order);
    s.add_term(Monomial::var(a.size(), a.index_of(name)), ExactScalar(1));
    return s;
}

std::optional<long> GradedSeries::min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.weighted_degree(alphabet_);
}

ExactScalar GradedSeries::coeff(const Monomial& m) const {
    if (m.size() != alphabet_.size())
        throw std::invalid_argument("coeff: monomial does not match alphabet");
    if (m.weighted_degree(alphabet_) > order_)
        throw std::invalid_argument("coeff: monomial degree exceeds truncation order");
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactScalar() : it->second;
}

void GradedSeries::add_term(const Monomial& m, const ExactScalar& c) {
    if (m.size() != alphabet_.size())
        throw std::invalid_argument("add_term: monomial does not match alphabet");
    if (c.is_zero() || m.weighted_degree(alphabet_) > order_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedSeries GradedSeries::truncated(long new_order) const {
    GradedSeries out(alphabet_, std::min(order_, new_order));
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

GradedSeries GradedSeries::homogeneous_component(long degree) const {
    if (degree > order_)
        throw std::invalid_argument("homogeneous_component: degree exceeds order");
    GradedSeries out(alphabet_, order_);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(alphabet_) == degree) out.add_term(m, c);
    return out;
}

void GradedSeries::check_same_alphabet(const GradedSeries& o) const {
    if (!(alphabet_ == o.alphabet_))
        throw std::invalid_argument("GradedSeries: alphabet mismatch");
}

GradedSeries GradedSeries::operator-() const {
    GradedSeries out(alphabet_, order_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    check_same_alphabet(o);
    order_ = std::min(order_, o.order_);
    std::erase_if(terms_, [&](const auto& t) {
        return t.first.weighted_degree(alphabet_) > order_;
    });
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
    check_same_alphabet(o);
    order_ = std::min(order_, o.order_);
    std::erase_if(terms_, [&](const auto& t) {
        return t.first.weighted_degree(alphabet_) > order_;
    });
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedSeries GradedSeries::scaled(const ExactScalar& c) const {
    GradedSeries out(alphabet_, order_);
    if (c.is_zero()) return out;
    for (const auto& [m, t] : terms_) out.add_term(m, t * c);
    return out;
}

namespace {

struct FlatTerm {
    const Monomial* mono;
    const ExactScalar* coeff;
    long degree;
};

std::vector<FlatTerm> flatten(const GradedSeries& s) {
    std::vector<FlatTerm> out;
    out.reserve(s.terms().size());
    for (const auto& [m, c] : s.terms())
        out.push_back({&m, &c, m.weighted_degree(s.alphabet())});
    return out;
}

}  // namespace

GradedSeries GradedSeries::mul_serial(const GradedSeries& a, const GradedSeries& b) {
    a.check_same_alphabet(b);
    GradedSeries out(a.alphabet_, std::min(a.order_, b.order_));
    const auto bt = flatten(b);
    for (const auto& [ma, ca] : a.terms_) {
        long da = ma.weighted_degree(a.alphabet_);
        if (da > out.order_) break;  // term map is degree-sorted
        for (const auto& t : bt) {
            if (da + t.degree > out.order_) break;
            out.add_term(ma * *t.mono, ca * *t.coeff);
        }
    }
    return out;
}

GradedSeries GradedSeries::mul_parallel(const GradedSeries& a, const GradedSeries& b) {
#ifndef _OPENMP
    return mul_serial(a, b);
#else
    a.check_same_alphabet(b);
    GradedSeries out(a.alphabet_, std::min(a.order_, b.order_));
    const auto at = flatten(a);
    const auto bt = flatten(b);
    const long order = out.order_;

    int nthreads = omp_get_max_threads();
    std::vector<TermMap> partial(nthreads, TermMap(cmp_for(a.alphabet_)));

#pragma omp parallel num_threads(nthreads)
    {
        TermMap& local = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 8)
        for (long i = 0; i < static_cast<long>(at.size()); ++i) {
            const auto& ta = at[i];
            if (ta.degree > order) continue;
            for (const auto& tb : bt) {
                if (ta.degree + tb.degree > order) break;
                Monomial m = *ta.mono * *tb.mono;
                ExactScalar c = *ta.coeff * *tb.coeff;
                auto it = local.find(m);
                if (it == local.end()) {
                    local.emplace(std::move(m), std::move(c));
                } else {
                    it->second += c;
                }
            }
        }
    }
    for (auto& part : partial)
        for (auto& [m, c] : part) out.add_term(m, c);
    return out;
#endif
}

namespace {
// Below this many coefficient products the parallel kernel's merge overhead
// dominates.
constexpr size_t kParallelCutoff = 4096;
}  // namespace

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
#ifdef _OPENMP
    if (a.terms().size() * b.terms().size() >= kParallelCutoff && omp_get_max_threads() > 1)
        return GradedSeries::mul_parallel(a, b);
#endif
    return GradedSeries::mul_serial(a, b);
}

GradedSeries& GradedSeries::operator*=(const GradedSeries& o) {
    *this = *this * o;
    return *this;
}

GradedSeries GradedSeries::pow(unsigned long e) const {
    GradedSeries out = constant(alphabet_, order_, ExactScalar(1));
    GradedSeries base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        if (e >>= 1) base = base * base;
    }
    return out;
}

bool GradedSeries::operator==(const GradedSeries& o) const {
    return alphabet_ == o.alphabet_ && order_ == o.order_ && terms_ == o.terms_;
}

bool GradedSeries::agrees_with(const GradedSeries& o) const {
    return !first_disagreement(o).has_value();
}

std::optional<Monomial> GradedSeries::first_disagreement(const GradedSeries& o) const {
    check_same_alphabet(o);
    long bound = std::min(order_, o.order_);
    auto cmp = cmp_for(alphabet_);
    auto ia = terms_.begin();
    auto ib = o.terms_.begin();
    while (ia != terms_.end() || ib != o.terms_.end()) {
        bool take_a = ib == o.terms_.end() ||
                      (ia != terms_.end() && cmp(ia->first, ib->first));
        bool take_b = ia == terms_.end() ||
                      (ib != o.terms_.end() && cmp(ib->first, ia->first));
        if (take_a) {
            if (ia->first.weighted_degree(alphabet_) <= bound) return ia->first;
            ++ia;
        } else if (take_b) {
            if (ib->first.weighted_degree(alphabet_) <= bound) return ib->first;
            ++ib;
        } else {
            if (ia->first.weighted_degree(alphabet_) <= bound && !(ia->second == ib->second))
                return ia->first;
            ++ia;
            ++ib;
        }
    }
    return std::nullopt;
}

std::string GradedSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        for (size_t i = 0; i < alphabet_.size(); ++i) {
            if (m[i] == 0) continue;
            out << "*" << alphabet_.var(i).name;
            if (m[i] > 1) out << "^" << m[i];
        }
    }
    return out.str();
}

GradedSeries binomial_power(const GradedSeries& u, HalfInt r) {
    auto min_deg = u.min_degree();
    if (min_deg.has_value() && *min_deg == 0)
        throw std::invalid_argument("binomial_power: u must have zero constant term");
    GradedSeries out =
        GradedSeries::constant(u.alphabet(), u.order(), ExactScalar(1));
    if (!min_deg.has_value()) return out;
    unsigned long j_max = static_cast<unsigned long>(u.order() / *min_deg);
    GradedSeries u_pow = out;  // u^0
    for (unsigned long j = 1; j <= j_max; ++j) {
        u_pow = u_pow * u;
        Rat c = gen_binomial(r, j);
        if (j % 2 == 1) c = -c;
        out += u_pow.scaled(ExactScalar(c));
    }
    return out;
}

GradedSeries substitute(const GradedSeries& f,
                        const std::map<std::string, GradedSeries>& images) {
    if (images.empty()) throw std::invalid_argument("substitute: no images");
    const Alphabet& target = images.begin()->second.alphabet();
    long order = f.order();
    for (const auto& [name, img] : images) {
        if (!(img.alphabet() == target))
            throw std::invalid_argument("substitute: images span different alphabets");
        order = std::min(order, img.order());
    }
    const Alphabet& source = f.alphabet();
    std::vector<const GradedSeries*> image_of(source.size(), nullptr);
    for (size_t i = 0; i < source.size(); ++i) {
        auto it = images.find(source.var(i).name);
        if (it == images.end())
            throw std::invalid_argument("substitute: missing image for " + source.var(i).name);
        auto min_deg = it->second.min_degree();
        if (min_deg.has_value() && *min_deg < source.var(i).weight)
            throw std::invalid_argument("substitute: image of " + source.var(i).name +
                                        " drops weighted degree");
        image_of[i] = &it->second;
    }

    // memoized powers of each image, truncated at the result order
    std::vector<std::vector<GradedSeries>> powers(source.size());
    auto power = [&](size_t i, unsigned e) -> const GradedSeries& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(GradedSeries::constant(target, order, ExactScalar(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * image_of[i]->truncated(order));
        return cache[e];
    };

    GradedSeries out(target, order);
    for (const auto& [m, c] : f.terms()) {
        if (m.weighted_degree(source) > order) continue;
        GradedSeries prod = GradedSeries::constant(target, order, c);
        for (size_t i = 0; i < source.size(); ++i)
            if (m[i] > 0) prod = prod * power(i, m[i]);
        out += prod;
    }
    return out;
}

GradedSeries derivative(const GradedSeries& f, const std::string& var) {
    const Alphabet& a = f.alphabet();
    size_t idx = a.index_of(var);
    long order = f.order() - a.var(idx).weight;
    GradedSeries out(a, std::max(order, 0L));
    if (order < 0) return out;
    for (const auto& [m, c] : f.terms()) {
        if (m[idx] == 0) continue;
        std::vector<unsigned> exps = m.exps();
        exps[idx] -= 1;
        out.add_term(Monomial(std::move(exps)), c * ExactScalar(Rat(m[idx])));
    }
    return out;
}

GradedSeries transform_terms(
    const GradedSeries& f, const Alphabet& target, long order,
    const std::function<std::pair<Monomial, ExactScalar>(const Monomial&, const ExactScalar&)>&
        fn) {
    GradedSeries out(target, order);
    for (const auto& [m, c] : f.terms()) {
        auto [tm, tc] = fn(m, c);
        out.add_term(tm, tc);
    }
    return out;
}

}  // namespace riemcurv
