#include "riemcurv/rational.hpp"

namespace riemcurv {

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    if (r == 0 && e < 0) throw MathDomainError("rat_pow: 0 to a negative power");
    Rat base = e > 0 ? r : Rat(1) / r;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    // powers of a reduced fraction are reduced
    return out;
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(r.get_den_mpz_t()) == 0) return std::nullopt;
    Rat out;
    mpz_sqrt(out.get_num_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(out.get_den_mpz_t(), r.get_den_mpz_t());
    return out;
}

Rat factorial(unsigned long n) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return Rat(z);
}

Rat double_factorial(long n) {
    if (n < -1) throw std::invalid_argument("double_factorial: n < -1");
    if (n <= 0) return Rat(1);
    mpz_class z;
    mpz_2fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(z);
}

Rat binom(unsigned long n, unsigned long k) {
    if (k > n) return Rat(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return Rat(z);
}

Rat gen_binomial(HalfInt r, unsigned long j) {
    Rat num(1);
    for (unsigned long i = 0; i < j; ++i) {
        num *= make_rat(r.twice() - 2 * static_cast<long>(i), 2);
    }
    return num / factorial(j);
}

}  // namespace riemcurv
