#include "qh/rational.hpp"

#include <stdexcept>

namespace qh {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& s)
{
    Rational r;
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

double to_double(const Rational& x) { return x.get_d(); }

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational pow(const Rational& x, long e)
{
    if (e < 0) {
        if (x == 0) throw std::domain_error("zero to a negative power");
        return Rational(1) / pow(x, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational frac(long p, long q)
{
    if (q == 0) throw std::domain_error("frac: zero denominator");
    Rational x(p, q);
    x.canonicalize();
    return x;
}

}  // namespace qh
