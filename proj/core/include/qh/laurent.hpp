#pragma once

#include "qh/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qh {

// Laurent polynomial in q with rational coefficients.
// Terms are kept sorted by exponent with no zero coefficients.
class QLaurent {
public:
    using Term = std::pair<int, Rational>;

    QLaurent() = default;
    QLaurent(const Rational& c, int e = 0);
    QLaurent(long c) : QLaurent(Rational(c)) {}

    static QLaurent q(int e = 1) { return QLaurent(Rational(1), e); }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(int e) const;
    int min_exp() const { return terms_.front().first; }
    int max_exp() const { return terms_.back().first; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    Rational constant() const { return coeff(0); }

    Rational eval(const Rational& q) const;
    double eval_d(double q) const;

    // this += c * q^shift * x
    void add_scaled(const QLaurent& x, const Rational& c, int shift = 0);
    void add_term(int e, const Rational& c);

    QLaurent& operator+=(const QLaurent& x) { add_scaled(x, 1); return *this; }
    QLaurent& operator-=(const QLaurent& x) { add_scaled(x, -1); return *this; }
    QLaurent& operator*=(const QLaurent& x);
    QLaurent& operator*=(const Rational& c);

    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator*(QLaurent a, const Rational& c) { return a *= c; }
    friend QLaurent operator*(const Rational& c, QLaurent a) { return a *= c; }
    friend QLaurent operator-(QLaurent a) { return a *= Rational(-1); }
    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

    QLaurent shifted(int s) const;

    // e.g. "3*q^2 - q + 1/2"
    std::string str() const;

private:
    std::vector<Term> terms_;
};

}  // namespace qh
