#include "qh/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace qh {

QLaurent::QLaurent(const Rational& c, int e)
{
    if (c != 0) terms_.emplace_back(e, c);
}

Rational QLaurent::coeff(int e) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int v) { return t.first < v; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

Rational QLaurent::eval(const Rational& q) const
{
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c * pow(q, e);
    return s;
}

double QLaurent::eval_d(double q) const
{
    double s = 0;
    for (const auto& [e, c] : terms_) s += c.get_d() * std::pow(q, e);
    return s;
}

void QLaurent::add_term(int e, const Rational& c)
{
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int v) { return t.first < v; });
    if (it != terms_.end() && it->first == e) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term(e, c));
    }
}

void QLaurent::add_scaled(const QLaurent& x, const Rational& c, int shift)
{
    if (c == 0 || x.is_zero()) return;
    if (terms_.empty()) {
        terms_.reserve(x.terms_.size());
        for (const auto& [e, v] : x.terms_) terms_.emplace_back(e + shift, v * c);
        return;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + x.terms_.size());
    auto a = terms_.begin();
    auto b = x.terms_.begin();
    while (a != terms_.end() || b != x.terms_.end()) {
        if (b == x.terms_.end() || (a != terms_.end() && a->first < b->first + shift)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first + shift < a->first) {
            out.emplace_back(b->first + shift, b->second * c);
            ++b;
        } else {
            Rational s = a->second + b->second * c;
            if (s != 0) out.emplace_back(a->first, std::move(s));
            ++a, ++b;
        }
    }
    terms_ = std::move(out);
}

QLaurent operator*(const QLaurent& a, const QLaurent& b)
{
    QLaurent r;
    for (const auto& [e, c] : a.terms_) r.add_scaled(b, c, e);
    return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& x)
{
    *this = *this * x;
    return *this;
}

QLaurent& QLaurent::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

QLaurent QLaurent::shifted(int s) const
{
    QLaurent r = *this;
    for (auto& t : r.terms_) t.first += s;
    return r;
}

std::string QLaurent::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string qs = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
        if (qs.empty())
            out += to_string(a);
        else if (a == 1)
            out += qs;
        else
            out += to_string(a) + "*" + qs;
    }
    return out;
}

}  // namespace qh
