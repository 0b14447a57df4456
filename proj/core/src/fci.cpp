#include "qh/rings.hpp"

#include <numeric>
#include <stdexcept>

namespace qh {

Integer fci_euler(const std::vector<int>& m, int r)
{
    const int L = static_cast<int>(m.size());
    // coefficients of (1+h)^(r+L+1) / prod(1 + m_i h) up to h^r
    std::vector<Rational> s(r + 1);
    for (int i = 0; i <= r; ++i) s[i] = Rational(binomial(r + L + 1, i));
    for (int mi : m) {
        // divide by (1 + mi h): t_i = s_i - mi t_{i-1}
        for (int i = 1; i <= r; ++i) s[i] -= mi * s[i - 1];
    }
    Rational chi = s[r];
    for (int mi : m) chi *= mi;
    return Integer(chi);
}

FciModel fci_model(const std::vector<int>& m, int r, std::optional<Integer> chi)
{
    if (m.empty()) throw std::invalid_argument("fci: empty degree list");
    for (int mi : m)
        if (mi < 2) throw std::invalid_argument("fci: every degree must be at least 2");
    if (r < 3) throw std::invalid_argument("fci: dimension r >= 3 required");
    FciModel md;
    md.m = m;
    md.r = r;
    md.L = static_cast<int>(m.size());
    md.abs_m = std::accumulate(m.begin(), m.end(), 0);
    if (md.abs_m > r + md.L) throw std::invalid_argument("fci: not Fano (|m| > r + L)");
    md.tau = r + md.L + 1 - md.abs_m;
    md.kappa = md.abs_m - md.L - 1;
    md.hat_basis = md.abs_m == r + md.L;
    md.chi = chi ? *chi : fci_euler(m, r);
    md.chi_override = chi.has_value();
    md.m_pow_m = md.m_fact = md.m_inv = md.m_pow_m1 = 1;
    for (int mi : m) {
        md.m_pow_m *= pow(Rational(mi), mi);
        md.m_pow_m1 *= pow(Rational(mi), mi - 1);
        md.m_inv /= mi;
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mi));
        md.m_fact *= Rational(f);
    }
    Integer p = md.chi - (r + 1);
    md.primitive_dim = r % 2 ? Integer(-p) : p;
    if (md.hat_basis) {
        const Rational c(md.chi);
        const Rational t = Rational(r + 1) - c;
        md.zeta = md.m_inv * t * (md.m_pow_m - md.m_fact);
        md.beta = md.zeta * pow(md.m_fact, r - 1);
        md.xi = md.zeta * pow(md.m_fact, r - 2);
        md.alpha = (md.m_inv - md.m_inv * pow(md.m_pow_m, -r) * pow(md.m_fact, r) * t) * pow(md.m_pow_m, r);
        md.omega = (pow(md.m_pow_m, r - 1) - t * pow(md.m_fact, r - 1)) * md.m_inv;
    }
    return md;
}

FrobeniusRing fano_ci(const FciModel& md)
{
    const int r = md.r;
    const std::size_t n = static_cast<std::size_t>(r + 1);
    FrobeniusRing R;
    std::string ms;
    for (std::size_t i = 0; i < md.m.size(); ++i) ms += (i ? "," : "") + std::to_string(md.m[i]);
    R.name = "fci:" + ms + ";r=" + std::to_string(r);
    const std::string g = md.hat_basis ? "Hh" : "H";
    for (int s = 0; s <= r; ++s) {
        R.labels.push_back(s == 0 ? "1" : s == 1 ? g : g + "^" + std::to_string(s));
        R.degrees.push_back(s);
    }
    R.tau = md.tau;

    // quantum power G^{*s} written in the basis G^{*0..r}
    auto reduce = [&](int s) {
        RingElement x(n);
        QLaurent c(1);
        while (s > r) {
            c = c * QLaurent(md.m_pow_m, 1);
            s = md.hat_basis ? s - 1 : s - r - 1 + md.kappa + 1;
        }
        x[s] = c;
        return x;
    };
    Rational deg = 1;
    for (int mi : md.m) deg *= mi;
    R.structure.assign(n * n, StructureEntry());
    R.pairing.assign(n * n, QLaurent());
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j) {
            RingElement x = reduce(i + j);
            for (auto w : x.support()) R.structure[i * n + j].push_back({w, x[w]});
            // integral of G^{*s} only sees the top class
            R.pairing[i * n + j] = x[r] * QLaurent(deg);
        }
    R.unit_index = 0;

    RingElement delta(n);
    const Rational chi(md.chi);
    if (!md.hat_basis) {
        delta[r] += QLaurent(md.m_inv * chi);
        delta[md.kappa] += QLaurent((Rational(md.tau) - chi) * md.m_pow_m1, 1);
    } else {
        delta[r] += QLaurent(md.m_inv * chi);
        for (int j = 1; j <= r; ++j) {
            Rational c = md.zeta - (j == 1 ? md.m_pow_m1 * r : Rational(0));
            delta[r - j] += QLaurent(c * pow(md.m_fact, j - 1), j);
        }
    }
    R.installed_handle = delta;
    validate(R);
    return R;
}

}  // namespace qh
