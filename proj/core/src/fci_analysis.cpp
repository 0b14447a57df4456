#include "qh/fci_analysis.hpp"

#include <algorithm>
#include <numeric>

namespace qh {

bool FciReport::states_match() const
{
    if (predicted_closed != computed.closed) return false;
    if (!predicted_closed) return true;
    auto a = predicted_states, b = computed.states;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

FciReport fci_report(const FciModel& md, int kmax)
{
    FciReport rep;
    rep.model = md;
    rep.ring = fano_ci(md);
    rep.chi_oracle = fci_euler(md.m, md.r);
    const FrobeniusRing& R = rep.ring;
    const int r = md.r;
    const std::size_t n = R.dim();
    if (kmax < 0) kmax = 10 * static_cast<int>(n);

    const RingElement delta = handle_element(R);
    const ProjState one(R.unit().at_q(1));
    auto add_state = [&](const RatVector& v) {
        if (is_zero(v)) return;
        ProjState s(v);
        if (std::find(rep.predicted_states.begin(), rep.predicted_states.end(), s) == rep.predicted_states.end())
            rep.predicted_states.push_back(s);
    };
    auto e = [&](std::size_t i) { return R.basis(i).at_q(1); };

    const Rational chi(md.chi);
    if (!md.hat_basis) {
        rep.branch = "H";
        const int d = std::gcd(r, md.tau);
        rep.predicted_closed = true;
        add_state(e(0));
        add_state(delta.at_q(1));
        for (int j = md.kappa / d + 1; j <= r / d; ++j) add_state(e(static_cast<std::size_t>(j * d)));
        rep.predicted_dim_f = md.tau != md.chi ? 2 + md.tau / d : 1 + md.tau / d;
    } else if (md.chi == r + 1) {
        rep.branch = "Hh chi=r+1";
        rep.predicted_closed = true;
        add_state(e(0));
        add_state(delta.at_q(1));
        add_state(e(static_cast<std::size_t>(r)));
        rep.predicted_dim_f = 3;
    } else {
        rep.branch = md.omega != 0 ? "Hh omega!=0" : "Hh omega=0";
        rep.predicted_closed = false;
        rep.predicted_dim_f = md.omega != 0 ? r + 1 : r;

        RatMatrix m = mult_matrix(R, delta, Rational(1));
        RatMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = m(n - 1 - i, n - 1 - j);
        rep.a_upper_triangular = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (a(i, j) != 0) rep.a_upper_triangular = false;
        rep.a_diagonal = a(0, 0) == md.alpha;
        for (std::size_t i = 1; i < n; ++i)
            if (a(i, i) != md.beta) rep.a_diagonal = false;
        rep.a_omega = a(0, 1) == md.omega;
        rep.a_xi = true;
        for (std::size_t i = 1; i + 1 < n; ++i)
            if (a(i, i + 1) != md.xi) rep.a_xi = false;
        rep.a_jordan = !a.shifted(md.beta).power(static_cast<unsigned>(r - 1)).is_zero();
        rep.a = a;
    }
    rep.computed = finite_state_set(R, one, kmax);
    rep.computed_dim_f = f_span_dim(R).dim;
    return rep;
}

}  // namespace qh
