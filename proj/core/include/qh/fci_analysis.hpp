#pragma once

#include "qh/complexity.hpp"
#include "qh/rings.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qh {

// closed-form predictions for a Fano complete intersection next to the computed values
struct FciReport {
    FciModel model;
    FrobeniusRing ring;
    Integer chi_oracle;  // Chern-series value, independent of any override
    std::string branch;  // "H", "Hh chi=r+1", "Hh omega!=0", "Hh omega=0"

    bool predicted_closed = false;
    std::vector<ProjState> predicted_states;  // empty when the orbit is predicted infinite
    FiniteStates computed;

    long predicted_dim_f = 0;
    std::size_t computed_dim_f = 0;

    // Hh case with chi != r+1: multiplication by Delta in the basis Hh^{r-j}, j = 0..r
    std::optional<RatMatrix> a;
    bool a_upper_triangular = false;
    bool a_diagonal = false;
    bool a_omega = false;
    bool a_xi = false;
    bool a_jordan = false;  // (A - beta I)^{r-1} != 0

    bool states_match() const;
    bool a_shape_ok() const { return a_upper_triangular && a_diagonal && a_omega && a_xi && a_jordan; }
};

FciReport fci_report(const FciModel& model, int kmax = -1);

}  // namespace qh
