#pragma once

#include "qh/matrix.hpp"

#include <json.hpp>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qh {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = true;
    std::vector<std::string> checks;    // one line per instance
    std::vector<std::string> failures;  // subset of checks that failed
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what);
};

struct VerifyOptions {
    std::uint64_t seed = 20241019;
    int random_matrices = 100;
};

CriterionResult verify_criterion(int id, const VerifyOptions& opt = {});
std::vector<CriterionResult> verify_all(const VerifyOptions& opt = {});
nlohmann::json verify_to_json(const std::vector<CriterionResult>& results);

// P J P^{-1} with rational J: dominant +-lambda semisimple, the rest of modulus <= lambda/2
struct SpectralSample {
    RatMatrix m;
    RatVector z;
};
SpectralSample random_spectral_sample(std::mt19937_64& rng, int n = 6);
RatMatrix random_rational_matrix(std::mt19937_64& rng, int n, int range = 5, int max_den = 3);

}  // namespace qh
