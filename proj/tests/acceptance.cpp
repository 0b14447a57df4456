#include "qh/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

// prints one PASS/FAIL line per criterion; --criterion N runs one, -v adds the per-instance lines
int main(int argc, char** argv)
{
    int only = 0;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "-v")) verbose = true;
        else {
            std::cerr << "usage: acceptance [--criterion N] [-v]\n";
            return 2;
        }
    }
    bool all = true;
    for (int id = 1; id <= 8; ++id) {
        if (only && id != only) continue;
        qh::CriterionResult r = qh::verify_criterion(id);
        all = all && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << r.title << "\n";
        for (const auto& c : r.checks)
            if (verbose || only || c.rfind("FAIL", 0) == 0) std::cout << "    " << c << "\n";
        for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
    }
    return all ? 0 : 1;
}
