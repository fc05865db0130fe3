#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohomo.hpp"
#include "reflect.hpp"
#include "rootsys.hpp"

namespace isoform {

// A compact connected group in universal-compact-cover normal form: a central
// torus times a list of simple, simply-connected factors.
struct GroupSpec {
    int central_torus_rank = 0;
    std::vector<SimpleType> factors;

    int total_rank() const;
    void validate() const;
};

// Integer exponent data for a circle inside the fixed maximal torus of a
// GroupSpec. Factor slices are shaped per family: A rank n has n+1 entries
// summing to zero, B/C/D rank n have n entries, G/F/E have rank entries on
// simple coroots.
struct CircleEmbedding {
    std::vector<long long> torus_exponents;
    std::vector<std::vector<long long>> factor_exponents;

    void validate(const GroupSpec& spec) const;
};

struct ClassificationReport {
    bool isotropy_formal = false;
    std::string case_label; // "1", "2a", "2b"
    int pi0N = 1;
    std::vector<ReflectionVerdict> per_factor;
    Poly poincare;
    long long betti = 0;
    bool dimension_check = false;
};

// Algorithm: a circle meeting the central torus is immediately formal
// (case 1); a circle inside the semisimple part is formal exactly when its
// image in every simple factor is reflected (case 2a vs 2b).
ClassificationReport classify(const GroupSpec& spec, const CircleEmbedding& c);

// Same verdict, with every cross-check asserted: per-factor criterion vs the
// brute-force Weyl oracle, and the Betti-number dimension criterion. Requires
// every factor's Weyl group within the enumeration budget.
ClassificationReport classify_with_verification(const GroupSpec& spec,
                                                const CircleEmbedding& c,
                                                std::uint64_t budget = kDefaultWeylBudget,
                                                int workers = 1,
                                                const std::string& cache_dir = "");

} // namespace isoform
