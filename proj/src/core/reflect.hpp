#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootsys.hpp"
#include "weyl.hpp"

namespace isoform {

struct ReflectionVerdict {
    bool reflected = false;
    // Which criterion fired: "trivial", "exponent-multiset", "always",
    // "zero-coordinate", "d4-space".
    std::string criterion;
    // Present only when the brute-force oracle was consulted: the witness
    // element's images of the simple roots.
    std::optional<std::vector<int>> witness_simple_images;
};

// The multiset J of winding numbers of a circle in the diagonal torus of an
// A-family factor; entries counted with multiplicity. Requires sum zero.
std::multimap<long long, int> exponent_multiset(const std::vector<long long>& e);

// Decides reflectedness of a circle image in one simple factor by the
// per-family criterion (exponent multiset for A, parity/zero-coordinate for
// odd D, membership in one of the 45 four-dimensional root spans for E6, and
// "always" elsewhere). All-zero exponents denote the trivial image and count
// as reflected.
ReflectionVerdict is_reflected_factor(SimpleType t, const std::vector<long long>& e);

// The ambient direction vector of the circle's Lie algebra line for a factor,
// used by the brute-force oracle: coordinate exponents for the classical
// families, Killing-dual combinations of simple (co)roots for G/F/E.
RatVec factor_direction_vector(const RootSystem& rs, const std::vector<long long>& e);

// True iff the Table-criterion verdict agrees with the exhaustive Weyl-group
// oracle for this factor and exponent vector.
bool oracle_cross_check(SimpleType t, const std::vector<long long>& e,
                        std::uint64_t budget = kDefaultWeylBudget, int workers = 1,
                        const std::string& cache_dir = "");

// Validates the exponent slice shape for the family; throws invariant errors.
void validate_factor_exponents(SimpleType t, const std::vector<long long>& e);

} // namespace isoform
