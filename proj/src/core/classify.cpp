#include "classify.hpp"

#include <algorithm>
#include <numeric>

namespace isoform {

int GroupSpec::total_rank() const {
    int r = central_torus_rank;
    for (const auto& t : factors) r += t.rank;
    return r;
}

void GroupSpec::validate() const {
    if (central_torus_rank < 0)
        throw_invariant("central_torus_rank must be nonnegative");
    if (central_torus_rank == 0 && factors.empty())
        throw_invariant("group spec is empty: no central torus and no factors");
    for (const auto& t : factors) t.validate();
}

void CircleEmbedding::validate(const GroupSpec& spec) const {
    spec.validate();
    if ((int)torus_exponents.size() != spec.central_torus_rank)
        throw_invariant("torus_exponents length " + std::to_string(torus_exponents.size()) +
                        " does not match central torus rank " +
                        std::to_string(spec.central_torus_rank));
    if (factor_exponents.size() != spec.factors.size())
        throw_invariant("factor_exponents count " + std::to_string(factor_exponents.size()) +
                        " does not match factor count " + std::to_string(spec.factors.size()));
    long long g = 0;
    bool any = false;
    for (long long x : torus_exponents) {
        g = std::gcd(g, x < 0 ? -x : x);
        any = any || x != 0;
    }
    for (size_t j = 0; j < spec.factors.size(); ++j) {
        validate_factor_exponents(spec.factors[j], factor_exponents[j]);
        for (long long x : factor_exponents[j]) {
            g = std::gcd(g, x < 0 ? -x : x);
            any = any || x != 0;
        }
    }
    if (!any) throw_invariant("circle embedding has no nonzero exponent");
    if (g != 1)
        throw_invariant("circle exponents have gcd " + std::to_string(g) + ", expected 1");
}

namespace {

// Factor slice normalized by its gcd; all-zero slices (trivial image) pass
// through unchanged.
std::vector<long long> image_exponents(const std::vector<long long>& slice) {
    long long g = 0;
    for (long long x : slice) g = std::gcd(g, x < 0 ? -x : x);
    if (g <= 1) return slice;
    std::vector<long long> out = slice;
    for (auto& x : out) x /= g;
    return out;
}

} // namespace

ClassificationReport classify(const GroupSpec& spec, const CircleEmbedding& c) {
    c.validate(spec);
    ClassificationReport rep;

    bool in_commutator = std::all_of(c.torus_exponents.begin(), c.torus_exponents.end(),
                                     [](long long x) { return x == 0; });
    if (!in_commutator) {
        rep.case_label = "1";
        rep.isotropy_formal = true;
        rep.pi0N = 1;
    } else {
        bool all_reflected = true;
        for (size_t j = 0; j < spec.factors.size(); ++j) {
            ReflectionVerdict v =
                is_reflected_factor(spec.factors[j], image_exponents(c.factor_exponents[j]));
            all_reflected = all_reflected && v.reflected;
            rep.per_factor.push_back(std::move(v));
        }
        rep.case_label = all_reflected ? "2a" : "2b";
        rep.isotropy_formal = all_reflected;
        rep.pi0N = all_reflected ? 2 : 1;
    }

    rep.poincare = poincare_circle_quotient(spec, c);
    rep.betti = total_betti(rep.poincare);
    rep.dimension_check = dimension_criterion(spec, c, rep.pi0N);
    if (rep.dimension_check != rep.isotropy_formal)
        throw_internal("dimension criterion disagrees with the case analysis");
    return rep;
}

ClassificationReport classify_with_verification(const GroupSpec& spec,
                                                const CircleEmbedding& c,
                                                std::uint64_t budget, int workers,
                                                const std::string& cache_dir) {
    ClassificationReport rep = classify(spec, c);
    for (size_t j = 0; j < spec.factors.size(); ++j) {
        if (!oracle_cross_check(spec.factors[j], image_exponents(c.factor_exponents[j]),
                                budget, workers, cache_dir))
            throw_internal("criterion/oracle disagreement on factor " +
                           spec.factors[j].str());
    }
    if (!dimension_criterion(spec, c, rep.pi0N) != !rep.isotropy_formal)
        throw_internal("dimension criterion inconsistent with verdict");
    return rep;
}

} // namespace isoform
