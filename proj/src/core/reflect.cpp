#include "reflect.hpp"

#include <algorithm>
#include <numeric>

#include "e6.hpp"

namespace isoform {

void validate_factor_exponents(SimpleType t, const std::vector<long long>& e) {
    t.validate();
    size_t want;
    switch (t.family) {
        case Family::A: want = (size_t)t.rank + 1; break;
        default: want = (size_t)t.rank; break;
    }
    if (e.size() != want)
        throw_invariant("factor " + t.str() + " expects " + std::to_string(want) +
                        " exponents, got " + std::to_string(e.size()));
    if (t.family == Family::A) {
        long long sum = std::accumulate(e.begin(), e.end(), 0ll);
        if (sum != 0)
            throw_invariant("A-factor exponents must sum to zero (got sum " +
                            std::to_string(sum) + ")");
    }
}

std::multimap<long long, int> exponent_multiset(const std::vector<long long>& e) {
    long long sum = std::accumulate(e.begin(), e.end(), 0ll);
    if (sum != 0) throw_invariant("exponent multiset requires sum zero");
    std::multimap<long long, int> m;
    for (long long x : e) m.emplace(x, 1);
    return m;
}

namespace {

bool multiset_self_negating(const std::vector<long long>& e) {
    std::vector<long long> a = e, b;
    for (long long x : e) b.push_back(-x);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace

ReflectionVerdict is_reflected_factor(SimpleType t, const std::vector<long long>& e) {
    validate_factor_exponents(t, e);
    if (std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; }))
        return {true, "trivial", std::nullopt};

    switch (t.family) {
        case Family::A:
            return {multiset_self_negating(e), "exponent-multiset", std::nullopt};
        case Family::B:
        case Family::C:
        case Family::G:
        case Family::F:
            return {true, "always", std::nullopt};
        case Family::D:
            if (t.rank % 2 == 0) return {true, "always", std::nullopt};
            return {std::any_of(e.begin(), e.end(), [](long long x) { return x == 0; }),
                    "zero-coordinate", std::nullopt};
        case Family::E:
            if (t.rank != 6) return {true, "always", std::nullopt};
            return {E6Data::instance().line_in_quad_space(e), "d4-space", std::nullopt};
    }
    throw_internal("unhandled family");
    return {};
}

RatVec factor_direction_vector(const RootSystem& rs, const std::vector<long long>& e) {
    SimpleType t = rs.type();
    validate_factor_exponents(t, e);
    switch (t.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::D: {
            // Coordinate exponents on the standard maximal torus.
            RatVec v(rs.ambient_dim());
            for (size_t i = 0; i < e.size(); ++i) v[i] = Rat(e[i]);
            return v;
        }
        case Family::E:
        case Family::F:
        case Family::G: {
            // Killing-dual of sum c_i alpha_i^vee: sum c_i 2/(a_i.a_i) alpha_i.
            RatVec v(rs.ambient_dim(), Rat(0));
            const auto& simple = rs.simple_indices();
            for (size_t i = 0; i < e.size(); ++i) {
                int s = simple[i];
                Rat len2 = rs.pairing(s, s);
                Rat coef = Rat(2 * e[i]) / len2;
                for (int k = 0; k < rs.ambient_dim(); ++k)
                    v[k] += coef * Rat(rs.root(s)[k], 2);
            }
            return v;
        }
    }
    throw_internal("unhandled family");
    return {};
}

bool oracle_cross_check(SimpleType t, const std::vector<long long>& e,
                        std::uint64_t budget, int workers, const std::string& cache_dir) {
    ReflectionVerdict verdict = is_reflected_factor(t, e);
    if (std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; }))
        return verdict.reflected; // trivial image: identity reflects it
    RootSystem rs = RootSystem::build(t);
    WeylGroup W = WeylGroup::load_or_generate(rs, budget, cache_dir);
    RatVec v = factor_direction_vector(rs, e);
    bool oracle = W.reflecting_element(v, workers).has_value();
    return oracle == verdict.reflected;
}

} // namespace isoform
