#include "cohomo.hpp"

#include <algorithm>
#include <numeric>

#include "classify.hpp"

namespace isoform {

void Poly::trim() {
    while (coeff_.size() > 1 && coeff_.back() == 0) coeff_.pop_back();
    if (coeff_.empty()) coeff_.push_back(0);
}

Poly Poly::one_plus_tk(int k) {
    std::vector<long long> c(k + 1, 0);
    c[0] = 1;
    c[k] = 1;
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    std::vector<long long> c(a.coeff_.size() + b.coeff_.size() - 1, 0);
    for (size_t i = 0; i < a.coeff_.size(); ++i)
        for (size_t j = 0; j < b.coeff_.size(); ++j)
            c[i + j] += a.coeff_[i] * b.coeff_[j];
    return Poly(std::move(c));
}

Poly Poly::div_exact(const Poly& d) const {
    std::vector<long long> rem = coeff_;
    int dd = d.degree();
    if (d.coeff_.back() == 0) throw_internal("polynomial division by zero");
    if ((int)rem.size() - 1 < dd) throw_internal("inexact polynomial division");
    std::vector<long long> q((int)rem.size() - dd, 0);
    for (int i = (int)rem.size() - 1; i >= dd; --i) {
        if (rem[i] % d.coeff_.back() != 0) throw_internal("inexact polynomial division");
        long long f = rem[i] / d.coeff_.back();
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.coeff_[j];
    }
    if (std::any_of(rem.begin(), rem.end(), [](long long x) { return x != 0; }))
        throw_internal("inexact polynomial division");
    return Poly(std::move(q));
}

long long Poly::eval_at_one() const {
    return std::accumulate(coeff_.begin(), coeff_.end(), 0ll);
}

std::string Poly::str() const {
    std::string s;
    for (int d = 0; d <= degree(); ++d) {
        long long c = coeff_[d];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (d == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c);
            s += (d == 1) ? "t" : "t^" + std::to_string(d);
        }
    }
    return s.empty() ? "0" : s;
}

std::vector<int> exponents(SimpleType t) {
    t.validate();
    const int n = t.rank;
    std::vector<int> e;
    switch (t.family) {
        case Family::A:
            for (int i = 1; i <= n; ++i) e.push_back(i);
            break;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
            break;
        case Family::D:
            for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
            e.push_back(n - 1);
            std::sort(e.begin(), e.end());
            break;
        case Family::G: e = {1, 5}; break;
        case Family::F: e = {1, 5, 7, 11}; break;
        case Family::E:
            if (n == 6) e = {1, 4, 5, 7, 8, 11};
            else if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
            else e = {1, 7, 11, 13, 17, 19, 23, 29};
            break;
    }
    return e;
}

std::uint64_t weyl_order_formula(SimpleType t) {
    std::uint64_t o = 1;
    for (int e : exponents(t)) o *= (std::uint64_t)(e + 1);
    return o;
}

Poly poincare_group(const GroupSpec& spec) {
    spec.validate();
    Poly p = Poly::one();
    for (int i = 0; i < spec.central_torus_rank; ++i) p = p * Poly::one_plus_tk(1);
    for (const auto& t : spec.factors)
        for (int e : exponents(t)) p = p * Poly::one_plus_tk(2 * e + 1);
    return p;
}

Poly poincare_circle_quotient(const GroupSpec& spec, const CircleEmbedding& c) {
    c.validate(spec);
    bool central = std::any_of(c.torus_exponents.begin(), c.torus_exponents.end(),
                               [](long long x) { return x != 0; });
    if (central) {
        // The quotient splits off a torus of one lower rank; the semisimple
        // part is untouched up to a finite quotient.
        Poly p = Poly::one();
        for (int i = 0; i + 1 < spec.central_torus_rank; ++i) p = p * Poly::one_plus_tk(1);
        for (const auto& t : spec.factors)
            for (int e : exponents(t)) p = p * Poly::one_plus_tk(2 * e + 1);
        return p;
    }
    // Circle inside the semisimple part: p(G) (1+t^2)/(1+t^3), division exact
    // since a semisimple factor always contributes a degree-3 generator.
    if (spec.factors.empty())
        throw_invariant("circle inside the semisimple part of a pure torus");
    Poly p = poincare_group(spec);
    return (p * Poly::one_plus_tk(2)).div_exact(Poly::one_plus_tk(3));
}

long long total_betti(const Poly& p) { return p.eval_at_one(); }

bool dimension_criterion(const GroupSpec& spec, const CircleEmbedding& c, int pi0N) {
    if (pi0N != 1 && pi0N != 2) throw_invariant("pi0N must be 1 or 2");
    long long h = total_betti(poincare_circle_quotient(spec, c));
    long long bound = (1ll << (spec.total_rank() - 1)) * pi0N;
    return h == bound;
}

} // namespace isoform
