#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rootsys.hpp"

namespace isoform {

// Polynomial in t with nonnegative integer coefficients, coefficient list
// indexed by degree.
class Poly {
public:
    Poly() : coeff_{0} {}
    explicit Poly(std::vector<long long> coeff) : coeff_(std::move(coeff)) { trim(); }
    static Poly one() { return Poly({1}); }
    // 1 + t^k
    static Poly one_plus_tk(int k);

    const std::vector<long long>& coeff() const { return coeff_; }
    int degree() const { return (int)coeff_.size() - 1; }
    long long at(int d) const { return d < (int)coeff_.size() ? coeff_[d] : 0; }

    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeff_ == b.coeff_; }

    // Exact division; throws an internal error if the division leaves a
    // remainder.
    Poly div_exact(const Poly& d) const;

    long long eval_at_one() const;

    std::string str() const; // "1 + t^2 + 2t^3" style

private:
    void trim();
    std::vector<long long> coeff_;
};

// Standard exponents e_i of each simple type; the Weyl order is prod(e_i+1)
// and the group's rational cohomology is exterior on generators of degree
// 2e_i+1.
std::vector<int> exponents(SimpleType t);

std::uint64_t weyl_order_formula(SimpleType t);

struct GroupSpec; // defined in classify.hpp
struct CircleEmbedding;

Poly poincare_group(const GroupSpec& spec);
Poly poincare_circle_quotient(const GroupSpec& spec, const CircleEmbedding& c);
long long total_betti(const Poly& p);
bool dimension_criterion(const GroupSpec& spec, const CircleEmbedding& c, int pi0N);

} // namespace isoform
