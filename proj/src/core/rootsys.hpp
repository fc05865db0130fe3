#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "rat.hpp"

namespace isoform {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family;
    int rank;

    // Throws an invariant error unless (family, rank) is an admissible
    // Killing-Cartan label: A/B/C rank>=1, D rank>=2, E in {6,7,8}, F4, G2.
    void validate() const;

    std::string str() const;
    friend bool operator==(const SimpleType& a, const SimpleType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
};

Family family_from_string(const std::string& s);

// A root system in exact coordinates. Root vectors are stored doubled
// (coordinates multiplied by 2) so that the half-integer entries of the
// E-family become integers; the pairing divides by 4 accordingly.
class RootSystem {
public:
    static RootSystem build(SimpleType t);

    SimpleType type() const { return type_; }
    int rank() const { return type_.rank; }
    int ambient_dim() const { return ambient_; }
    int num_roots() const { return (int)roots_.size(); }

    // Doubled ambient coordinates of root i.
    const IVec& root(int i) const { return roots_[i]; }
    const std::vector<IVec>& roots() const { return roots_; }

    // Integer coordinates of root i in the simple-root basis.
    const IVec& root_in_basis(int i) const { return root_basis_coords_[i]; }

    const std::vector<int>& simple_indices() const { return simple_; }
    const std::vector<int>& positive_indices() const { return positive_; }

    int negation_of(int i) const { return negation_[i]; }
    std::optional<int> index_of(const IVec& doubled_coords) const;

    // Exact inner product of roots i and j under the standard pairing.
    Rat pairing(int i, int j) const { return Rat(ivec_dot(roots_[i], roots_[j]), 4); }

    // Action of the reflection s_{root j} on root index i, as a root index.
    int reflect_root(int root_j, int i) const;

    // Reflection matrix s_alpha for root index i, acting on undoubled ambient
    // coordinates.
    RatMat reflection_matrix(int i) const;

    // True iff the listed roots are pairwise orthogonal.
    bool mutually_orthogonal(const std::vector<int>& idx) const;

    // Root coordinates for a rational ambient vector scaled to integers
    // (doubled convention), i.e. returns an integer vector proportional to 2v
    // with positive proportionality factor.
    static IVec scale_to_integer(const RatVec& v);

private:
    SimpleType type_;
    int ambient_ = 0;
    std::vector<IVec> roots_;
    std::vector<IVec> root_basis_coords_;
    std::vector<int> simple_;
    std::vector<int> positive_;
    std::vector<int> negation_;

    void generate_closure(const std::vector<IVec>& simple_doubled);
    void compute_basis_coords();
    void choose_positive();
    void choose_positive_e6();
};

// The E6 positive roots carry the combinatorial labels of the five families
// gamma_ab, delta_ab, eta_ab, eps_a, zeta used throughout the E6 analysis.
enum class E6Kind { Gamma, Delta, Eta, Eps, Zeta };

// Classifies a doubled E6 root vector; throws internally if it is not one of
// the 36 declared positive roots.
E6Kind e6_kind(const IVec& doubled);

// Doubled coordinates of the named E6 roots (1-based indices a,b <= 5).
IVec e6_gamma(int a, int b);
IVec e6_delta(int a, int b);
IVec e6_eta(int a, int b);
IVec e6_eps(int a);
IVec e6_zeta();

} // namespace isoform
