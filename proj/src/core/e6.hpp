#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "linalg.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace isoform {

// A four-dimensional span of mutually orthogonal E6 roots, carrying its three
// distinct unordered bases of positive roots.
struct QuadSpace {
    std::vector<std::vector<int>> bases; // positive-root indices, 3 x 4
    Subspace span;                       // simple-root-basis coordinates
};

// Shared E6 structural data: the root system, the 135 maximal orthogonal
// quadruple sets of positive roots, and the 45 spaces they span. Cheap to
// build (no Weyl enumeration); immutable once constructed.
class E6Data {
public:
    static const E6Data& instance();

    const RootSystem& root_system() const { return rs_; }
    const std::vector<std::vector<int>>& quadruple_sets() const { return quads_; }
    const std::vector<QuadSpace>& spaces() const { return spaces_; }
    // Census of the 135 sets over the five combinatorial families, in the
    // order (eps/eta/gamma/delta, eta2gamma2, eta2delta2, gamma2delta2,
    // zeta/eps/delta2).
    const std::array<int, 5>& census() const { return census_; }
    // Largest number of mutually orthogonal roots (expected 4).
    int max_orthogonal_set_size() const { return max_orthogonal_; }

    // Membership of the line sum(c_i alpha_i) in one of the 45 spaces; c is
    // given on the simple (co)roots, which the simply-laced Killing
    // identification matches with the simple roots.
    bool line_in_quad_space(const std::vector<long long>& c) const;

private:
    E6Data();
    RootSystem rs_;
    std::vector<std::vector<int>> quads_;
    std::vector<QuadSpace> spaces_;
    std::array<int, 5> census_{};
    int max_orthogonal_ = 0;
};

struct E6ClassCheck {
    int class_id = 0;
    int element_order = 0;
    int eigen_dim = 0;
    bool contained = false;
};

struct E6Report {
    std::uint64_t weyl_order = 0;
    int root_count = 0;
    int positive_count = 0;
    int quadruple_set_count = 0;
    std::array<int, 5> census{};
    int space_count = 0;
    bool three_bases_each = false;
    int max_orthogonal_set_size = 0;
    int conjugacy_class_count = 0;
    bool no_order_16 = false;
    int max_involution_eigen_dim = 0;
    int involution_dim4_count = 0;
    bool involution_spaces_equal_spans = false;
    std::vector<E6ClassCheck> order_4_8_checks;
    bool all_contained = false;
    std::array<std::uint64_t, 4> stabilizer_chain{};
    std::uint64_t ordered_quadruple_orbit = 0;

    bool ok() const;
};

// Eigenspace-containment verification: no order-16 classes, the 45 maximal
// involution (-1)-eigenspaces coincide with the 45 spans, and every order-4/8
// class representative has its (-1)-eigenspace inside one of them. Failures
// are report content, not exceptions.
E6Report verify_minus_one_union(const WeylGroup& W);

// Stabilizer chain (720, 24, 2, 1) of the reference ordered quadruple
// (zeta, -eps_1, delta_23, delta_45) by direct filtering.
std::array<std::uint64_t, 4> verify_simple_transitivity(const WeylGroup& W);

// Orbit of one quad space under the generators; expected size 45.
int quad_space_orbit_size(const WeylGroup& W);

} // namespace isoform
