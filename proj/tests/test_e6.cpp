#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "core/e6.hpp"
#include "core/linalg.hpp"
#include "core/weyl.hpp"

using namespace isoform;

namespace {

int idx(const RootSystem& rs, const IVec& v) {
    auto i = rs.index_of(v);
    REQUIRE(i.has_value());
    return *i;
}

RatVec basis_coords(const RootSystem& rs, int root) {
    const IVec& c = rs.root_in_basis(root);
    RatVec out(c.size());
    for (size_t i = 0; i < c.size(); ++i) out[i] = Rat(c[i]);
    return out;
}

} // namespace

TEST_CASE("orthogonal quadruple census") {
    const E6Data& d = E6Data::instance();
    CHECK(d.quadruple_sets().size() == 135);
    CHECK(d.census() == std::array<int, 5>{60, 30, 15, 15, 15});
    CHECK(d.max_orthogonal_set_size() == 4);

    // every listed set really is four mutually orthogonal positive roots
    const RootSystem& rs = d.root_system();
    std::set<int> positives(rs.positive_indices().begin(),
                            rs.positive_indices().end());
    for (const auto& q : d.quadruple_sets()) {
        REQUIRE(q.size() == 4);
        CHECK(rs.mutually_orthogonal(q));
        for (int r : q) CHECK(positives.count(r) == 1);
    }
}

TEST_CASE("a named zeta/eps/delta/delta quadruple is present") {
    const E6Data& d = E6Data::instance();
    const RootSystem& rs = d.root_system();
    std::vector<int> want = {idx(rs, e6_zeta()), idx(rs, e6_eps(5)),
                             idx(rs, e6_delta(1, 2)), idx(rs, e6_delta(3, 4))};
    std::sort(want.begin(), want.end());
    bool present = false;
    for (auto q : d.quadruple_sets()) {
        std::sort(q.begin(), q.end());
        if (q == want) present = true;
    }
    CHECK(present);
}

TEST_CASE("45 spaces, three bases each") {
    const E6Data& d = E6Data::instance();
    CHECK(d.spaces().size() == 45);
    for (const auto& sp : d.spaces()) {
        CHECK(sp.bases.size() == 3);
        CHECK(sp.span.dim() == 4);
        // all twelve basis roots lie in the span
        for (const auto& b : sp.bases)
            for (int r : b)
                CHECK(sp.span.contains(basis_coords(d.root_system(), r)));
    }
    // the spans are pairwise distinct
    std::set<Subspace> spans;
    for (const auto& sp : d.spaces()) spans.insert(sp.span);
    CHECK(spans.size() == 45);
}

TEST_CASE("the gamma/delta 12-34 span matches its sibling basis") {
    const RootSystem& rs = E6Data::instance().root_system();
    auto span_of = [&](const std::vector<int>& roots) {
        RatMat rows;
        for (int r : roots) rows.push_back(basis_coords(rs, r));
        return Subspace(rows);
    };
    IVec neg_g23 = e6_gamma(2, 3);
    for (auto& x : neg_g23) x = -x;
    Subspace a = span_of({idx(rs, e6_gamma(1, 2)), idx(rs, e6_delta(1, 2)),
                          idx(rs, e6_gamma(3, 4)), idx(rs, e6_delta(3, 4))});
    Subspace b = span_of({idx(rs, e6_gamma(1, 2)), idx(rs, e6_gamma(3, 4)),
                          idx(rs, e6_delta(3, 4)), idx(rs, neg_g23)});
    CHECK(a == b);
}

TEST_CASE("line membership for root directions") {
    const E6Data& d = E6Data::instance();
    const RootSystem& rs = d.root_system();
    // every root line lies in some quadruple span
    for (int i = 0; i < rs.num_roots(); ++i) {
        const IVec& c = rs.root_in_basis(i);
        CHECK(d.line_in_quad_space(std::vector<long long>(c.begin(), c.end())));
    }
    CHECK(d.line_in_quad_space({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("line membership agrees with the exhaustive Weyl oracle") {
    const E6Data& d = E6Data::instance();
    const RootSystem& rs = d.root_system();
    WeylGroup W = WeylGroup::generate(rs);
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coef(-3, 3);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<long long> c(6);
        for (auto& x : c) x = coef(rng);
        if (std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; }))
            continue;
        // ambient direction sum c_i alpha_i
        RatVec v(rs.ambient_dim(), Rat(0));
        for (int j = 0; j < 6; ++j) {
            const IVec& a = rs.root(rs.simple_indices()[j]);
            for (int k = 0; k < rs.ambient_dim(); ++k)
                v[k] += Rat(c[j] * a[k], 2);
        }
        bool criterion = d.line_in_quad_space(c);
        bool oracle = W.reflecting_element(v, 2).has_value();
        CAPTURE(trial);
        CHECK(criterion == oracle);
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("full structural report") {
    const RootSystem& rs = E6Data::instance().root_system();
    WeylGroup W = WeylGroup::generate(rs);
    E6Report rep = verify_minus_one_union(W);
    CHECK(rep.weyl_order == 51840);
    CHECK(rep.root_count == 72);
    CHECK(rep.positive_count == 36);
    CHECK(rep.quadruple_set_count == 135);
    CHECK(rep.census == std::array<int, 5>{60, 30, 15, 15, 15});
    CHECK(rep.space_count == 45);
    CHECK(rep.three_bases_each);
    CHECK(rep.max_orthogonal_set_size == 4);
    CHECK(rep.conjugacy_class_count == 25);
    CHECK(rep.no_order_16);
    CHECK(rep.max_involution_eigen_dim == 4);
    CHECK(rep.involution_dim4_count == 45);
    CHECK(rep.involution_spaces_equal_spans);
    CHECK(!rep.order_4_8_checks.empty());
    for (const auto& c : rep.order_4_8_checks) {
        CAPTURE(c.class_id);
        CHECK((c.element_order == 4 || c.element_order == 8));
        CHECK(c.contained);
    }
    CHECK(rep.all_contained);
    CHECK(rep.stabilizer_chain == std::array<std::uint64_t, 4>{720, 24, 2, 1});
    CHECK(rep.ordered_quadruple_orbit == 51840);
    CHECK(rep.ok());

    // orbit-stabilizer arithmetic for the unordered count
    CHECK(rep.ordered_quadruple_orbit / (16 * 24) == 135);
}

TEST_CASE("the 45 spaces form a single orbit under the group") {
    WeylGroup W = WeylGroup::generate(E6Data::instance().root_system());
    CHECK(quad_space_orbit_size(W) == 45);
}
