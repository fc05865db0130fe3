#include "e6.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace isoform {

E6Data::E6Data() : rs_(RootSystem::build({Family::E, 6})) {
    const auto& pos = rs_.positive_indices();
    const int np = (int)pos.size();

    // Orthogonality graph on the 36 positive roots.
    std::vector<std::vector<bool>> orth(np, std::vector<bool>(np, false));
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j)
            orth[i][j] = orth[j][i] =
                ivec_dot(rs_.root(pos[i]), rs_.root(pos[j])) == 0;

    // All maximal mutually orthogonal subsets, by depth-first extension in
    // index order (so each set appears once, sorted).
    std::vector<int> cur;
    int max_size = 0;
    auto extend = [&](auto&& self, int start) -> void {
        bool extended = false;
        for (int k = start; k < np; ++k) {
            bool ok = true;
            for (int c : cur)
                if (!orth[c][k]) { ok = false; break; }
            if (!ok) continue;
            extended = true;
            cur.push_back(k);
            self(self, k + 1);
            cur.pop_back();
        }
        if (!extended) max_size = std::max(max_size, (int)cur.size());
        if ((int)cur.size() == 4) {
            std::vector<int> q;
            for (int c : cur) q.push_back(pos[c]);
            quads_.push_back(q);
        }
    };
    extend(extend, 0);
    max_orthogonal_ = max_size;

    // Census over the five families; the quadruple's sorted kind signature
    // determines its family.
    auto kind_sig = [&](const std::vector<int>& q) {
        std::multiset<E6Kind> s;
        for (int r : q) s.insert(e6_kind(rs_.root(r)));
        return s;
    };
    const std::multiset<E6Kind> sig60{E6Kind::Eps, E6Kind::Eta, E6Kind::Gamma, E6Kind::Delta};
    const std::multiset<E6Kind> sig30{E6Kind::Eta, E6Kind::Eta, E6Kind::Gamma, E6Kind::Gamma};
    const std::multiset<E6Kind> sig15a{E6Kind::Eta, E6Kind::Eta, E6Kind::Delta, E6Kind::Delta};
    const std::multiset<E6Kind> sig15b{E6Kind::Gamma, E6Kind::Gamma, E6Kind::Delta, E6Kind::Delta};
    const std::multiset<E6Kind> sig15c{E6Kind::Zeta, E6Kind::Eps, E6Kind::Delta, E6Kind::Delta};
    for (const auto& q : quads_) {
        auto s = kind_sig(q);
        if (s == sig60) ++census_[0];
        else if (s == sig30) ++census_[1];
        else if (s == sig15a) ++census_[2];
        else if (s == sig15b) ++census_[3];
        else if (s == sig15c) ++census_[4];
        else throw_internal("orthogonal quadruple outside the five families");
    }

    // Group the sets by their span.
    std::map<Subspace, std::vector<std::vector<int>>> by_span;
    for (const auto& q : quads_) {
        RatMat rows;
        for (int r : q) rows.push_back(ivec_to_rat(rs_.root_in_basis(r)));
        Subspace span(std::move(rows));
        if (span.dim() != 4) throw_internal("orthogonal quadruple span is not 4-dimensional");
        by_span[span].push_back(q);
    }
    for (auto& [span, bases] : by_span)
        spaces_.push_back(QuadSpace{bases, span});
    if (spaces_.size() * 3 != quads_.size())
        throw_internal("quadruple sets do not group 3-per-space");
}

const E6Data& E6Data::instance() {
    static const E6Data data;
    return data;
}

bool E6Data::line_in_quad_space(const std::vector<long long>& c) const {
    if ((int)c.size() != 6) throw_invariant("E6 circle needs 6 coroot coefficients");
    if (std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; }))
        throw_invariant("E6 circle direction is the zero vector");
    RatVec v(6);
    for (int i = 0; i < 6; ++i) v[i] = Rat(c[i]);
    for (const auto& s : spaces_)
        if (s.span.contains(v)) return true;
    return false;
}

bool E6Report::ok() const {
    return weyl_order == 51840 && root_count == 72 && positive_count == 36 &&
           quadruple_set_count == 135 &&
           census == std::array<int, 5>{60, 30, 15, 15, 15} && space_count == 45 &&
           three_bases_each && max_orthogonal_set_size == 4 && no_order_16 &&
           max_involution_eigen_dim == 4 && involution_dim4_count == 45 &&
           involution_spaces_equal_spans && all_contained &&
           stabilizer_chain == std::array<std::uint64_t, 4>{720, 24, 2, 1} &&
           ordered_quadruple_orbit == 51840;
}

E6Report verify_minus_one_union(const WeylGroup& W) {
    const E6Data& e6 = E6Data::instance();
    E6Report rep;
    rep.weyl_order = W.order();
    rep.root_count = e6.root_system().num_roots();
    rep.positive_count = (int)e6.root_system().positive_indices().size();
    rep.quadruple_set_count = (int)e6.quadruple_sets().size();
    rep.census = e6.census();
    rep.space_count = (int)e6.spaces().size();
    rep.three_bases_each = std::all_of(
        e6.spaces().begin(), e6.spaces().end(),
        [](const QuadSpace& s) { return s.bases.size() == 3; });
    rep.max_orthogonal_set_size = e6.max_orthogonal_set_size();

    const auto& classes = W.conjugacy_classes();
    rep.conjugacy_class_count = (int)classes.size();
    rep.no_order_16 = std::none_of(classes.begin(), classes.end(),
                                   [](const ConjugacyClass& c) { return c.element_order == 16; });

    // Maximal involution (-1)-eigenspaces: find the involution class whose
    // representative eigenspace has dimension 4, then collect the eigenspaces
    // of all its elements.
    int max_dim = 0;
    int dim4_class = -1;
    for (int ci = 0; ci < (int)classes.size(); ++ci) {
        if (classes[ci].element_order != 2) continue;
        int dim = W.minus_one_eigenspace(classes[ci].representative).dim();
        if (dim > max_dim) { max_dim = dim; dim4_class = ci; }
    }
    rep.max_involution_eigen_dim = max_dim;

    std::set<Subspace> invol_spaces;
    if (dim4_class >= 0) {
        const auto& class_of = W.class_of_elements();
        for (std::uint32_t e = 0; e < W.order(); ++e)
            if (class_of[e] == (std::uint32_t)dim4_class)
                invol_spaces.insert(W.minus_one_eigenspace(e));
    }
    rep.involution_dim4_count = (int)invol_spaces.size();

    std::set<Subspace> spans;
    for (const auto& s : e6.spaces()) spans.insert(s.span);
    rep.involution_spaces_equal_spans = invol_spaces == spans;

    // Containment check for one representative per class of order 4 or 8;
    // conjugation-equivariance of eigenspaces makes the choice immaterial.
    bool all_ok = true;
    for (int ci = 0; ci < (int)classes.size(); ++ci) {
        int ord = classes[ci].element_order;
        if (ord != 4 && ord != 8) continue;
        Subspace eig = W.minus_one_eigenspace(classes[ci].representative);
        bool contained = std::any_of(
            e6.spaces().begin(), e6.spaces().end(),
            [&](const QuadSpace& s) { return s.span.contains(eig); });
        rep.order_4_8_checks.push_back(E6ClassCheck{ci, ord, eig.dim(), contained});
        all_ok = all_ok && contained;
    }
    rep.all_contained = all_ok;

    rep.stabilizer_chain = verify_simple_transitivity(W);
    std::uint64_t stab = rep.stabilizer_chain[3] ? rep.stabilizer_chain[3] : 1;
    rep.ordered_quadruple_orbit = W.order() / stab;
    return rep;
}

std::array<std::uint64_t, 4> verify_simple_transitivity(const WeylGroup& W) {
    const RootSystem& rs = W.root_system();
    auto must_index = [&](const IVec& v) {
        auto idx = rs.index_of(v);
        if (!idx) throw_internal("reference root missing");
        return *idx;
    };
    IVec neg_eps1 = e6_eps(1);
    for (auto& x : neg_eps1) x = -x;
    const int chain_roots[4] = {must_index(e6_zeta()), must_index(neg_eps1),
                                must_index(e6_delta(2, 3)), must_index(e6_delta(4, 5))};
    std::array<std::uint64_t, 4> counts{};
    for (std::uint32_t e = 0; e < W.order(); ++e) {
        const std::uint8_t* p = W.perm(e);
        for (int k = 0; k < 4; ++k) {
            if (p[chain_roots[k]] != chain_roots[k]) break;
            ++counts[k];
        }
    }
    return counts;
}

int quad_space_orbit_size(const WeylGroup& W) {
    const E6Data& e6 = E6Data::instance();
    const RootSystem& rs = W.root_system();
    std::set<Subspace> orbit;
    std::vector<std::vector<int>> frontier{e6.spaces().front().bases.front()};
    {
        RatMat rows;
        for (int r : frontier.front()) rows.push_back(ivec_to_rat(rs.root_in_basis(r)));
        orbit.insert(Subspace(std::move(rows)));
    }
    while (!frontier.empty()) {
        auto q = frontier.back();
        frontier.pop_back();
        for (std::uint32_t g : W.generators()) {
            std::vector<int> img;
            for (int r : q) img.push_back(W.image(g, r));
            RatMat rows;
            for (int r : img) rows.push_back(ivec_to_rat(rs.root_in_basis(r)));
            if (orbit.insert(Subspace(std::move(rows))).second) frontier.push_back(img);
        }
    }
    return (int)orbit.size();
}

} // namespace isoform
