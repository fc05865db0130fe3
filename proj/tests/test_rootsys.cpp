#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/errors.hpp"
#include "core/rootsys.hpp"

using namespace isoform;

namespace {

// Direct enumeration of the classical coordinate descriptions (doubled
// coordinates), written independently of the reflection-closure generator so
// the two can be compared as sets.
std::set<IVec> classical_roots(SimpleType t) {
    const int n = t.rank;
    std::set<IVec> out;
    auto vec = [](int dim) { return IVec(dim, 0); };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j)
                    if (i != j) {
                        IVec v = vec(n + 1);
                        v[i] = 2;
                        v[j] = -2;
                        out.insert(v);
                    }
            break;
        case Family::B:
        case Family::C:
        case Family::D:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int si : {2, -2})
                        for (int sj : {2, -2}) {
                            IVec v = vec(n);
                            v[i] = si;
                            v[j] = sj;
                            out.insert(v);
                        }
            if (t.family != Family::D)
                for (int i = 0; i < n; ++i)
                    for (int s : {1, -1}) {
                        IVec v = vec(n);
                        v[i] = s * (t.family == Family::B ? 2 : 4);
                        out.insert(v);
                    }
            break;
        case Family::G:
            // Short roots e_i - e_j and long roots 2e_i - e_j - e_k inside the
            // sum-zero hyperplane of R^3.
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j) {
                        IVec v = vec(3);
                        v[i] = 2;
                        v[j] = -2;
                        out.insert(v);
                        IVec w(3, -2);
                        w[i] = 4;
                        out.insert(w);
                        IVec wn(3, 2);
                        wn[i] = -4;
                        out.insert(wn);
                    }
            break;
        case Family::F:
            for (int i = 0; i < 4; ++i)
                for (int s : {2, -2}) {
                    IVec v = vec(4);
                    v[i] = s;
                    out.insert(v);
                }
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (int si : {2, -2})
                        for (int sj : {2, -2}) {
                            IVec v = vec(4);
                            v[i] = si;
                            v[j] = sj;
                            out.insert(v);
                        }
            for (int m = 0; m < 16; ++m) {
                IVec v(4);
                for (int k = 0; k < 4; ++k) v[k] = (m >> k) & 1 ? -1 : 1;
                out.insert(v);
            }
            break;
        case Family::E:
            if (n == 6) {
                // gamma/delta families plus the half-integer vectors
                // (+-1)^5 x (c,c,c) with an even total number of -1 entries.
                for (int a = 0; a < 5; ++a)
                    for (int b = 0; b < 5; ++b)
                        if (a != b) {
                            IVec d = vec(8);
                            d[a] = 2;
                            d[b] = -2;
                            out.insert(d);
                            if (a < b) {
                                IVec g = vec(8);
                                g[a] = 2;
                                g[b] = 2;
                                out.insert(g);
                                IVec gn = vec(8);
                                gn[a] = -2;
                                gn[b] = -2;
                                out.insert(gn);
                            }
                        }
                for (int m = 0; m < 32; ++m)
                    for (int c : {1, -1}) {
                        IVec v(8, c);
                        int neg = c == 1 ? 0 : 3;
                        for (int k = 0; k < 5; ++k) {
                            v[k] = (m >> k) & 1 ? -1 : 1;
                            if (v[k] == -1) ++neg;
                        }
                        if (neg % 2 == 0) out.insert(v);
                    }
            } else {
                // Bourbaki E8; E7 is the slice with coordinate sum
                // v7 + v8 = 0.
                std::set<IVec> e8;
                for (int i = 0; i < 8; ++i)
                    for (int j = i + 1; j < 8; ++j)
                        for (int si : {2, -2})
                            for (int sj : {2, -2}) {
                                IVec v = vec(8);
                                v[i] = si;
                                v[j] = sj;
                                e8.insert(v);
                            }
                for (int m = 0; m < 256; ++m) {
                    IVec v(8);
                    int neg = 0;
                    for (int k = 0; k < 8; ++k) {
                        v[k] = (m >> k) & 1 ? -1 : 1;
                        if (v[k] == -1) ++neg;
                    }
                    if (neg % 2 == 0) e8.insert(v);
                }
                for (const auto& v : e8)
                    if (n == 8 || v[6] + v[7] == 0) out.insert(v);
            }
            break;
    }
    return out;
}

RatVec mat_apply(const RatMat& m, const RatVec& v) {
    RatVec out(m.size());
    for (size_t r = 0; r < m.size(); ++r) {
        Rat s;
        for (size_t c = 0; c < v.size(); ++c) s += m[r][c] * v[c];
        out[r] = s;
    }
    return out;
}

RatVec undoubled(const IVec& d) {
    RatVec v(d.size());
    for (size_t i = 0; i < d.size(); ++i) v[i] = Rat(d[i], 2);
    return v;
}

Rat pair_vec(const RatVec& a, const RatVec& b) {
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

TEST_CASE("root counts of named systems") {
    CHECK(RootSystem::build({Family::E, 6}).num_roots() == 72);
    CHECK(RootSystem::build({Family::A, 1}).num_roots() == 2);
    CHECK(RootSystem::build({Family::D, 5}).num_roots() == 40);
}

TEST_CASE("A1 is a root and its negative") {
    RootSystem rs = RootSystem::build({Family::A, 1});
    REQUIRE(rs.num_roots() == 2);
    int a = rs.simple_indices()[0];
    CHECK(rs.negation_of(a) != a);
    CHECK(rs.negation_of(rs.negation_of(a)) == a);
}

TEST_CASE("positive root counts") {
    CHECK(RootSystem::build({Family::E, 6}).positive_indices().size() == 36);
    CHECK(RootSystem::build({Family::A, 1}).positive_indices().size() == 1);
    CHECK(RootSystem::build({Family::D, 5}).positive_indices().size() == 20);
}

TEST_CASE("closure equals direct classical enumeration through rank 7") {
    std::vector<SimpleType> types;
    for (int n = 1; n <= 7; ++n) {
        types.push_back({Family::A, n});
        types.push_back({Family::B, n});
        types.push_back({Family::C, n});
        if (n >= 2) types.push_back({Family::D, n});
    }
    types.push_back({Family::G, 2});
    types.push_back({Family::F, 4});
    types.push_back({Family::E, 6});
    types.push_back({Family::E, 7});
    for (SimpleType t : types) {
        CAPTURE(t.str());
        RootSystem rs = RootSystem::build(t);
        std::set<IVec> got(rs.roots().begin(), rs.roots().end());
        CHECK(got == classical_roots(t));
        CHECK(got.size() == rs.roots().size()); // no duplicates
    }
}

TEST_CASE("simply-laced roots have squared length 2") {
    for (SimpleType t : {SimpleType{Family::A, 4}, SimpleType{Family::D, 5},
                         SimpleType{Family::E, 6}, SimpleType{Family::E, 7}}) {
        RootSystem rs = RootSystem::build(t);
        for (int i = 0; i < rs.num_roots(); ++i)
            CHECK(rs.pairing(i, i) == Rat(2));
    }
}

TEST_CASE("reflection matrices: involution, negation, fixed hyperplane") {
    for (SimpleType t : {SimpleType{Family::B, 3}, SimpleType{Family::G, 2},
                         SimpleType{Family::E, 6}}) {
        RootSystem rs = RootSystem::build(t);
        for (int i = 0; i < rs.num_roots(); i += 5) {
            RatMat s = rs.reflection_matrix(i);
            RatVec alpha = undoubled(rs.root(i));
            // s(alpha) = -alpha
            RatVec neg = mat_apply(s, alpha);
            for (size_t k = 0; k < neg.size(); ++k) CHECK(neg[k] == -alpha[k]);
            // involution and pairing-orthogonality on the other roots
            for (int j = 0; j < rs.num_roots(); j += 7) {
                RatVec v = undoubled(rs.root(j));
                RatVec sv = mat_apply(s, v);
                RatVec ssv = mat_apply(s, sv);
                CHECK(ssv == v);
                CHECK(pair_vec(sv, mat_apply(s, alpha)) == pair_vec(v, alpha));
                if (pair_vec(v, alpha).is_zero()) CHECK(sv == v);
            }
        }
    }
}

TEST_CASE("reflect_root stays inside the system and matches the matrix") {
    RootSystem rs = RootSystem::build({Family::F, 4});
    for (int j = 0; j < rs.num_roots(); j += 3)
        for (int i = 0; i < rs.num_roots(); i += 3) {
            int img = rs.reflect_root(j, i);
            RatVec expect = mat_apply(rs.reflection_matrix(j), undoubled(rs.root(i)));
            CHECK(undoubled(rs.root(img)) == expect);
        }
}

TEST_CASE("mutual orthogonality in E6") {
    RootSystem rs = RootSystem::build({Family::E, 6});
    auto idx = [&](const IVec& v) {
        auto i = rs.index_of(v);
        REQUIRE(i.has_value());
        return *i;
    };
    std::vector<int> xi = {idx(e6_gamma(1, 2)), idx(e6_delta(1, 2)),
                           idx(e6_gamma(3, 4)), idx(e6_delta(3, 4))};
    CHECK(rs.mutually_orthogonal(xi));

    IVec neg_eps1 = e6_eps(1);
    for (auto& x : neg_eps1) x = -x;
    std::vector<int> chain = {idx(e6_zeta()), idx(neg_eps1), idx(e6_delta(2, 3)),
                              idx(e6_delta(4, 5))};
    CHECK(rs.mutually_orthogonal(chain));

    int a = rs.simple_indices()[0];
    CHECK_FALSE(rs.mutually_orthogonal({a, a}));
}

TEST_CASE("declared E6 positives split the system in half") {
    RootSystem rs = RootSystem::build({Family::E, 6});
    std::set<int> seen;
    for (int p : rs.positive_indices()) {
        CHECK(seen.insert(p).second);
        CHECK(seen.insert(rs.negation_of(p)).second);
    }
    CHECK((int)seen.size() == rs.num_roots());
    // The five combinatorial families classify every positive root.
    for (int p : rs.positive_indices()) CHECK_NOTHROW(e6_kind(rs.root(p)));
}

TEST_CASE("non-E6 positives are nonnegative on the simple basis") {
    for (SimpleType t : {SimpleType{Family::A, 3}, SimpleType{Family::B, 4},
                         SimpleType{Family::C, 3}, SimpleType{Family::D, 5},
                         SimpleType{Family::G, 2}, SimpleType{Family::F, 4},
                         SimpleType{Family::E, 7}}) {
        RootSystem rs = RootSystem::build(t);
        CHECK(2 * rs.positive_indices().size() == (size_t)rs.num_roots());
        for (int p : rs.positive_indices())
            for (long long c : rs.root_in_basis(p)) CHECK(c >= 0);
    }
}

TEST_CASE("root coordinates in the simple basis reconstruct the root") {
    RootSystem rs = RootSystem::build({Family::E, 6});
    for (int i = 0; i < rs.num_roots(); i += 4) {
        IVec sum(rs.ambient_dim(), 0);
        const IVec& c = rs.root_in_basis(i);
        for (int j = 0; j < rs.rank(); ++j) {
            const IVec& s = rs.root(rs.simple_indices()[j]);
            for (int k = 0; k < rs.ambient_dim(); ++k) sum[k] += c[j] * s[k];
        }
        CHECK(sum == rs.root(i));
    }
}

TEST_CASE("inadmissible types are rejected") {
    auto code = [](SimpleType t) {
        try {
            RootSystem::build(t);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Ok;
    };
    CHECK(code({Family::E, 5}) == ErrorCode::Invariant);
    CHECK(code({Family::D, 1}) == ErrorCode::Invariant);
    CHECK(code({Family::F, 3}) == ErrorCode::Invariant);
    CHECK(code({Family::G, 3}) == ErrorCode::Invariant);
    CHECK(code({Family::A, 0}) == ErrorCode::Invariant);
}
