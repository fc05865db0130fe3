#include "rootsys.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace isoform {

void SimpleType::validate() const {
    bool ok = false;
    switch (family) {
        case Family::A:
        case Family::B:
        case Family::C: ok = rank >= 1; break;
        case Family::D: ok = rank >= 2; break;
        case Family::E: ok = rank == 6 || rank == 7 || rank == 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok)
        throw_invariant("inadmissible simple type " + str());
}

std::string SimpleType::str() const {
    return std::string(1, (char)family) + std::to_string(rank);
}

Family family_from_string(const std::string& s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case 'A': return Family::A;
            case 'B': return Family::B;
            case 'C': return Family::C;
            case 'D': return Family::D;
            case 'E': return Family::E;
            case 'F': return Family::F;
            case 'G': return Family::G;
            default: break;
        }
    }
    throw_parse("unknown family '" + s + "' (expected one of A,B,C,D,E,F,G)");
    return Family::A;
}

namespace {

IVec unit2(int d, int i, long long v) {
    IVec e(d, 0);
    e[i] = v;
    return e;
}

// Doubled simple-root coordinates per family. E6 uses the eight-dimensional
// coordinates of its standard presentation (half-integer entries doubled);
// E7/E8 use the Bourbaki coordinates in R^8.
std::vector<IVec> simple_roots_doubled(SimpleType t, int& ambient) {
    const int n = t.rank;
    std::vector<IVec> s;
    switch (t.family) {
        case Family::A: {
            ambient = n + 1;
            for (int i = 0; i < n; ++i) {
                IVec v(ambient, 0);
                v[i] = 2;
                v[i + 1] = -2;
                s.push_back(v);
            }
            break;
        }
        case Family::B: {
            ambient = n;
            for (int i = 0; i + 1 < n; ++i) {
                IVec v(ambient, 0);
                v[i] = 2;
                v[i + 1] = -2;
                s.push_back(v);
            }
            s.push_back(unit2(ambient, n - 1, 2));
            break;
        }
        case Family::C: {
            ambient = n;
            for (int i = 0; i + 1 < n; ++i) {
                IVec v(ambient, 0);
                v[i] = 2;
                v[i + 1] = -2;
                s.push_back(v);
            }
            s.push_back(unit2(ambient, n - 1, 4));
            break;
        }
        case Family::D: {
            ambient = n;
            for (int i = 0; i + 1 < n; ++i) {
                IVec v(ambient, 0);
                v[i] = 2;
                v[i + 1] = -2;
                s.push_back(v);
            }
            IVec v(ambient, 0);
            v[n - 2] = 2;
            v[n - 1] = 2;
            s.push_back(v);
            break;
        }
        case Family::G: {
            ambient = 3;
            s.push_back({2, -2, 0});
            s.push_back({-4, 2, 2});
            break;
        }
        case Family::F: {
            ambient = 4;
            s.push_back({0, 2, -2, 0});
            s.push_back({0, 0, 2, -2});
            s.push_back({0, 0, 0, 2});
            s.push_back({1, -1, -1, -1});
            break;
        }
        case Family::E: {
            ambient = 8;
            if (n == 6) {
                // The six simple roots of the E6 presentation used throughout
                // the E6 analysis, in order: eps_1, -gamma_12, delta_12,
                // delta_23, delta_34, delta_45.
                s.push_back({1, -1, -1, -1, -1, 1, 1, 1});
                s.push_back({-2, -2, 0, 0, 0, 0, 0, 0});
                s.push_back({2, -2, 0, 0, 0, 0, 0, 0});
                s.push_back({0, 2, -2, 0, 0, 0, 0, 0});
                s.push_back({0, 0, 2, -2, 0, 0, 0, 0});
                s.push_back({0, 0, 0, 2, -2, 0, 0, 0});
            } else {
                // Bourbaki coordinates for E8; E7 takes the first seven.
                s.push_back({1, -1, -1, -1, -1, -1, -1, 1});
                s.push_back({2, 2, 0, 0, 0, 0, 0, 0});
                s.push_back({-2, 2, 0, 0, 0, 0, 0, 0});
                s.push_back({0, -2, 2, 0, 0, 0, 0, 0});
                s.push_back({0, 0, -2, 2, 0, 0, 0, 0});
                s.push_back({0, 0, 0, -2, 2, 0, 0, 0});
                s.push_back({0, 0, 0, 0, -2, 2, 0, 0});
                if (n == 8) s.push_back({0, 0, 0, 0, 0, -2, 2, 0});
            }
            break;
        }
    }
    return s;
}

int classical_root_count(SimpleType t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1);
        case Family::B:
        case Family::C: return 2 * n * n;
        case Family::D: return 2 * n * (n - 1);
        case Family::G: return 12;
        case Family::F: return 48;
        case Family::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    }
    return 0;
}

} // namespace

RootSystem RootSystem::build(SimpleType t) {
    t.validate();
    RootSystem rs;
    rs.type_ = t;
    auto simple = simple_roots_doubled(t, rs.ambient_);
    rs.generate_closure(simple);
    if (rs.num_roots() != classical_root_count(t))
        throw_internal("root closure for " + t.str() + " produced " +
                       std::to_string(rs.num_roots()) + " roots, expected " +
                       std::to_string(classical_root_count(t)));
    rs.compute_basis_coords();
    if (t.family == Family::E && t.rank == 6)
        rs.choose_positive_e6();
    else
        rs.choose_positive();
    return rs;
}

void RootSystem::generate_closure(const std::vector<IVec>& simple_doubled) {
    std::unordered_map<IVec, int, IVecHash> index;
    for (const auto& s : simple_doubled) {
        simple_.push_back((int)roots_.size());
        index.emplace(s, (int)roots_.size());
        roots_.push_back(s);
    }
    // Breadth-first closure of the simple roots under the simple reflections,
    // deduplicating on exact coordinates; insertion order is deterministic.
    std::deque<int> frontier;
    for (int i = 0; i < (int)roots_.size(); ++i) frontier.push_back(i);
    while (!frontier.empty()) {
        int i = frontier.front();
        frontier.pop_front();
        for (const auto& s : simple_doubled) {
            const IVec r = roots_[i]; // copy: roots_ may reallocate
            long long ss = ivec_dot(s, s);
            long long num = 2 * ivec_dot(r, s);
            if (num % ss != 0)
                throw_internal("non-integral Cartan pairing during closure");
            long long c = num / ss;
            IVec img(r.size());
            for (size_t k = 0; k < r.size(); ++k) img[k] = r[k] - c * s[k];
            if (index.emplace(img, (int)roots_.size()).second) {
                roots_.push_back(img);
                frontier.push_back((int)roots_.size() - 1);
            }
        }
    }
    negation_.resize(roots_.size());
    for (int i = 0; i < (int)roots_.size(); ++i) {
        IVec neg(roots_[i].size());
        for (size_t k = 0; k < neg.size(); ++k) neg[k] = -roots_[i][k];
        auto it = index.find(neg);
        if (it == index.end()) throw_internal("root set not closed under negation");
        negation_[i] = it->second;
    }
}

void RootSystem::compute_basis_coords() {
    std::vector<RatVec> cols;
    for (int s : simple_) {
        RatVec c(ambient_);
        for (int k = 0; k < ambient_; ++k) c[k] = Rat(roots_[s][k], 2);
        cols.push_back(std::move(c));
    }
    root_basis_coords_.resize(roots_.size());
    for (int i = 0; i < (int)roots_.size(); ++i) {
        RatVec b(ambient_);
        for (int k = 0; k < ambient_; ++k) b[k] = Rat(roots_[i][k], 2);
        RatVec x = solve_columns(cols, b);
        IVec xi(x.size());
        for (size_t j = 0; j < x.size(); ++j) {
            if (!x[j].is_integer())
                throw_internal("root not in the integer span of the simple roots");
            xi[j] = x[j].num();
        }
        root_basis_coords_[i] = std::move(xi);
    }
}

void RootSystem::choose_positive() {
    for (int i = 0; i < (int)roots_.size(); ++i) {
        const IVec& c = root_basis_coords_[i];
        bool nonneg = std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; });
        bool nonpos = std::all_of(c.begin(), c.end(), [](long long x) { return x <= 0; });
        if (!nonneg && !nonpos)
            throw_internal("mixed-sign root coordinates for a simple system");
        if (nonneg) positive_.push_back(i);
    }
    if (2 * (int)positive_.size() != num_roots())
        throw_internal("positive roots are not half the root count");
}

void RootSystem::choose_positive_e6() {
    // The 36 declared positive roots of the E6 analysis: gamma_ab, delta_ab,
    // eta_ab (a<b), eps_a, zeta. This positivity choice is combinatorial and
    // is not the one induced by the stored generation basis.
    std::vector<IVec> declared;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            declared.push_back(e6_gamma(a, b));
            declared.push_back(e6_delta(a, b));
            declared.push_back(e6_eta(a, b));
        }
    for (int a = 1; a <= 5; ++a) declared.push_back(e6_eps(a));
    declared.push_back(e6_zeta());

    for (const auto& v : declared) {
        auto idx = index_of(v);
        if (!idx) throw_internal("declared E6 positive root missing from closure");
        positive_.push_back(*idx);
    }
    if ((int)positive_.size() != 36)
        throw_internal("E6 positive root count is not 36");
    // Phi = Phi+ disjoint-union -Phi+.
    std::vector<bool> seen(roots_.size(), false);
    for (int p : positive_) {
        seen[p] = true;
        seen[negation_[p]] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw_internal("E6 declared positives do not cover the root system");
}

std::optional<int> RootSystem::index_of(const IVec& doubled_coords) const {
    for (int i = 0; i < (int)roots_.size(); ++i)
        if (roots_[i] == doubled_coords) return i;
    return std::nullopt;
}

int RootSystem::reflect_root(int root_j, int i) const {
    const IVec& s = roots_[root_j];
    const IVec& r = roots_[i];
    long long ss = ivec_dot(s, s);
    long long c = 2 * ivec_dot(r, s) / ss;
    IVec img(r.size());
    for (size_t k = 0; k < r.size(); ++k) img[k] = r[k] - c * s[k];
    auto idx = index_of(img);
    if (!idx) throw_internal("reflection left the root system");
    return *idx;
}

RatMat RootSystem::reflection_matrix(int i) const {
    const IVec& a = roots_[i];
    long long aa = ivec_dot(a, a); // = 4 * (alpha . alpha)
    RatMat m(ambient_, RatVec(ambient_));
    for (int r = 0; r < ambient_; ++r)
        for (int c = 0; c < ambient_; ++c) {
            Rat v = (r == c) ? Rat(1) : Rat(0);
            // v - 2 (v.alpha)/(alpha.alpha) alpha, columnwise on basis vectors.
            v -= Rat(2 * a[r] * a[c], aa);
            m[r][c] = v;
        }
    return m;
}

bool RootSystem::mutually_orthogonal(const std::vector<int>& idx) const {
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j)
            if (ivec_dot(roots_[idx[i]], roots_[idx[j]]) != 0) return false;
    return true;
}

IVec RootSystem::scale_to_integer(const RatVec& v) {
    long long l = 1;
    for (const auto& x : v) l = std::lcm(l, x.den());
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = 2 * v[i].num() * (l / v[i].den());
    return out;
}

IVec e6_gamma(int a, int b) {
    IVec v(8, 0);
    v[a - 1] = 2;
    v[b - 1] = 2;
    return v;
}

IVec e6_delta(int a, int b) {
    IVec v(8, 0);
    v[a - 1] = 2;
    v[b - 1] = -2;
    return v;
}

IVec e6_eta(int a, int b) {
    IVec v(8, 1);
    v[a - 1] = -1;
    v[b - 1] = -1;
    return v;
}

IVec e6_eps(int a) {
    IVec v{-1, -1, -1, -1, -1, 1, 1, 1};
    v[a - 1] = 1;
    return v;
}

IVec e6_zeta() { return IVec{1, 1, 1, 1, 1, 1, 1, 1}; }

E6Kind e6_kind(const IVec& d) {
    bool half = d[0] % 2 != 0;
    if (!half) {
        int pos = 0, neg = 0;
        for (int k = 0; k < 5; ++k) {
            if (d[k] == 2) ++pos;
            if (d[k] == -2) ++neg;
        }
        if (pos == 2 && neg == 0) return E6Kind::Gamma;
        if (pos == 1 && neg == 1) return E6Kind::Delta;
    } else {
        int neg = 0;
        for (int k = 0; k < 5; ++k)
            if (d[k] == -1) ++neg;
        if (d[5] == 1 && d[6] == 1 && d[7] == 1) {
            if (neg == 0) return E6Kind::Zeta;
            if (neg == 2) return E6Kind::Eta;
            if (neg == 4) return E6Kind::Eps;
        }
    }
    throw_internal("vector is not a declared E6 positive root");
    return E6Kind::Zeta;
}

} // namespace isoform
