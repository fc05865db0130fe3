#include "weyl.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <filesystem>
#include <fstream>
#include <thread>

#include "cohomo.hpp"

namespace isoform {

namespace {

std::uint64_t fnv64(const std::uint8_t* data, size_t n, std::uint64_t h = 1469598103934665603ull) {
    for (size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

std::uint64_t WeylGroup::key_of_images(const std::uint8_t* img) const {
    std::uint64_t k = 0;
    for (int j = 0; j < rank_; ++j) k = (k << 8) | img[j];
    return k;
}

WeylGroup WeylGroup::generate(const RootSystem& rs, std::uint64_t budget) {
    std::uint64_t expected = weyl_order_formula(rs.type());
    if (expected > budget)
        throw_capacity("Weyl group of " + rs.type().str() + " has order " +
                       std::to_string(expected) + ", above the enumeration budget " +
                       std::to_string(budget));

    WeylGroup w;
    w.rs_ = std::make_shared<const RootSystem>(rs);
    w.nroots_ = rs.num_roots();
    w.rank_ = rs.rank();
    const int n = w.nroots_;

    // Identity first, then the simple reflections as generator permutations.
    std::vector<std::uint8_t> idp(n);
    for (int i = 0; i < n; ++i) idp[i] = (std::uint8_t)i;
    w.perms_.insert(w.perms_.end(), idp.begin(), idp.end());

    std::vector<std::vector<std::uint8_t>> genperm;
    for (int s : rs.simple_indices()) {
        std::vector<std::uint8_t> p(n);
        for (int i = 0; i < n; ++i) p[i] = (std::uint8_t)rs.reflect_root(s, i);
        genperm.push_back(std::move(p));
    }

    auto key_at = [&](std::uint32_t e) {
        std::uint8_t img[8];
        const std::uint8_t* p = w.perms_.data() + (size_t)e * n;
        int j = 0;
        for (int s : rs.simple_indices()) img[j++] = p[s];
        return w.key_of_images(img);
    };

    w.index_.reserve((size_t)expected * 2);
    w.index_.emplace(key_at(0), 0);
    std::deque<std::uint32_t> frontier{0};
    std::vector<std::uint8_t> tmp(n);
    while (!frontier.empty()) {
        std::uint32_t e = frontier.front();
        frontier.pop_front();
        for (size_t g = 0; g < genperm.size(); ++g) {
            const std::uint8_t* pe = w.perms_.data() + (size_t)e * n;
            const std::uint8_t* pg = genperm[g].data();
            // Right multiplication: (e * s_g)(i) = e(s_g(i)).
            for (int i = 0; i < n; ++i) tmp[i] = pe[pg[i]];
            std::uint8_t img[8];
            int j = 0;
            for (int s : rs.simple_indices()) img[j++] = tmp[s];
            std::uint64_t key = w.key_of_images(img);
            auto [it, fresh] = w.index_.emplace(key, (std::uint32_t)(w.perms_.size() / n));
            if (fresh) {
                w.perms_.insert(w.perms_.end(), tmp.begin(), tmp.end());
                frontier.push_back(it->second);
            }
        }
    }
    w.order_ = w.perms_.size() / n;
    if (w.order_ != expected)
        throw_internal("enumerated Weyl order " + std::to_string(w.order_) +
                       " of " + rs.type().str() + " does not match prod(e_i+1) = " +
                       std::to_string(expected));
    for (size_t g = 0; g < genperm.size(); ++g)
        w.gens_.push_back(w.lookup_by_perm(genperm[g].data()));
    return w;
}

void WeylGroup::build_index() {
    index_.clear();
    index_.reserve((size_t)order_ * 2);
    for (std::uint32_t e = 0; e < order_; ++e) {
        std::uint8_t img[8];
        const std::uint8_t* p = perm(e);
        int j = 0;
        for (int s : rs_->simple_indices()) img[j++] = p[s];
        index_.emplace(key_of_images(img), e);
    }
    if (index_.size() != order_) throw_internal("duplicate elements in Weyl table");
}

std::uint32_t WeylGroup::lookup_by_perm(const std::uint8_t* p) const {
    std::uint8_t img[8];
    int j = 0;
    for (int s : rs_->simple_indices()) img[j++] = p[s];
    auto it = index_.find(key_of_images(img));
    if (it == index_.end()) throw_internal("element not found in Weyl table");
    return it->second;
}

std::uint32_t WeylGroup::compose(std::uint32_t a, std::uint32_t b) const {
    const std::uint8_t* pa = perm(a);
    const std::uint8_t* pb = perm(b);
    std::uint8_t img[8];
    int j = 0;
    for (int s : rs_->simple_indices()) img[j++] = pa[pb[s]];
    auto it = index_.find(key_of_images(img));
    if (it == index_.end()) throw_internal("composition left the group");
    return it->second;
}

std::uint32_t WeylGroup::inverse(std::uint32_t a) const {
    const std::uint8_t* pa = perm(a);
    std::vector<std::uint8_t> inv(nroots_);
    for (int i = 0; i < nroots_; ++i) inv[pa[i]] = (std::uint8_t)i;
    return lookup_by_perm(inv.data());
}

std::uint32_t WeylGroup::conjugate(std::uint32_t g, std::uint32_t w) const {
    return compose(compose(g, w), inverse(g));
}

int WeylGroup::element_order(std::uint32_t e) const {
    if (e == identity()) return 1;
    std::uint32_t cur = e;
    int k = 1;
    while (cur != identity()) {
        cur = compose(cur, e);
        ++k;
        if (k > (int)order_) throw_internal("element order runaway");
    }
    return k;
}

std::uint32_t WeylGroup::power(std::uint32_t e, int k) const {
    std::uint32_t cur = identity();
    for (int i = 0; i < k; ++i) cur = compose(cur, e);
    return cur;
}

std::uint32_t WeylGroup::odd_power_reduction(std::uint32_t e) const {
    int m = element_order(e);
    while (m % 2 == 0) m /= 2;
    return power(e, m);
}

RatMat WeylGroup::matrix_root_basis(std::uint32_t e) const {
    const std::uint8_t* p = perm(e);
    int r = rank_;
    RatMat m(r, RatVec(r));
    const auto& simple = rs_->simple_indices();
    for (int j = 0; j < r; ++j) {
        const IVec& img = rs_->root_in_basis(p[simple[j]]);
        for (int i = 0; i < r; ++i) m[i][j] = Rat(img[i]);
    }
    return m;
}

Subspace WeylGroup::minus_one_eigenspace(std::uint32_t e) const {
    RatMat m = matrix_root_basis(e);
    for (int i = 0; i < rank_; ++i) m[i][i] += Rat(1);
    return Subspace(kernel_basis(std::move(m)));
}

const std::vector<ConjugacyClass>& WeylGroup::conjugacy_classes() const {
    if (!classes_.empty()) return classes_;
    class_of_.assign(order_, UINT32_MAX);
    std::vector<std::uint32_t> ginv(gens_.size());
    for (size_t g = 0; g < gens_.size(); ++g) ginv[g] = gens_[g]; // involutions
    for (std::uint32_t e = 0; e < order_; ++e) {
        if (class_of_[e] != UINT32_MAX) continue;
        std::uint32_t cid = (std::uint32_t)classes_.size();
        std::uint64_t size = 0;
        std::deque<std::uint32_t> orbit{e};
        class_of_[e] = cid;
        while (!orbit.empty()) {
            std::uint32_t x = orbit.front();
            orbit.pop_front();
            ++size;
            for (size_t g = 0; g < gens_.size(); ++g) {
                std::uint32_t y = compose(compose(gens_[g], x), ginv[g]);
                if (class_of_[y] == UINT32_MAX) {
                    class_of_[y] = cid;
                    orbit.push_back(y);
                }
            }
        }
        classes_.push_back(ConjugacyClass{e, size, element_order(e)});
    }
    std::uint64_t total = 0;
    for (const auto& c : classes_) total += c.size;
    if (total != order_) throw_internal("conjugacy class sizes do not sum to the order");
    return classes_;
}

const std::vector<std::uint32_t>& WeylGroup::class_of_elements() const {
    conjugacy_classes();
    return class_of_;
}

std::optional<std::uint32_t> WeylGroup::reflecting_element(const RatVec& v,
                                                           int workers) const {
    bool zero = std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
    if (zero) throw_invariant("reflecting-element oracle requires a nonzero vector");
    if ((int)v.size() != rs_->ambient_dim())
        throw_invariant("vector dimension does not match the ambient space");

    IVec vi = RootSystem::scale_to_integer(v);
    // d[i] = <root_i, v> up to one positive scale factor.
    IVec d(nroots_);
    for (int i = 0; i < nroots_; ++i) d[i] = ivec_dot(rs_->root(i), vi);

    // v must lie in the span of the roots: check that v is determined by its
    // pairings, i.e. that appending v does not raise the rank.
    {
        RatMat m;
        for (const auto& r : rs_->roots()) m.push_back(ivec_to_rat(r));
        int base = rank_of(m);
        m.push_back(ivec_to_rat(vi));
        if (rank_of(std::move(m)) != base)
            throw_invariant("vector lies outside the span of the root system");
    }

    // w.v = -v  iff  d[w(j)] = -d[j] for every root index j.
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) -> std::optional<std::uint32_t> {
        for (std::uint64_t e = lo; e < hi; ++e) {
            const std::uint8_t* p = perm((std::uint32_t)e);
            bool ok = true;
            for (int j = 0; j < nroots_; ++j)
                if (d[p[j]] != -d[j]) { ok = false; break; }
            if (ok) return (std::uint32_t)e;
        }
        return std::nullopt;
    };

    if (workers <= 1) return scan(0, order_);

    std::vector<std::optional<std::uint32_t>> found(workers);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (order_ + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
        std::uint64_t lo = (std::uint64_t)t * chunk;
        std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, order_);
        pool.emplace_back([&, t, lo, hi] { found[t] = scan(lo, hi); });
    }
    for (auto& th : pool) th.join();
    // Minimal witness index, independent of scheduling.
    for (const auto& f : found)
        if (f) return f;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cache

namespace {
constexpr std::uint32_t kCacheVersion = 1;
constexpr char kCacheMagic[8] = {'I', 'S', 'O', 'W', 'E', 'Y', 'L', '\0'};
} // namespace

struct WeylCacheIO {
    static std::string path_for(const RootSystem& rs, const std::string& dir) {
        return dir + "/weyl_" + rs.type().str() + ".bin";
    }

    // Hash of the full root coordinate table in storage order; ties the cache
    // to the root-order convention.
    static std::uint64_t convention_hash(const RootSystem& rs) {
        std::uint64_t h = 1469598103934665603ull;
        for (const auto& r : rs.roots())
            h = fnv64(reinterpret_cast<const std::uint8_t*>(r.data()),
                      r.size() * sizeof(long long), h);
        return h;
    }

    static bool load(const RootSystem& rs, const std::string& dir, WeylGroup& out) {
        std::ifstream f(path_for(rs, dir), std::ios::binary);
        if (!f) return false;
        char magic[8];
        std::uint32_t version = 0;
        std::uint64_t conv = 0, order = 0, checksum = 0;
        std::uint32_t nroots = 0;
        f.read(magic, 8);
        f.read(reinterpret_cast<char*>(&version), sizeof version);
        f.read(reinterpret_cast<char*>(&conv), sizeof conv);
        f.read(reinterpret_cast<char*>(&order), sizeof order);
        f.read(reinterpret_cast<char*>(&nroots), sizeof nroots);
        if (!f || std::memcmp(magic, kCacheMagic, 8) != 0 || version != kCacheVersion ||
            conv != convention_hash(rs) || nroots != (std::uint32_t)rs.num_roots() ||
            order != weyl_order_formula(rs.type()))
            return false;
        std::vector<std::uint8_t> perms((size_t)order * nroots);
        f.read(reinterpret_cast<char*>(perms.data()), (std::streamsize)perms.size());
        f.read(reinterpret_cast<char*>(&checksum), sizeof checksum);
        if (!f || checksum != fnv64(perms.data(), perms.size())) return false;

        out.rs_ = std::make_shared<const RootSystem>(rs);
        out.nroots_ = rs.num_roots();
        out.rank_ = rs.rank();
        out.order_ = order;
        out.perms_ = std::move(perms);
        out.build_index();
        // Recover the generator indices.
        for (int s : rs.simple_indices()) {
            std::vector<std::uint8_t> p(out.nroots_);
            for (int i = 0; i < out.nroots_; ++i) p[i] = (std::uint8_t)rs.reflect_root(s, i);
            out.gens_.push_back(out.lookup_by_perm(p.data()));
        }
        return true;
    }

    static void store(const WeylGroup& w, const std::string& dir) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        std::string path = path_for(*w.rs_, dir);
        std::string tmp = path + ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f) return; // cache is best-effort
            std::uint32_t version = kCacheVersion;
            std::uint64_t conv = convention_hash(*w.rs_);
            std::uint64_t order = w.order_;
            std::uint32_t nroots = (std::uint32_t)w.nroots_;
            std::uint64_t checksum = fnv64(w.perms_.data(), w.perms_.size());
            f.write(kCacheMagic, 8);
            f.write(reinterpret_cast<const char*>(&version), sizeof version);
            f.write(reinterpret_cast<const char*>(&conv), sizeof conv);
            f.write(reinterpret_cast<const char*>(&order), sizeof order);
            f.write(reinterpret_cast<const char*>(&nroots), sizeof nroots);
            f.write(reinterpret_cast<const char*>(w.perms_.data()),
                    (std::streamsize)w.perms_.size());
            f.write(reinterpret_cast<const char*>(&checksum), sizeof checksum);
        }
        std::filesystem::rename(tmp, path, ec);
    }
};

WeylGroup WeylGroup::load_or_generate(const RootSystem& rs, std::uint64_t budget,
                                      const std::string& cache_dir) {
    std::uint64_t expected = weyl_order_formula(rs.type());
    if (expected > budget)
        throw_capacity("Weyl group of " + rs.type().str() + " has order " +
                       std::to_string(expected) + ", above the enumeration budget " +
                       std::to_string(budget));
    if (!cache_dir.empty()) {
        WeylGroup w;
        if (WeylCacheIO::load(rs, cache_dir, w)) return w;
    }
    WeylGroup w = generate(rs, budget);
    if (!cache_dir.empty()) WeylCacheIO::store(w, cache_dir);
    return w;
}

} // namespace isoform
