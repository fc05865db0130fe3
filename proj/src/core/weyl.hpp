#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "linalg.hpp"
#include "rootsys.hpp"

namespace isoform {

// Default enumeration budget: admits everything through W(E7) (order
// 2,903,040) and refuses W(E8) (order 696,729,600).
inline constexpr std::uint64_t kDefaultWeylBudget = 3000000;

struct ConjugacyClass {
    std::uint32_t representative;
    std::uint64_t size;
    int element_order;
};

// A finite Weyl group enumerated as permutations of the root set. Elements
// are stored as full permutations (one byte per root index); the dedup key is
// the tuple of images of the simple roots, which determines the element.
class WeylGroup {
public:
    // Enumerates by breadth-first closure under generator right-
    // multiplication. Throws a capacity error if the expected order exceeds
    // `budget`.
    static WeylGroup generate(const RootSystem& rs, std::uint64_t budget = kDefaultWeylBudget);

    // Cache-aware variant; `cache_dir` empty means no caching. Stale or
    // corrupt cache files are regenerated.
    static WeylGroup load_or_generate(const RootSystem& rs,
                                      std::uint64_t budget = kDefaultWeylBudget,
                                      const std::string& cache_dir = "");

    const RootSystem& root_system() const { return *rs_; }
    std::uint64_t order() const { return order_; }
    int num_roots() const { return nroots_; }
    std::uint32_t identity() const { return 0; }
    const std::vector<std::uint32_t>& generators() const { return gens_; }

    const std::uint8_t* perm(std::uint32_t e) const { return perms_.data() + (size_t)e * nroots_; }
    std::uint32_t image(std::uint32_t e, int root) const { return perm(e)[root]; }

    std::uint32_t compose(std::uint32_t a, std::uint32_t b) const; // a after b
    std::uint32_t inverse(std::uint32_t a) const;
    std::uint32_t conjugate(std::uint32_t g, std::uint32_t w) const; // g w g^-1
    int element_order(std::uint32_t e) const;
    std::uint32_t power(std::uint32_t e, int k) const;

    // w^m where order(w) = 2^k * m with m odd; the result has 2-power order
    // and its (-1)-eigenspace contains that of w.
    std::uint32_t odd_power_reduction(std::uint32_t e) const;

    // Matrix of the element acting in simple-root-basis coordinates; entries
    // are integers.
    RatMat matrix_root_basis(std::uint32_t e) const;

    // Exact (-1)-eigenspace in simple-root-basis coordinates.
    Subspace minus_one_eigenspace(std::uint32_t e) const;

    // Deterministic partition into conjugacy classes (orbit algorithm under
    // conjugation by the generators); computed once and memoized.
    const std::vector<ConjugacyClass>& conjugacy_classes() const;
    const std::vector<std::uint32_t>& class_of_elements() const; // element -> class id

    // Brute-force reflecting-element oracle: the least element index w with
    // w.v = -v, scanning the whole group, or nullopt. `v` is an ambient
    // rational vector in the span of the roots. The scan may be partitioned
    // across workers; the returned index is scheduling-independent.
    std::optional<std::uint32_t> reflecting_element(const RatVec& ambient_v,
                                                    int workers = 1) const;

private:
    WeylGroup() = default;
    void build_index();
    std::uint64_t key_of_images(const std::uint8_t* images_of_simple) const;
    std::uint32_t lookup_by_perm(const std::uint8_t* p) const;

    // Owned copy: a WeylGroup outlives whatever root system it was built from.
    std::shared_ptr<const RootSystem> rs_;
    int nroots_ = 0;
    int rank_ = 0;
    std::uint64_t order_ = 0;
    std::vector<std::uint8_t> perms_;
    std::vector<std::uint32_t> gens_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    mutable std::vector<ConjugacyClass> classes_;
    mutable std::vector<std::uint32_t> class_of_;

    friend struct WeylCacheIO;
};

} // namespace isoform
