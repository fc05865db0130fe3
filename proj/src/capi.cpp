#include "isoform.h"

#include <cstring>
#include <string>

#include "core/classify.hpp"
#include "core/e6.hpp"
#include "core/io.hpp"

struct isoform_ctx {
    std::string cache_dir;
    int workers = 1;
    std::uint64_t budget = isoform::kDefaultWeylBudget;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
isoform_status guarded(isoform_ctx* ctx, Fn&& fn) {
    if (!ctx) return ISOFORM_ERR_INVARIANT;
    ctx->last_error.clear();
    try {
        return fn();
    } catch (const isoform::Error& e) {
        ctx->last_error = e.what();
        return (isoform_status)(int)e.code();
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return ISOFORM_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

isoform_ctx* isoform_ctx_new(void) { return new isoform_ctx; }

void isoform_ctx_free(isoform_ctx* ctx) { delete ctx; }

isoform_status isoform_set_cache_dir(isoform_ctx* ctx, const char* path) {
    return guarded(ctx, [&] {
        ctx->cache_dir = path ? path : "";
        return ISOFORM_OK;
    });
}

isoform_status isoform_set_workers(isoform_ctx* ctx, int workers) {
    return guarded(ctx, [&]() -> isoform_status {
        if (workers < 1) isoform::throw_invariant("worker count must be >= 1");
        ctx->workers = workers;
        return ISOFORM_OK;
    });
}

isoform_status isoform_set_budget(isoform_ctx* ctx, uint64_t max_weyl_order) {
    return guarded(ctx, [&] {
        ctx->budget = max_weyl_order ? max_weyl_order : isoform::kDefaultWeylBudget;
        return ISOFORM_OK;
    });
}

isoform_status isoform_classify(isoform_ctx* ctx, const char* input_json,
                                unsigned flags, char** out_report) {
    return guarded(ctx, [&]() -> isoform_status {
        if (!input_json || !out_report)
            isoform::throw_invariant("null argument");
        isoform::GroupSpec spec;
        isoform::CircleEmbedding circle;
        isoform::parse_input(input_json, spec, circle);
        isoform::ClassificationReport rep =
            (flags & ISOFORM_FLAG_VERIFY)
                ? isoform::classify_with_verification(spec, circle, ctx->budget,
                                                      ctx->workers, ctx->cache_dir)
                : isoform::classify(spec, circle);
        std::string text = (flags & ISOFORM_FLAG_JSON)
                               ? isoform::report_to_json(spec, rep)
                               : isoform::report_to_text(spec, rep);
        *out_report = dup_string(text);
        return ISOFORM_OK;
    });
}

isoform_status isoform_poincare(isoform_ctx* ctx, const char* input_json,
                                unsigned flags, char** out_report) {
    return guarded(ctx, [&]() -> isoform_status {
        if (!input_json || !out_report)
            isoform::throw_invariant("null argument");
        isoform::GroupSpec spec;
        isoform::CircleEmbedding circle;
        isoform::parse_input(input_json, spec, circle);
        circle.validate(spec);
        std::string text = (flags & ISOFORM_FLAG_JSON)
                               ? isoform::poincare_to_json(spec, circle)
                               : isoform::poincare_to_text(spec, circle);
        *out_report = dup_string(text);
        return ISOFORM_OK;
    });
}

isoform_status isoform_weyl_info(isoform_ctx* ctx, const char* family, int rank,
                                 unsigned flags, char** out_report) {
    return guarded(ctx, [&]() -> isoform_status {
        if (!family || !out_report)
            isoform::throw_invariant("null argument");
        isoform::SimpleType t{isoform::family_from_string(family), rank};
        isoform::RootSystem rs = isoform::RootSystem::build(t);
        isoform::WeylGroup W =
            isoform::WeylGroup::load_or_generate(rs, ctx->budget, ctx->cache_dir);
        isoform::WeylInfo info = isoform::weyl_info(W);
        std::string text = (flags & ISOFORM_FLAG_JSON)
                               ? isoform::weyl_info_to_json(info)
                               : isoform::weyl_info_to_text(info);
        *out_report = dup_string(text);
        return ISOFORM_OK;
    });
}

isoform_status isoform_e6_verify(isoform_ctx* ctx, unsigned flags, char** out_report) {
    return guarded(ctx, [&]() -> isoform_status {
        if (!out_report) isoform::throw_invariant("null argument");
        const isoform::RootSystem& rs = isoform::E6Data::instance().root_system();
        isoform::WeylGroup W =
            isoform::WeylGroup::load_or_generate(rs, ctx->budget, ctx->cache_dir);
        isoform::E6Report rep = isoform::verify_minus_one_union(W);
        std::string text = (flags & ISOFORM_FLAG_JSON)
                               ? isoform::e6_report_to_json(rep)
                               : isoform::e6_report_to_text(rep);
        *out_report = dup_string(text);
        if (!rep.ok()) {
            ctx->last_error = "E6 verification failed; see report";
            return ISOFORM_ERR_INTERNAL;
        }
        return ISOFORM_OK;
    });
}

const char* isoform_last_error(const isoform_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}

void isoform_string_free(char* s) { delete[] s; }

} // extern "C"
