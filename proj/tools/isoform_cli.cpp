// Command-line front end; talks to the core exclusively through the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "isoform.h"

namespace {

struct CtxDeleter {
    void operator()(isoform_ctx* c) const { isoform_ctx_free(c); }
};

int finish(isoform_ctx* ctx, isoform_status st, char* report) {
    if (report) {
        std::fputs(report, stdout);
        isoform_string_free(report);
    }
    if (st != ISOFORM_OK) {
        const char* msg = isoform_last_error(ctx);
        if (msg && *msg) std::fprintf(stderr, "error: %s\n", msg);
    }
    return (int)st;
}

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream f(path);
    if (!f) {
        ok = false;
        return {};
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    ok = true;
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isotropy-formality of circle subgroups of compact Lie groups"};
    app.require_subcommand(1);

    std::string cache_dir;
    int workers = 1;
    bool json = false;
    bool verify = false;
    std::uint64_t budget = 0;
    app.add_option("--cache-dir", cache_dir, "Weyl group cache directory");
    app.add_option("--workers", workers, "worker count for oracle scans")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", json, "machine-readable output");
    app.add_flag("--verify", verify, "enable brute-force oracle cross-checks");
    app.add_option("--budget", budget, "Weyl enumeration budget (max group order)");

    std::string classify_file, poincare_file, weyl_family;
    int weyl_rank = 0;
    auto* cmd_classify = app.add_subcommand("classify", "classify a (group, circle) pair");
    cmd_classify->add_option("file", classify_file, "input document")->required();
    auto* cmd_poincare = app.add_subcommand("poincare", "Poincare polynomials for a pair");
    cmd_poincare->add_option("file", poincare_file, "input document")->required();
    auto* cmd_weyl = app.add_subcommand("weyl", "Weyl group order and class census");
    cmd_weyl->add_option("family", weyl_family, "simple family (A-G)")->required();
    cmd_weyl->add_option("rank", weyl_rank, "rank")->required();
    auto* cmd_e6 = app.add_subcommand("e6-verify", "run the E6 structural verification");
    // let the global flags appear after the subcommand as well
    for (auto* cmd : {cmd_classify, cmd_poincare, cmd_weyl, cmd_e6}) cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return (int)ISOFORM_ERR_PARSE;
    }

    std::unique_ptr<isoform_ctx, CtxDeleter> ctx(isoform_ctx_new());
    if (!cache_dir.empty()) isoform_set_cache_dir(ctx.get(), cache_dir.c_str());
    isoform_set_workers(ctx.get(), workers);
    if (budget) isoform_set_budget(ctx.get(), budget);

    unsigned flags = 0;
    if (json) flags |= ISOFORM_FLAG_JSON;
    if (verify) flags |= ISOFORM_FLAG_VERIFY;

    char* report = nullptr;
    if (cmd_classify->parsed() || cmd_poincare->parsed()) {
        const std::string& path = cmd_classify->parsed() ? classify_file : poincare_file;
        bool ok = false;
        std::string text = read_file(path, ok);
        if (!ok) {
            std::fprintf(stderr, "error: cannot read input file '%s'\n", path.c_str());
            return (int)ISOFORM_ERR_PARSE;
        }
        isoform_status st =
            cmd_classify->parsed()
                ? isoform_classify(ctx.get(), text.c_str(), flags, &report)
                : isoform_poincare(ctx.get(), text.c_str(), flags, &report);
        return finish(ctx.get(), st, report);
    }
    if (cmd_weyl->parsed()) {
        isoform_status st =
            isoform_weyl_info(ctx.get(), weyl_family.c_str(), weyl_rank, flags, &report);
        return finish(ctx.get(), st, report);
    }
    if (cmd_e6->parsed()) {
        isoform_status st = isoform_e6_verify(ctx.get(), flags, &report);
        return finish(ctx.get(), st, report);
    }
    return 0;
}
