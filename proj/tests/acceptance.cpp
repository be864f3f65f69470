// Acceptance runner: one PASS/FAIL line per criterion. With --criterion N only that
// criterion runs and the exit status reflects it alone.
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "zetalab/claims.hpp"

#ifndef ZETALAB_DATA_DIR
#define ZETALAB_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
    CLI::App app{"zeta_lab acceptance criteria"};
    int only = 0;
    int threads = 1;
    std::string zeros = std::string(ZETALAB_DATA_DIR) + "/zeros_10000.txt";
    app.add_option("--criterion", only, "run a single criterion (1-14)")->check(CLI::Range(1, 14));
    app.add_option("--parallelism", threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--zeros", zeros, "zero table");
    CLI11_PARSE(app, argc, argv);

    zetalab::ClaimContext ctx;
    ctx.parallelism = threads;
    try {
        ctx.table = std::make_shared<const zetalab::ZeroTable>(zetalab::load_zero_table(zeros));
    } catch (const std::exception& e) {
        ctx.table_error = e.what();
    }

    bool all = true;
    for (const auto& claim : zetalab::claim_ledger()) {
        if (only != 0 && claim.number != only) continue;
        const zetalab::Report rep = zetalab::run_claim(claim, ctx);
        std::printf("criterion %2d %-24s %s  (%.2f s)\n", claim.number, claim.id.c_str(),
                    rep.passed ? "PASS" : "FAIL", rep.runtime_s);
        std::printf("    measured:");
        for (double v : rep.measured) std::printf(" %.12g", v);
        std::printf("\n    tolerance: %.12g\n    notes: %s\n", rep.tolerance, rep.notes.c_str());
        all = all && rep.passed;
    }
    return all ? 0 : 1;
}
