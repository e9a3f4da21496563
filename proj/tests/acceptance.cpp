#include <cstar/verify.hpp>

#include <cstdio>

#ifndef CSTAR_CLI_PATH
#define CSTAR_CLI_PATH ""
#endif
#ifndef CSTAR_GOLDEN_DIR
#define CSTAR_GOLDEN_DIR ""
#endif

int main() {
    cstar::VerifyOptions opt;
    opt.cli_path = CSTAR_CLI_PATH;
    opt.golden_dir = CSTAR_GOLDEN_DIR;

    std::vector<cstar::CriterionResult> results = cstar::run_acceptance(opt);
    int failed = 0;
    for (const auto &r : results) {
        std::printf("%s: %s (%s)\n", r.id.c_str(), r.pass ? "pass" : "FAIL",
                    r.detail.c_str());
        if (!r.pass)
            ++failed;
    }
    if (failed) {
        std::printf("%d criteria failed\n", failed);
        return 1;
    }
    std::printf("all criteria pass\n");
    return 0;
}
