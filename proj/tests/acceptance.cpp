// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria pin their own orders, ranges and tolerances (everything
// here is exact arithmetic, so "tolerance" means equality).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "riemcurv/verify.hpp"

using namespace riemcurv;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome from_report(const SuiteReport& report) {
    for (const auto& c : report.checks)
        if (!c.pass) return {false, c.name + ": " + c.detail};
    return {true, ""};
}

Outcome run_suite_criterion(const std::string& suite, long order) {
    VerifyOptions opts;
    opts.order = order;
    return from_report(run_suite(suite, opts));
}

std::string run_cli(const std::string& args, int& exit_code) {
    std::string cmd = std::string(RIEMCURV_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    exit_code = pclose(pipe);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Outcome golden_cli_criterion() {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"expand lk --k 1 --order 8 --format json", "expand_lk_k1_order8.json"},
        {"expand basis --k 3 --p 1 --format json", "expand_basis_k3_p1.json"},
        {"expand lk --k 0 --basis tilde-delta --lambda 1 --format json",
         "expand_lk_k0_tilde_lambda1.json"},
        {"act t --on C:0,0 --order 7 --format json", "act_t_c00_order7.json"},
        {"act t-lambda --on TD:0,0 --lambda 1 --order 5 --format json",
         "act_tlambda_td00_lambda1_order5.json"},
        {"act t-power 0 --on C:2,1 --format json", "act_tpower0_c21.json"},
    };
    for (const auto& [args, golden_name] : cases) {
        int code1 = 0, code2 = 0;
        std::string first = run_cli(args, code1);
        std::string second = run_cli(args, code2);
        if (code1 != 0 || code2 != 0)
            return {false, "'" + args + "' exited with nonzero status"};
        if (first != second)
            return {false, "'" + args + "' is not byte-identical across runs"};
        std::string golden = read_file(std::string(RIEMCURV_GOLDEN_DIR) + "/" + golden_name);
        if (golden.empty()) return {false, "missing golden file " + golden_name};
        if (first != golden)
            return {false, "'" + args + "' differs from golden file " + golden_name};
    }
    return {true, ""};
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        double time_limit_s;  // 0 = no individual limit
        std::function<Outcome()> run;
    };

    const std::vector<Criterion> criteria = {
        {"1 Lipschitz-Killing recursion t*lk(k) = lk(k+1), k <= 10, order 12", 1.0,
         [] { return run_suite_criterion("lk-recursion", 12); }},
        {"2 t-in-phi composed with phi-in-tau reproduces t-in-tau, k <= 8, symbolic", 1.0,
         [] { return run_suite_criterion("sphere-bases", 12); }},
        {"3 tau transport t*(t^k) = t^(k+1), k <= 8, symbolic", 0,
         [] { return run_suite_criterion("tau-transport", 12); }},
        {"4 geodesic restriction inverts the pullback; pullback coefficient table", 0,
         [] { return run_suite_criterion("immersion-roundtrip", 12); }},
        {"5 Lipschitz-Killing immersion invariance, k <= 8, order 12", 0,
         [] { return run_suite_criterion("lk-invariance", 12); }},
        {"6 sphere templates against the tube-volume oracle", 1.0,
         [] { return run_suite_criterion("sphere-templates", 12); }},
        {"7 hermitian basis change round trip and triangularity, k <= 12, symbolic", 0,
         [] { return run_suite_criterion("hermitian-basis", 12); }},
        {"8 generating-function route = C-basis route for lk(k), k <= 8, degrees <= 12", 0,
         [] { return run_suite_criterion("lk-hermitian", 12); }},
        {"9 O/P closed forms to order 12; intertwining on 20 random series", 0,
         [] { return run_suite_criterion("op-transforms", 12); }},
        {"10 closed t action = route through C, k <= 6, degrees <= k+7, symbolic", 0,
         [] { return run_suite_criterion("t-action-hermitian", 12); }},
        {"11 CLI golden files byte-identical across runs", 0, golden_cli_criterion},
    };

    int failures = 0;
    auto total_start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        if (outcome.pass && c.time_limit_s > 0 && secs > c.time_limit_s) {
            outcome.pass = false;
            outcome.detail = "exceeded time limit";
        }
        std::printf("%s  [%s]  (%.3f s)%s%s\n", outcome.pass ? "PASS" : "FAIL",
                    c.name.c_str(), secs, outcome.detail.empty() ? "" : "  -- ",
                    outcome.detail.c_str());
        if (!outcome.pass) ++failures;
    }
    double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - total_start).count();
    if (total > 30.0) {
        std::printf("FAIL  [total runtime under 30 s]  (%.3f s)\n", total);
        ++failures;
    } else {
        std::printf("PASS  [total runtime under 30 s]  (%.3f s)\n", total);
    }
    return failures == 0 ? 0 : 1;
}
