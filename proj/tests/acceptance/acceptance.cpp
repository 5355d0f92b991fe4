// Acceptance suite: one PASS/FAIL line per criterion. Criteria 1-9 run the
// shared verification checks in-process; criterion 10 drives the CLI binary
// given as the first argument.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "lifshitz/verification.hpp"

namespace fs = std::filesystem;

namespace {

int shell(const std::string& command) {
    const int status = std::system((command + " >/dev/null 2>&1").c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s PATH_TO_lifshitz-fidelity\n", argv[0]);
        return 2;
    }
    const fs::path cli = argv[1];
    int failures = 0;
    int criterion = 0;

    for (const auto& id : lifshitz::verify::check_ids()) {
        const auto r = lifshitz::verify::run_check(id);
        ++criterion;
        failures += !r.passed;
        std::printf("[%s] %2d %-28s measured=%.3e threshold=%.1e time=%.2fs/%.0fs  %s\n", r.passed ? "PASS" : "FAIL",
                    criterion, r.id.c_str(), r.measured, r.threshold, r.seconds, r.time_limit, r.detail.c_str());
    }

    // Criterion 10: determinism and a verify suite that can fail.
    const auto start = std::chrono::steady_clock::now();
    const fs::path work = fs::temp_directory_path() / ("lifshitz-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(work);
    const std::string sweep = quoted(cli) + " sweep --axis Q --from 1 --to 10 --points 10 --log --out ";
    const int run_a = shell(sweep + quoted(work / "a"));
    const int run_b = shell(sweep + quoted(work / "b"));
    const std::string csv_a = slurp(work / "a" / "sweep.csv");
    const bool identical = run_a == 0 && run_b == 0 && !csv_a.empty() && csv_a == slurp(work / "b" / "sweep.csv");
    const int verify_exit = shell(quoted(cli) + " verify");
    std::vector<std::string> undetected;
    for (const auto& id : lifshitz::verify::check_ids())
        if (shell(quoted(cli) + " verify --only " + id + " --inject-fault " + id) == 0) undetected.push_back(id);
    fs::remove_all(work);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const bool ok = identical && verify_exit == 0 && undetected.empty();
    failures += !ok;
    std::string detail = identical ? "sweep CSV byte-identical" : "sweep CSV differs or missing";
    detail += "; verify exit " + std::to_string(verify_exit);
    detail += "; injected faults detected " +
              std::to_string(lifshitz::verify::check_ids().size() - undetected.size()) + "/" +
              std::to_string(lifshitz::verify::check_ids().size());
    for (const auto& id : undetected) detail += " missed:" + id;
    std::printf("[%s] 10 %-28s time=%.2fs  %s\n", ok ? "PASS" : "FAIL", "cli-determinism", seconds, detail.c_str());

    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
