// Acceptance suite: one line per criterion, nonzero exit iff any fails.
// Criterion 10 shells out to the CLI binary and compares byte-exact golden
// files across two consecutive runs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "muinv/suites.hpp"

namespace {

std::string env_or(const char* name, const std::string& fallback)
{
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

bool run_command(const std::string& cmd, std::string& out)
{
    out.clear();
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return false;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    return pclose(pipe) == 0;
}

bool read_file(const std::string& path, std::string& out)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

struct GoldenCase {
    std::string name;
    std::string args;  // relative input paths are resolved against the golden dir
    std::string golden;
};

bool run_suite_criterion(const std::vector<std::string>& names, std::string& detail)
{
    for (const auto& name : names) {
        auto r = muinv::suites::run_suite(name);
        if (!r.passed) {
            detail = name;
            for (const auto& n : r.notes)
                detail += " | " + n;
            return false;
        }
    }
    return true;
}

bool run_goldens(std::string& detail)
{
    const std::string cli = env_or("MUINV_CLI", MUINV_CLI_DEFAULT);
    const std::string dir = env_or("MUINV_GOLDEN_DIR", MUINV_GOLDEN_DIR_DEFAULT);
    const std::vector<GoldenCase> cases = {
        {"hilton", "hilton --n 2 --q 5 5 --k 9 --json", "hilton.json"},
        {"hilton-graded", "hilton --n 1 --q 2 2 --k 3 --window -1 1 --json",
         "hilton_graded.json"},
        {"perms", "perms --r 3 --s 1 --json", "perms.json"},
        {"normalize", "normalize --n 2 --q 5 5 --expr [[i1,i0],i2] --json", "normalize.json"},
        {"normalize-text", "normalize --n 2 --q 5 5 --expr [[i1,i0],i2]", "normalize.txt"},
        {"basis-matrix", "basis-matrix --n 2 --q 2 3 4 --s 1 --json", "basis_matrix.json"},
        {"btransform-forward", "btransform forward --in INPUTS/seq_arity1.json --max-s 4 --json",
         "btransform_forward.json"},
        {"btransform-invert", "btransform invert --in INPUTS/dvals.json --window 1 2 --json",
         "btransform_invert.json"},
        {"btransform-torsion",
         "btransform forward --in INPUTS/seq_torsion.json --max-s 3 --json",
         "btransform_torsion.json"},
        {"hopf-eval", "hopf-eval --in INPUTS/dataset_r3.json --s 1 --json", "hopf_eval.json"},
        {"reconstruct",
         "reconstruct --n 1 --q 2 --in INPUTS/hopfvalues_r2.json --window -2 2 --json",
         "reconstruct.json"},
        {"reconstruct-r3",
         "reconstruct --n 1 --q 2 2 --in INPUTS/hopfvalues_r3.json --window 0 1 --json",
         "reconstruct_r3.json"},
        {"mu-targets", "mu-targets --p 3 3 --m 6 --n 2 --max-s 3 --json", "mu_targets.json"},
        {"pipeline", "pipeline --p 3 3 --m 6 --n 2 --max-s 2 --json", "pipeline.json"},
        {"classify", "classify --p 3 3 3 --m 6 --n 2 --max-s 4 --json", "classify.json"},
        {"classify-total",
         "classify --total --p 3 3 3 --m 6 --n 1 --window -1 1 --max-s 2 --json",
         "classify_total.json"},
        {"check-suite", "check --suite binomial-pascal", "check_suite.txt"},
    };
    for (const auto& c : cases) {
        std::string args = c.args;
        const std::string marker = "INPUTS/";
        for (std::string::size_type pos; (pos = args.find(marker)) != std::string::npos;)
            args.replace(pos, marker.size(), dir + "/inputs/");
        const std::string cmd = cli + " " + args;
        std::string run1, run2, expected;
        if (!run_command(cmd, run1) || !run_command(cmd, run2)) {
            detail = c.name + ": command failed (" + cmd + ")";
            return false;
        }
        if (run1 != run2) {
            detail = c.name + ": two consecutive runs differ";
            return false;
        }
        if (!read_file(dir + "/" + c.golden, expected)) {
            detail = c.name + ": missing golden file " + c.golden;
            return false;
        }
        if (run1 != expected) {
            detail = c.name + ": output differs from golden " + c.golden;
            return false;
        }
    }
    return true;
}

struct Criterion {
    int id;
    std::string label;
    std::vector<std::string> suites;  // empty = golden runner
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "monotone-permutation count (r <= 6, s <= 6)", {"monotone-count"}},
        {2, "basic-product count per multidegree (r <= 5, s <= 4)", {"hilton-count"}},
        {3, "normalizer soundness against the envelope oracle", {"normalizer-oracle"}},
        {4, "unimodularity of D_s and the binomial matrices", {"unimodularity"}},
        {5, "binomial calculus vs the recursion table", {"binomial-pascal"}},
        {6,
         "reconstruction round trips (sequences, multi-index, graded)",
         {"transform-roundtrip", "reconstruction-roundtrip"}},
        {7, "stem consistency across the full grid", {"stem-consistency"}},
        {8, "published-value reproduction", {"paper-numbers"}},
        {9, "classification assembly with hypothesis flags", {"classification-assembly"}},
        {10, "CLI golden files byte-identical across runs", {}},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = c.suites.empty() ? run_goldens(detail) : run_suite_criterion(c.suites, detail);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.label.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok)
            ++failures;
    }
    return failures;
}
