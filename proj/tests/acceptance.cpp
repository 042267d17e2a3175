// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// failure.  Monte Carlo sizes follow the library defaults; GAFKIT_WORKERS
// overrides the thread count.

#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gafkit/verify.hpp>

using namespace gafkit;

namespace {

int g_failures = 0;

void report(int index, const std::string& title, const verify::SuiteResult& res) {
    bool pass = res.pass();
    std::printf("[%d/9] %-58s %s  (%.1f s)\n", index, title.c_str(), pass ? "PASS" : "FAIL",
                res.seconds);
    for (const auto& c : res.checks)
        if (!c.pass)
            std::printf("      failed: %s  measured %.6g  tolerance %.6g\n", c.name.c_str(),
                        c.measured, c.tolerance);
    if (!pass) ++g_failures;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_cli(const std::string& bin, const std::string& args) {
    std::string cmd = bin + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

verify::SuiteResult cli_determinism_suite(const char* bin) {
    verify::detail::Timer timer;
    verify::SuiteResult r{"cli-determinism", {}, 0.0};
    if (bin == nullptr) {
        r.checks.push_back({"GAFCLI_BIN not set", false, 0.0, 0.0});
        return r;
    }
    struct Cmd {
        const char* name;
        std::string args;
        const char* file;
        bool vary_workers;
    };
    std::vector<Cmd> cmds = {
        {"sample", "sample --model hyperbolic --params alpha=0.5 --truncation 80 --seed 11", "coefficients.csv", false},
        {"transform", "transform --transform meixner --params alpha=0.4 c=0.5 --truncation 60 --seed 12", "coefficients.csv", false},
        {"zeros", "zeros --model planar --window -2,2,-2,2 --trials 10 --seed 13", "zeros.csv", true},
        {"intensity",
         "intensity --model spherical --params N=12 --window -3,3,-3,3 --region disk:1 --trials 40 --seed 14",
         "intensity.csv", true},
        {"certify", "certify --model planar --truncation 280 --curve circle:0:0:0.9 --seed 15", "certificate.json", false},
    };
    for (const auto& c : cmds) {
        std::string d1 = std::string("/tmp/gafkit_acc_") + c.name + "_1";
        std::string d2 = std::string("/tmp/gafkit_acc_") + c.name + "_2";
        int rc1 = run_cli(bin, c.args + " --workers 1 --out " + d1);
        int rc2 = run_cli(bin, c.args + (c.vary_workers ? " --workers 2 --out " : " --workers 1 --out ") + d2);
        bool ok = rc1 == 0 && rc2 == 0 &&
                  sha256_hex(slurp(d1 + "/" + c.file)) == sha256_hex(slurp(d2 + "/" + c.file));
        r.checks.push_back({std::string(c.name) + (c.vary_workers ? " bytes across worker counts"
                                                                  : " bytes across reruns"),
                            ok, ok ? 0.0 : 1.0, 0.0});
    }
    r.seconds = timer.seconds();
    return r;
}

}  // namespace

int main() {
    int workers = 2;
    if (const char* w = std::getenv("GAFKIT_WORKERS")) workers = std::atoi(w);

    report(1, "basis-image theorems (all six transforms, k <= 30)", verify::run_transforms(workers));
    report(2, "orthonormality and generating identities", verify::run_bases(workers));
    report(3, "covariance: empirical vs closed form, four models", verify::run_covariance(workers));
    report(4, "intensities: planar / hyperbolic / spherical / extrema", verify::run_intensity(workers));
    report(5, "determinantal two-point structure and repulsion", verify::run_dpp(workers));
    report(6, "truncation bounds: tail, concentration, Lipschitz", verify::run_bounds(workers));
    report(7, "Rouche certification against 4n recounts", verify::run_certify(workers));
    report(8, "oracle equivalence: subdivision vs polynomial roots", verify::run_oracle(workers));
    report(9, "CLI determinism across reruns and worker counts",
           cli_determinism_suite(std::getenv("GAFCLI_BIN")));

    if (g_failures == 0)
        std::printf("acceptance: ALL CRITERIA PASS\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
