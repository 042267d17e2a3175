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

// Command-line front end: samplers, transforms, zero location, Rouche
// certification, and the verification suites.  Every output file comes with
// a manifest; rerunning a manifest reproduces byte-identical CSVs.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <gafkit/gafkit.hpp>
#include <gafkit/verify.hpp>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gafkit;

namespace {

constexpr std::uint64_t kDefaultSeed = 20250101;

enum ExitCode { kOk = 0, kVerifyFail = 1, kUsage = 2, kAccuracy = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, double> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--params expects k=v, got: " + kv);
        try {
            out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("--params value is not a number: " + kv);
        }
    }
    return out;
}

double param_or(const std::map<std::string, double>& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

GafModel parse_model(const std::string& name, const std::map<std::string, double>& p) {
    try {
        if (name == "planar") return GafModel::planar(param_or(p, "ell", 1.0));
        if (name == "planar-higher")
            return GafModel::planar_higher(static_cast<int>(param_or(p, "N", 1)));
        if (name == "hyperbolic") return GafModel::hyperbolic(param_or(p, "alpha", 0.0));
        if (name == "spherical") return GafModel::spherical(static_cast<int>(param_or(p, "N", 8)));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown model: " + name +
                     " (expected planar, planar-higher, hyperbolic, spherical)");
}

TransformSpec parse_transform(const std::string& name, const std::map<std::string, double>& p) {
    try {
        if (name == "bargmann") return TransformSpec::bargmann(static_cast<int>(param_or(p, "N", 0)));
        if (name == "charlier") return TransformSpec::charlier_stft(param_or(p, "a", 1.0));
        if (name == "bergman") return TransformSpec::bergman_dp(param_or(p, "beta", 0.0));
        if (name == "meixner")
            return TransformSpec::meixner_stft(param_or(p, "alpha", 0.0), param_or(p, "c", 0.5));
        if (name == "krawtchouk")
            return TransformSpec::krawtchouk_stft(static_cast<int>(param_or(p, "N", 8)),
                                                  param_or(p, "p", 0.5));
        if (name == "projection")
            return TransformSpec::analytic_projection(static_cast<int>(param_or(p, "N", 0)));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown transform: " + name +
                     " (expected bargmann, charlier, bergman, meixner, krawtchouk, projection)");
}

/// "x0,x1,y0,y1" or "disk:r" (the largest axis-aligned square inside |z|<=r)
Rect parse_window(const std::string& spec) {
    if (spec.rfind("disk:", 0) == 0) {
        double r = 0.0;
        try {
            r = std::stod(spec.substr(5));
        } catch (const std::exception&) {
            throw UsageError("malformed window: " + spec);
        }
        if (r <= 0.0) throw UsageError("window disk radius must be positive");
        double h = r / std::sqrt(2.0);
        return Rect{-h, h, -h, h};
    }
    double v[4];
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        auto comma = (i < 3) ? spec.find(',', pos) : spec.size();
        if (comma == std::string::npos) throw UsageError("malformed window: " + spec);
        try {
            v[i] = std::stod(spec.substr(pos, comma - pos));
        } catch (const std::exception&) {
            throw UsageError("malformed window: " + spec);
        }
        pos = comma + 1;
    }
    if (!(v[0] < v[1] && v[2] < v[3])) throw UsageError("window must satisfy x0<x1, y0<y1");
    return Rect{v[0], v[1], v[2], v[3]};
}

RegionSpec parse_region(const std::string& spec) {
    auto nums = [&](std::size_t off, int count) {
        std::vector<double> out;
        std::size_t pos = off;
        for (int i = 0; i < count; ++i) {
            auto colon = (i + 1 < count) ? spec.find(':', pos) : spec.size();
            if (colon == std::string::npos) throw UsageError("malformed region: " + spec);
            try {
                out.push_back(std::stod(spec.substr(pos, colon - pos)));
            } catch (const std::exception&) {
                throw UsageError("malformed region: " + spec);
            }
            pos = colon + 1;
        }
        return out;
    };
    try {
        if (spec.rfind("disk:", 0) == 0) return RegionSpec::centered_disk(nums(5, 1)[0]);
        if (spec.rfind("annulus:", 0) == 0) {
            auto v = nums(8, 2);
            return RegionSpec::annulus(v[0], v[1]);
        }
        if (spec.rfind("rect:", 0) == 0) {
            auto v = nums(5, 4);
            return RegionSpec::rectangle(Rect{v[0], v[1], v[2], v[3]});
        }
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown region: " + spec + " (expected disk:r, annulus:r0:r1, rect:x0:x1:y0:y1)");
}

Curve parse_curve(const std::string& spec) {
    try {
        if (spec.rfind("circle:", 0) == 0) {
            std::size_t pos = 7;
            double v[3];
            for (int i = 0; i < 3; ++i) {
                auto colon = (i < 2) ? spec.find(':', pos) : spec.size();
                if (colon == std::string::npos) throw UsageError("malformed curve: " + spec);
                v[i] = std::stod(spec.substr(pos, colon - pos));
                pos = colon + 1;
            }
            return Curve::circle(cplx(v[0], v[1]), v[2]);
        }
        if (spec.rfind("rect:", 0) == 0) {
            std::size_t pos = 5;
            double v[4];
            for (int i = 0; i < 4; ++i) {
                auto colon = (i < 3) ? spec.find(':', pos) : spec.size();
                if (colon == std::string::npos) throw UsageError("malformed curve: " + spec);
                v[i] = std::stod(spec.substr(pos, colon - pos));
                pos = colon + 1;
            }
            return Curve::rectangle(Rect{v[0], v[1], v[2], v[3]});
        }
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed curve: " + spec);
    }
    throw UsageError("unknown curve: " + spec + " (expected circle:cx:cy:r or rect:x0:x1:y0:y1)");
}

struct RunContext {
    std::string command;
    json args = json::object();
    fs::path out_dir = ".";
    std::map<std::string, std::string> digests;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void write_file(const std::string& name, const std::string& bytes) {
        fs::create_directories(out_dir);
        std::ofstream f(out_dir / name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + (out_dir / name).string());
        f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        digests[name] = sha256_hex(bytes);
    }
    void write_manifest() {
        json m;
        m["command"] = command;
        m["args"] = args;
        m["library_version"] = version;
        m["wall_clock_sec"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        m["outputs"] = digests;
        fs::create_directories(out_dir);
        std::ofstream f(out_dir / "manifest.json", std::ios::binary);
        f << m.dump(2) << "\n";
    }
};

std::string coeffs_csv(const AnalyticSeries& s) {
    std::string csv = "k,re,im\n";
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        csv += std::to_string(k);
        csv += ',';
        csv += format17(s.coeffs[k].real());
        csv += ',';
        csv += format17(s.coeffs[k].imag());
        csv += '\n';
    }
    return csv;
}

std::string plot_script() {
    return R"(#!/usr/bin/env python3
# scatter of sample zeros over a |F| heatmap (reads zeros.csv and heatmap.csv)
import csv
import matplotlib.pyplot as plt

xs, ys = [], []
with open("zeros.csv") as f:
    for row in csv.DictReader(f):
        xs.append(float(row["re"]))
        ys.append(float(row["im"]))

grid, extent = [], None
try:
    with open("heatmap.csv") as f:
        rows = list(csv.reader(f))
    extent = [float(v) for v in rows[0][1:5]]
    grid = [[float(v) for v in row] for row in rows[1:]]
except OSError:
    pass

fig, ax = plt.subplots(figsize=(6, 6))
if grid:
    ax.imshow(grid, origin="lower", extent=extent, cmap="viridis", aspect="equal")
ax.scatter(xs, ys, s=12, c="white", edgecolors="black", linewidths=0.3)
ax.set_xlabel("Re z")
ax.set_ylabel("Im z")
fig.tight_layout()
fig.savefig("zeros.png", dpi=160)
print("wrote zeros.png")
)";
}

int cmd_sample(RunContext& ctx, const GafModel& model, long truncation, std::uint64_t seed,
               std::uint64_t stream) {
    auto s = sample_gaf(model, truncation, seed, stream);
    ctx.write_file("coefficients.csv", coeffs_csv(s));
    ctx.write_manifest();
    return kOk;
}

int cmd_transform(RunContext& ctx, const TransformSpec& spec, long truncation, std::uint64_t seed,
                  std::uint64_t stream) {
    auto s = transform_of_noise(spec, truncation, seed, stream);
    ctx.write_file("coefficients.csv", coeffs_csv(s));
    ctx.write_manifest();
    return kOk;
}

int cmd_zeros(RunContext& ctx, const std::function<AnalyticSeries(std::uint64_t)>& sample_at,
              const Rect& window, int grid, long trials, int workers, bool emit_plot,
              const std::string& method) {
    std::vector<std::vector<ZeroPoint>> per_trial(static_cast<std::size_t>(trials));
    parallel_trials(trials, workers, [&](long t) {
        auto s = sample_at(static_cast<std::uint64_t>(t));
        ZeroSet zs = (method == "subdivision") ? locate_zeros(s, window, grid)
                                               : oracle_zeros(s, window);
        per_trial[static_cast<std::size_t>(t)] = zs.points;
    });
    std::string csv = "trial,re,im\n";
    for (long t = 0; t < trials; ++t)
        for (const auto& p : per_trial[static_cast<std::size_t>(t)]) {
            csv += std::to_string(t);
            csv += ',';
            csv += format17(p.point.real());
            csv += ',';
            csv += format17(p.point.imag());
            csv += '\n';
        }
    ctx.write_file("zeros.csv", csv);
    if (emit_plot) {
        auto s0 = sample_at(0);
        const int hg = 160;
        std::string heat = "extent," + format17(window.x0) + "," + format17(window.x1) + "," +
                           format17(window.y0) + "," + format17(window.y1) + "\n";
        for (int j = 0; j < hg; ++j) {
            for (int i = 0; i < hg; ++i) {
                cplx z(window.x0 + window.width() * (i + 0.5) / hg,
                       window.y0 + window.height() * (j + 0.5) / hg);
                heat += format17(std::log1p(std::abs(eval_series(s0, z))));
                if (i + 1 < hg) heat += ',';
            }
            heat += '\n';
        }
        ctx.write_file("heatmap.csv", heat);
        ctx.write_file("plot.py", plot_script());
    }
    ctx.write_manifest();
    return kOk;
}

int cmd_intensity(RunContext& ctx, const GafModel& model, const Rect& window,
                  const std::vector<RegionSpec>& regions, long trials, long truncation,
                  std::uint64_t seed, int workers) {
    auto sampler = gaf_zero_sampler(model, window, truncation, seed);
    auto rep = empirical_intensity(sampler, model, regions, trials, workers);
    std::string csv = "region,metric_area,observed_mean,predicted_mean,stderr\n";
    for (const auto& bin : rep.bins) {
        csv += bin.region.describe();
        csv += ',';
        csv += format17(bin.metric_area);
        csv += ',';
        csv += format17(bin.observed);
        csv += ',';
        csv += format17(bin.predicted);
        csv += ',';
        csv += format17(bin.stderr_mean);
        csv += '\n';
    }
    ctx.write_file("intensity.csv", csv);
    ctx.write_manifest();
    return kOk;
}

int cmd_certify(RunContext& ctx, const AnalyticSeries& series, const Curve& curve, long truncation,
                double safety) {
    auto cert = rouche_certify(series, curve, truncation, safety);
    json j;
    j["n"] = cert.n;
    j["eps"] = cert.eps;
    j["tail"] = cert.tail;
    j["tail_ok"] = cert.tail_ok;
    j["count"] = cert.count;
    j["prob_bound"] = cert.prob_bound;
    j["vacuous"] = cert.vacuous;
    ctx.write_file("certificate.json", j.dump(2) + "\n");
    ctx.write_manifest();
    std::cout << (cert.vacuous ? "certificate vacuous" : "certificate issued") << ": count="
              << cert.count << " eps=" << cert.eps << " prob_bound=" << cert.prob_bound << "\n";
    return kOk;
}

int cmd_verify(const std::vector<std::string>& suites, int workers, double budget) {
    std::vector<std::string> names;
    for (const auto& s : suites) {
        if (s == "all") {
            auto all = verify::suite_names();
            names.insert(names.end(), all.begin(), all.end());
        } else {
            names.push_back(s);
        }
    }
    bool ok = true;
    std::printf("%-12s %-55s %14s %14s  %s\n", "suite", "check", "measured", "tolerance", "status");
    for (const auto& name : names) {
        verify::SuiteResult res;
        try {
            res = verify::run_suite(name, workers, budget);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        for (const auto& c : res.checks) {
            std::printf("%-12s %-55s %14.6g %14.6g  %s\n", res.suite.c_str(), c.name.c_str(),
                        c.measured, c.tolerance, c.pass ? "pass" : "FAIL");
            ok = ok && c.pass;
        }
        std::printf("%-12s (%.1f s)\n", res.suite.c_str(), res.seconds);
    }
    std::printf("verify: %s\n", ok ? "ALL PASS" : "FAILURES PRESENT");
    return ok ? kOk : kVerifyFail;
}

int run_command(const std::string& command, const json& args);

int cmd_rerun(const fs::path& manifest_path) {
    std::ifstream f(manifest_path);
    if (!f) throw UsageError("cannot open manifest: " + manifest_path.string());
    json m = json::parse(f, nullptr, true, true);
    std::string command = m.at("command");
    json args = m.at("args");
    int rc = run_command(command, args);
    if (rc != kOk) return rc;
    json fresh;
    {
        std::ifstream nf(fs::path(args.at("out").get<std::string>()) / "manifest.json");
        fresh = json::parse(nf, nullptr, true, true);
    }
    if (fresh.at("outputs") != m.at("outputs")) {
        std::cerr << "rerun: output digests differ from the manifest\n";
        return kVerifyFail;
    }
    std::cout << "rerun: outputs reproduced byte-identically\n";
    return kOk;
}

/// Dispatch shared by main() and rerun (arguments round-trip through JSON).
int run_command(const std::string& command, const json& args) {
    RunContext ctx;
    ctx.command = command;
    ctx.args = args;
    ctx.out_dir = args.value("out", std::string("."));
    auto params = parse_params(args.value("params", std::vector<std::string>{}));
    std::uint64_t seed = args.value("seed", kDefaultSeed);
    std::uint64_t stream = args.value("stream", std::uint64_t{0});
    long truncation = args.value("truncation", 0l);
    int workers = args.value("workers", 1);

    if (command == "sample") {
        auto model = parse_model(args.at("model"), params);
        if (truncation < 0) throw UsageError("--truncation must be nonnegative");
        return cmd_sample(ctx, model, truncation, seed, stream);
    }
    if (command == "transform") {
        auto spec = parse_transform(args.at("transform"), params);
        if (truncation < 0) throw UsageError("--truncation must be nonnegative");
        return cmd_transform(ctx, spec, truncation, seed, stream);
    }
    if (command == "zeros") {
        Rect window = parse_window(args.at("window"));
        long trials = args.value("trials", 1l);
        int grid = args.value("grid", 64);
        bool emit_plot = args.value("emit-plot", false);
        std::string method = args.value("method", std::string("oracle"));
        if (trials < 1) throw UsageError("--trials must be positive");
        if (method != "oracle" && method != "subdivision")
            throw UsageError("--method must be oracle or subdivision");
        if (args.contains("model")) {
            auto model = parse_model(args.at("model"), params);
            long n = truncation;
            if (model.kind == GafKind::Spherical)
                n = model.N;
            else if (n <= 0)
                n = minimal_truncation(model.dictionary(), window.max_abs(), 1e-8);
            return cmd_zeros(
                ctx, [model, n, seed](std::uint64_t t) { return sample_gaf(model, n, seed, t); },
                window, grid, trials, workers, emit_plot, method);
        }
        if (args.contains("transform")) {
            auto spec = parse_transform(args.at("transform"), params);
            long n = truncation;
            if (n <= 0) n = minimal_truncation(spec.dict(), window.max_abs(), 1e-8);
            return cmd_zeros(
                ctx,
                [spec, n, seed](std::uint64_t t) { return transform_of_noise(spec, n, seed, t); },
                window, grid, trials, workers, emit_plot, method);
        }
        throw UsageError("zeros: pass --model or --transform");
    }
    if (command == "intensity") {
        auto model = parse_model(args.at("model"), params);
        Rect window = parse_window(args.at("window"));
        long trials = args.value("trials", 500l);
        std::vector<RegionSpec> regions;
        for (const auto& rs : args.value("regions", std::vector<std::string>{}))
            regions.push_back(parse_region(rs));
        if (regions.empty()) throw UsageError("intensity: pass at least one --region");
        if (trials < 1) throw UsageError("--trials must be positive");
        return cmd_intensity(ctx, model, window, regions, trials, truncation, seed, workers);
    }
    if (command == "certify") {
        Curve curve = parse_curve(args.at("curve"));
        double safety = args.value("safety", 0.1);
        if (truncation < 1) throw UsageError("certify: pass --truncation n >= 1");
        if (args.contains("model")) {
            auto model = parse_model(args.at("model"), params);
            auto s = sample_gaf(model, truncation, seed, stream);
            return cmd_certify(ctx, s, curve, truncation, safety);
        }
        if (args.contains("transform")) {
            auto spec = parse_transform(args.at("transform"), params);
            auto s = transform_of_noise(spec, truncation, seed, stream);
            return cmd_certify(ctx, s, curve, truncation, safety);
        }
        throw UsageError("certify: pass --model or --transform");
    }
    throw UsageError("unknown command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gafkit: transforms of white noise, Gaussian analytic functions, and their zeros"};
    app.require_subcommand(1);

    std::string model, transform, window, curve, method = "oracle";
    std::vector<std::string> params, regions, suites;
    std::string out = ".";
    long truncation = 0, trials = 1;
    int grid = 64, workers = 1;
    std::uint64_t seed = kDefaultSeed, stream = 0;
    bool emit_plot = false, entropy = false;
    double safety = 0.1, budget = 1.0;

    auto add_common = [&](CLI::App* sub, bool with_model, bool with_transform) {
        if (with_model)
            sub->add_option("--model", model, "model: planar, planar-higher, hyperbolic, spherical");
        if (with_transform)
            sub->add_option("--transform", transform,
                            "transform: bargmann, charlier, bergman, meixner, krawtchouk, projection");
        sub->add_option("--params", params, "model/transform parameters as k=v");
        sub->add_option("--truncation", truncation,
                        "series truncation (0: pick by the tail criterion)");
        sub->add_option("--seed", seed, "base seed (fixed default keeps runs reproducible)");
        sub->add_option("--stream", stream, "stream id");
        sub->add_option("--workers", workers, "worker threads (outputs do not depend on it)");
        sub->add_option("--out", out, "output directory");
        sub->add_flag("--entropy", entropy, "seed from the clock instead of the fixed default");
    };

    auto* sc_sample = app.add_subcommand("sample", "sample GAF coefficients to CSV");
    add_common(sc_sample, true, false);
    auto* sc_transform =
        app.add_subcommand("transform", "transform white noise to series coefficients");
    add_common(sc_transform, false, true);
    auto* sc_zeros = app.add_subcommand("zeros", "locate zeros over a window across trials");
    add_common(sc_zeros, true, true);
    sc_zeros->add_option("--window", window, "window: x0,x1,y0,y1 or disk:r")->required();
    sc_zeros->add_option("--grid", grid, "subdivision grid");
    sc_zeros->add_option("--trials", trials, "number of independent samples");
    sc_zeros->add_option("--method", method, "oracle (default) or subdivision");
    sc_zeros->add_flag("--emit-plot", emit_plot, "also write heatmap.csv and plot.py");
    auto* sc_intensity = app.add_subcommand("intensity", "empirical zero intensity per region");
    add_common(sc_intensity, true, false);
    sc_intensity->add_option("--window", window, "sampling window")->required();
    sc_intensity->add_option("--region", regions,
                             "region: disk:r, annulus:r0:r1, rect:x0:x1:y0:y1");
    sc_intensity->add_option("--trials", trials, "number of independent samples");
    auto* sc_certify = app.add_subcommand("certify", "Rouche zero-count certificate");
    add_common(sc_certify, true, true);
    sc_certify->add_option("--curve", curve, "curve: circle:cx:cy:r or rect:x0:x1:y0:y1")
        ->required();
    sc_certify->add_option("--safety", safety, "safety margin on the boundary floor");
    auto* sc_verify = app.add_subcommand("verify", "run invariant suites");
    sc_verify
        ->add_option("suites", suites,
                     "bases transforms covariance intensity dpp bounds certify oracle all")
        ->required();
    sc_verify->add_option("--workers", workers, "worker threads");
    sc_verify->add_option("--budget", budget, "Monte Carlo budget scale in (0,1]");
    std::string manifest_path;
    auto* sc_rerun = app.add_subcommand("rerun", "re-execute a manifest and compare digests");
    sc_rerun->add_option("manifest", manifest_path, "path to manifest.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (entropy)
            seed = static_cast<std::uint64_t>(
                std::chrono::steady_clock::now().time_since_epoch().count());

        if (sc_verify->parsed()) return cmd_verify(suites, workers, budget);
        if (sc_rerun->parsed()) return cmd_rerun(manifest_path);

        json args;
        args["out"] = out;
        args["params"] = params;
        args["seed"] = seed;
        args["stream"] = stream;
        args["truncation"] = truncation;
        args["workers"] = workers;
        if (!model.empty()) args["model"] = model;
        if (!transform.empty()) args["transform"] = transform;

        if (sc_sample->parsed()) return run_command("sample", args);
        if (sc_transform->parsed()) return run_command("transform", args);
        if (sc_zeros->parsed()) {
            args["window"] = window;
            args["grid"] = grid;
            args["trials"] = trials;
            args["method"] = method;
            args["emit-plot"] = emit_plot;
            return run_command("zeros", args);
        }
        if (sc_intensity->parsed()) {
            args["window"] = window;
            args["trials"] = trials;
            args["regions"] = regions;
            return run_command("intensity", args);
        }
        if (sc_certify->parsed()) {
            args["curve"] = curve;
            args["safety"] = safety;
            return run_command("certify", args);
        }
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const AccuracyError& e) {
        std::cerr << "accuracy refusal: " << e.what() << "\n";
        return kAccuracy;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFail;
    }
}
