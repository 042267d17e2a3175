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

#ifndef GAFKIT_VERIFY_HPP
#define GAFKIT_VERIFY_HPP

// Property suites behind `gafcli verify` and the acceptance harness: every
// check pins a measured quantity against an explicit tolerance.

#include <chrono>

#include "gafkit.hpp"

namespace gafkit::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline void check_le(SuiteResult& r, const std::string& name, double measured, double tol) {
    r.checks.push_back({name, measured <= tol, measured, tol});
}

inline cplx rand_point(std::uint64_t seed, std::uint64_t stream, std::uint64_t idx, double radius) {
    double u = uniform_double(seed, stream, 2 * idx);
    double v = uniform_double(seed, stream, 2 * idx + 1);
    return radius * std::sqrt(u) * cis(2.0 * pi * v);
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

inline double gram_deviation(const BasisFamily& fam, int kmax) {
    auto G = gram_matrix(fam, kmax);
    double dev = 0.0;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t k = 0; k < G.size(); ++k)
            dev = std::max(dev, std::abs(G[j][k] - (j == k ? 1.0 : 0.0)));
    return dev;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// bases: orthonormality and generating identities
// ---------------------------------------------------------------------------
inline SuiteResult run_bases(int /*workers*/ = 1) {
    detail::Timer timer;
    SuiteResult r{"bases", {}, 0.0};

    detail::check_le(r, "gram Charlier(1) kmax30", detail::gram_deviation(BasisFamily::charlier(1.0), 30), 1e-9);
    detail::check_le(r, "gram Charlier(5) kmax30", detail::gram_deviation(BasisFamily::charlier(5.0), 30), 1e-9);
    detail::check_le(r, "gram Meixner(0.5,0.4) kmax30",
                     detail::gram_deviation(BasisFamily::meixner(0.5, 0.4), 30), 1e-9);
    detail::check_le(r, "gram Meixner(-0.5,0.7) kmax30",
                     detail::gram_deviation(BasisFamily::meixner(-0.5, 0.7), 30), 1e-9);
    detail::check_le(r, "gram Krawtchouk(30,0.3)", detail::gram_deviation(BasisFamily::krawtchouk(30, 0.3), 30),
                     1e-9);
    detail::check_le(r, "gram Krawtchouk(8,0.5)", detail::gram_deviation(BasisFamily::krawtchouk(8, 0.5), 8),
                     1e-9);
    detail::check_le(r, "gram Hermite kmax30", detail::gram_deviation(BasisFamily::hermite(), 30), 1e-7);
    detail::check_le(r, "gram Laguerre(0) kmax30", detail::gram_deviation(BasisFamily::laguerre(0.0), 30), 1e-7);
    detail::check_le(r, "gram Laguerre(1.6) kmax30", detail::gram_deviation(BasisFamily::laguerre(1.6), 30),
                     1e-7);
    detail::check_le(r, "gram Laguerre(-0.6) kmax30", detail::gram_deviation(BasisFamily::laguerre(-0.6), 30),
                     1e-7);

    struct GenCase {
        const char* name;
        BasisFamily fam;
        double xscale;
        bool integer_x;
        bool signed_x;  // Hermite lives on R, the rest on R_+ or N
        double zradius;
        int kterms;
    };
    std::vector<GenCase> gens = {
        {"generating Hermite", BasisFamily::hermite(), 6.0, false, true, 0.6, 80},
        {"generating Charlier(1.5)", BasisFamily::charlier(1.5), 12.0, true, false, 0.6, 80},
        {"generating Laguerre(0.8)", BasisFamily::laguerre(0.8), 8.0, false, false, 0.6, 400},
        {"generating Meixner(0.4,0.5)", BasisFamily::meixner(0.4, 0.5), 10.0, true, false, 0.6, 400},
        {"generating Krawtchouk(8,0.35)", BasisFamily::krawtchouk(8, 0.35), 8.99, true, false, 1.5, 9},
    };
    for (std::size_t g = 0; g < gens.size(); ++g) {
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            std::uint64_t tt = static_cast<std::uint64_t>(t);
            double w = uniform_double(4040, 10 + g, tt);
            double x = gens[g].xscale * (gens[g].signed_x ? (w - 0.5) : w);
            if (gens[g].integer_x) x = std::floor(x);
            cplx z = detail::rand_point(4041, 10 + g, tt, gens[g].zradius);
            auto [sum, closed] = generating_check(gens[g].fam, x, z, gens[g].kterms);
            worst = std::max(worst, std::abs(sum - closed) / (1.0 + std::abs(closed)));
        }
        detail::check_le(r, gens[g].name, worst, 1e-10);
    }
    // the shifted Hermite identity behind the higher-order kernel
    {
        double worst = 0.0;
        for (int shift = 0; shift <= 3; ++shift)
            for (int t = 0; t < 25; ++t) {
                std::uint64_t tt = static_cast<std::uint64_t>(t);
                double x = 4.0 * (uniform_double(4042, static_cast<std::uint64_t>(shift), tt) - 0.5);
                cplx z = detail::rand_point(4043, static_cast<std::uint64_t>(shift), tt, 0.7);
                auto [sum, closed] = generating_check(BasisFamily::hermite(), x, z, 90, shift);
                worst = std::max(worst, std::abs(sum - closed) / (1.0 + std::abs(closed)));
            }
        detail::check_le(r, "generating Hermite shifted", worst, 1e-10);
    }

    r.seconds = timer.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// transforms: basis-image theorems (and the wavelet identity)
// ---------------------------------------------------------------------------
inline SuiteResult run_transforms(int /*workers*/ = 1) {
    detail::Timer timer;
    SuiteResult r{"transforms", {}, 0.0};

    auto handle = [](BasisFamily fam, int k) {
        return [fam, k](double x) { return cplx(eval_basis(fam, k, x), 0.0); };
    };
    auto vec = [](const BasisFamily& fam, int k, int xmax) {
        std::vector<cplx> v(static_cast<std::size_t>(xmax) + 1);
        for (int x = 0; x <= xmax; ++x)
            v[static_cast<std::size_t>(x)] = eval_basis(fam, k, static_cast<double>(x));
        return v;
    };
    // 50 evaluation points per (transform, k).  The image of f_k is one
    // Karhunen-Loeve component of the target process; it is measurable (and
    // its relative error well-posed) only where it carries a nonvanishing
    // share of the process scale sqrt(kernel(z,z)), so points below 1e-3 of
    // that scale are rejected.
    auto run_points = [&](std::uint64_t salt, double radius, auto&& scale, auto&& image,
                          auto&& value) {
        double worst = 0.0;
        int accepted = 0;
        std::uint64_t idx = 0;
        while (accepted < 50 && idx < 6000) {
            cplx z = detail::rand_point(5050, salt, idx++, radius);
            cplx want = image(z);
            if (std::abs(want) < 1e-3 * scale(z)) continue;
            ++accepted;
            worst = std::max(worst, std::abs(value(z) - want) / std::abs(want));
        }
        if (accepted < 50) return 1.0;  // the mode never became measurable: report loudly
        return worst;
    };
    auto planar_scale = [](cplx z) { return std::exp(0.5 * std::norm(z)); };
    auto disk_scale = [](double alpha) {
        return [alpha](cplx z) { return std::pow(1.0 - std::norm(z), -0.5 * (alpha + 1.0)); };
    };
    auto sphere_scale = [](int N) {
        return [N](cplx z) { return std::pow(1.0 + std::norm(z), 0.5 * N); };
    };
    // planar-family modes live on a ring of radius ~ sqrt(k); the window must
    // reach it for the rejection rule to see the mode at all
    auto planar_radius = [](long k) { return 1.7 * std::sqrt(static_cast<double>(k) + 2.0); };

    // Bargmann, orders 0..2 (t:planarL / t:planarLN)
    for (int N : {0, 1, 2}) {
        double worst = 0.0;
        for (int k = 0; k <= 30; ++k) {
            auto spec = TransformSpec::bargmann(N);
            auto fam = BasisFamily::hermite();
            if (k < N) {
                for (int t = 0; t < 5; ++t) {
                    cplx z = detail::rand_point(5051, static_cast<std::uint64_t>(100 * N + k),
                                                static_cast<std::uint64_t>(t), 1.8);
                    worst = std::max(worst, std::abs(bargmann_direct(handle(fam, k), z, N)));
                }
                continue;
            }
            worst = std::max(
                worst, run_points(static_cast<std::uint64_t>(100 * N + k), planar_radius(k),
                                  planar_scale,
                                  [&](cplx z) { return basis_image(spec, k, z); },
                                  [&](cplx z) { return bargmann_direct(handle(fam, k), z, N); }));
        }
        detail::check_le(r, "image Bargmann N=" + std::to_string(N), worst, 1e-8);
    }
    // Charlier STFT
    for (double a : {1.0, 2.5}) {
        auto spec = TransformSpec::charlier_stft(a);
        auto fam = BasisFamily::charlier(a);
        double worst = 0.0;
        for (int k = 0; k <= 30; ++k) {
            double R = std::sqrt(a) + planar_radius(k);
            // the window reaches x with z^x/sqrt(x!) mass: keep every site
            int xmax = static_cast<int>(R * R + 20.0 * R + 60.0);
            auto fk = vec(fam, k, xmax);
            worst = std::max(worst,
                             run_points(static_cast<std::uint64_t>(1000 + 10 * a + k), R,
                                        planar_scale,
                                        [&](cplx z) { return basis_image(spec, k, z); },
                                        [&](cplx z) { return charlier_stft(fk, z); }));
        }
        detail::check_le(r, "image Charlier STFT a=" + std::to_string(a).substr(0, 3), worst, 1e-8);
    }
    // Bergman / Daubechies-Paul
    for (double beta : {0.0, 0.75}) {
        auto spec = TransformSpec::bergman_dp(beta);
        auto fam = BasisFamily::laguerre(2.0 * beta);
        double worst = 0.0;
        for (int k = 0; k <= 30; ++k) {
            worst = std::max(
                worst, run_points(static_cast<std::uint64_t>(2000 + 100 * beta + k), 0.9,
                                  disk_scale(2.0 * beta),
                                  [&](cplx z) { return basis_image(spec, k, z); },
                                  [&](cplx z) { return bergman_dp(handle(fam, k), z, beta); }));
        }
        detail::check_le(r, "image Bergman beta=" + std::to_string(beta).substr(0, 4), worst, 1e-8);
    }
    // Meixner STFT
    {
        auto spec = TransformSpec::meixner_stft(0.4, 0.5);
        auto fam = BasisFamily::meixner(0.4, 0.5);
        double worst = 0.0;
        for (int k = 0; k <= 30; ++k) {
            auto fk = vec(fam, k, 600);
            worst = std::max(worst, run_points(static_cast<std::uint64_t>(3000 + k), 0.9,
                                               disk_scale(0.4),
                                               [&](cplx z) { return basis_image(spec, k, z); },
                                               [&](cplx z) { return meixner_stft(fk, z, 0.4); }));
        }
        detail::check_le(r, "image Meixner STFT", worst, 1e-8);
    }
    // Krawtchouk STFT
    {
        int N = 30;
        double p = 0.35;
        auto spec = TransformSpec::krawtchouk_stft(N, p);
        auto fam = BasisFamily::krawtchouk(N, p);
        double worst = 0.0;
        for (int k = 0; k <= 30; ++k) {
            auto fk = vec(fam, k, N);
            worst = std::max(worst, run_points(static_cast<std::uint64_t>(4000 + k), 3.0,
                                               sphere_scale(N),
                                               [&](cplx z) { return basis_image(spec, k, z); },
                                               [&](cplx z) { return krawtchouk_stft(fk, z, N); }));
        }
        detail::check_le(r, "image Krawtchouk STFT", worst, 1e-8);
    }
    // analytic projection over signed indices
    for (int N : {0, 2}) {
        auto spec = TransformSpec::analytic_projection(N);
        double worst = 0.0;
        for (long k = -30; k <= 30; k += 3) {
            auto sig = [k](double theta) { return fourier_basis(k, theta); };
            if (k < N) {
                for (int t = 0; t < 5; ++t) {
                    cplx z = detail::rand_point(5052, static_cast<std::uint64_t>(900 + k + 60),
                                                static_cast<std::uint64_t>(t), 0.7);
                    worst = std::max(worst, std::abs(analytic_projection_direct(sig, z, N, 512)));
                }
                continue;
            }
            worst = std::max(
                worst,
                run_points(static_cast<std::uint64_t>(5000 + 100 * N + k), 0.9,
                           disk_scale(0.0),
                           [&](cplx z) { return basis_image(spec, k, z); },
                           [&](cplx z) { return analytic_projection_direct(sig, z, N, 768); }));
        }
        detail::check_le(r, "image analytic projection N=" + std::to_string(N), worst, 1e-8);
    }
    // the wavelet rewrite agrees with the direct inner product
    {
        double worst = 0.0;
        for (double beta : {0.5, 1.0}) {
            auto fhat = [](double x) { return cplx(std::exp(-0.7 * x) * x, 0.3 * std::exp(-0.9 * x)); };
            for (int t = 0; t < 10; ++t) {
                double u = 4.0 * (uniform_double(6001, static_cast<std::uint64_t>(10 * beta),
                                                 static_cast<std::uint64_t>(t)) -
                                  0.5);
                double s = 0.5 + 1.5 * uniform_double(6002, static_cast<std::uint64_t>(10 * beta),
                                                      static_cast<std::uint64_t>(t));
                cplx a = dp_wavelet(fhat, u, s, beta);
                cplx b = dp_wavelet_direct(fhat, u, s, beta);
                worst = std::max(worst, std::abs(a - b) / (1e-30 + std::abs(b)));
            }
        }
        detail::check_le(r, "wavelet rewrite vs direct", worst, 1e-7);
    }

    r.seconds = timer.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// covariance: normalized empirical second moments against the kernels
// ---------------------------------------------------------------------------
inline SuiteResult run_covariance(int workers = 1, long trials = 10000) {
    detail::Timer timer;
    SuiteResult r{"covariance", {}, 0.0};

    detail::check_le(r, "covNew at (1,1) equals 2e",
                     std::abs(covariance(GafModel::planar_higher(1), 1.0, 1.0) - 2.0 * std::exp(1.0)),
                     1e-12);

    struct Case {
        const char* name;
        GafModel model;
        double radius;
        long n;
    };
    std::vector<Case> cases = {{"planar", GafModel::planar(1.0), 1.0, 40},
                               {"planar-higher N=1", GafModel::planar_higher(1), 1.0, 40},
                               {"hyperbolic a=0.5", GafModel::hyperbolic(0.5), 0.75, 110},
                               {"spherical N=5", GafModel::spherical(5), 1.0, 5}};
    double tol = 4.0 / std::sqrt(static_cast<double>(trials));
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        const auto& c = cases[ci];
        std::vector<std::pair<cplx, cplx>> pairs;
        for (int i = 0; i < 5; ++i)
            pairs.push_back({detail::rand_point(7000, ci, static_cast<std::uint64_t>(2 * i), c.radius),
                             detail::rand_point(7000, ci, static_cast<std::uint64_t>(2 * i + 1), c.radius)});
        // per-trial slots keep the reduction order fixed across schedules
        std::vector<std::vector<cplx>> vals(pairs.size(), std::vector<cplx>(static_cast<std::size_t>(trials)));
        parallel_trials(trials, workers, [&](long t) {
            auto s = sample_gaf(c.model, c.n, 7100 + static_cast<std::uint64_t>(ci),
                                static_cast<std::uint64_t>(t));
            for (std::size_t pi = 0; pi < pairs.size(); ++pi)
                vals[pi][static_cast<std::size_t>(t)] =
                    eval_gaf(s, pairs[pi].first) * std::conj(eval_gaf(s, pairs[pi].second));
        });
        double worst = 0.0;
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            cplx mean = 0.0;
            for (long t = 0; t < trials; ++t) mean += vals[pi][static_cast<std::size_t>(t)];
            mean /= static_cast<double>(trials);
            cplx want = covariance(c.model, pairs[pi].first, pairs[pi].second);
            double scale = std::sqrt(covariance(c.model, pairs[pi].first, pairs[pi].first).real() *
                                     covariance(c.model, pairs[pi].second, pairs[pi].second).real());
            worst = std::max(worst, std::abs(mean - want) / scale);
        }
        detail::check_le(r, std::string("empirical covariance ") + c.name, worst, tol);
    }

    r.seconds = timer.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// intensity: mean zero counts against closed forms
// ---------------------------------------------------------------------------
inline SuiteResult run_intensity(int workers = 1, long trials = 500) {
    detail::Timer timer;
    SuiteResult r{"intensity", {}, 0.0};

    {  // planar window [-3,3]^2
        GafModel model = GafModel::planar(1.0);
        Rect window{-3.0, 3.0, -3.0, 3.0};
        auto sampler = gaf_zero_sampler(model, window, 0, 9001);
        auto rep = empirical_intensity(sampler, model,
                                       {RegionSpec::rectangle(window)}, trials, workers);
        double dev = std::abs(rep.bins[0].observed - 36.0 / pi);
        detail::check_le(r, "planar [-3,3]^2 mean (3 s.e.)", dev, 3.0 * rep.bins[0].stderr_mean);
    }
    {  // hyperbolic alpha = 0, centered disk r = 0.5
        GafModel model = GafModel::hyperbolic(0.0);
        Rect window{-0.53, 0.53, -0.53, 0.53};
        auto sampler = gaf_zero_sampler(model, window, 0, 9002);
        auto rep = empirical_intensity(sampler, model, {RegionSpec::centered_disk(0.5)}, trials, workers);
        double dev = std::abs(rep.bins[0].observed - 1.0 / 3.0);
        detail::check_le(r, "hyperbolic disk r=0.5 mean (3 s.e.)", dev, 3.0 * rep.bins[0].stderr_mean);
    }
    for (int N : {8, 64}) {  // spherical: exactly N zeros every trial
        long bad = 0;
        std::vector<long> counts(static_cast<std::size_t>(trials), 0);
        parallel_trials(trials, workers, [&](long t) {
            auto s = sample_gaf(GafModel::spherical(N), N, 9003 + static_cast<std::uint64_t>(N),
                                static_cast<std::uint64_t>(t));
            counts[static_cast<std::size_t>(t)] =
                static_cast<long>(poly_roots_oracle(monomial_coeffs(s)).size());
        });
        for (long t = 0; t < trials; ++t)
            if (counts[static_cast<std::size_t>(t)] != N) ++bad;
        detail::check_le(r, "spherical N=" + std::to_string(N) + " total zero count",
                         static_cast<double>(bad), 0.0);
    }
    {  // local extrema of the Bargmann transform on an annulus
        auto rep = extrema_experiment(trials, 0, {RegionSpec::annulus(0.5, 1.5)}, 9004, workers);
        double dev = std::abs(rep.bins[0].observed - rep.bins[0].predicted);
        detail::check_le(r, "extrema annulus [0.5,1.5] mean (3 s.e.)", dev, 3.0 * rep.bins[0].stderr_mean);
    }

    r.seconds = timer.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// dpp: two-point determinant prediction and ordinal repulsion
// ---------------------------------------------------------------------------
inline SuiteResult run_dpp(int workers = 1, long trials = 300000) {
    detail::Timer timer;
    SuiteResult r{"dpp", {}, 0.0};
    const double bin = 0.1;
    struct Pair {
        cplx z, w;
        const char* name;
    };
    std::vector<Pair> fars = {{cplx(0.0, 0.0), cplx(0.40, 0.0), "(0, 0.40)"},
                              {cplx(0.10, 0.10), cplx(-0.30, 0.10), "(0.1+0.1i, -0.3+0.1i)"},
                              {cplx(0.0, 0.25), cplx(0.0, -0.25), "(0.25i, -0.25i)"},
                              {cplx(-0.35, 0.0), cplx(0.10, 0.0), "(-0.35, 0.1)"}};
    Pair near{cplx(-0.105, 0.0), cplx(0.105, 0.0), "(-0.105, 0.105)"};

    double area = pi * bin * bin;
    double near_obs = 0.0;
    double far_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= fars.size(); ++i) {
        const Pair& p = (i < fars.size()) ? fars[i] : near;
        auto chk = dpp_two_point_check(p.z, p.w, trials, bin, 0, 9100 + i, workers);
        double floor_se = std::sqrt(chk.predicted / (static_cast<double>(trials) * area * area));
        detail::check_le(r, std::string("rho2 ") + p.name + " (4 s.e.)",
                         std::abs(chk.observed - chk.predicted), 4.0 * (chk.stderr_obs + floor_se));
        if (i < fars.size())
            far_min = std::min(far_min, chk.observed);
        else
            near_obs = chk.observed;
    }
    r.checks.push_back({"ordinal repulsion: near below every far pair", near_obs < far_min,
                        near_obs, far_min});

    r.seconds = timer.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// bounds: exact tails, concentration, Lipschitz transport
// ---------------------------------------------------------------------------
inline SuiteResult run_bounds(int workers = 1, long trials = 10000) {
    detail::Timer timer;
    SuiteResult r{"bounds", {}, 0.0};

    {  // exact theta tail below 1/n for n = 1..10^4 (deterministic)
        long nmax = 10000;
        double tail = theta_tail(nmax);
        double worst = 0.0;  // max of n * tail(n) over the range; must stay below 1
        for (long n = nmax; n >= 1; --n) {
            worst = std::max(worst, tail * static_cast<double>(n));
            tail += 1.0 / (1.0 + static_cast<double>(n) * n);  // tail(n-1)
        }
        detail::check_le(r, "n * theta-tail(n) over n=1..10^4", worst, 1.0);
    }
    {  // empirical exceedance against the concentration bound
        double worst_excess = 0.0;
        for (long n : {10L, 50L, 100L}) {
            for (double eps : {0.3, 0.5, 1.0}) {
                long m = 100 * n;
                double freq = empirical_tail_exceedance(n, m, eps, trials,
                                                        11000 + static_cast<std::uint64_t>(n), workers);
                double bound = concentration_bound(n, eps);
                double se = std::sqrt(std::max(freq * (1.0 - freq), 1e-12) /
                                      static_cast<double>(trials));
                worst_excess = std::max(worst_excess, freq - (bound + 3.0 * se));
            }
        }
        detail::check_le(r, "exceedance - (bound + 3 s.e.) on the grid", worst_excess, 0.0);
    }
    {  // Lipschitz transport for F = min(1, theta-norm)
        double worst = 0.0;
        for (long n : {10L, 50L, 100L}) {
            long m = 100 * n;
            const long t_lip = 2000;
            std::vector<double> diff(static_cast<std::size_t>(t_lip));
            parallel_trials(t_lip, workers, [&](long t) {
                double prefix = 0.0, full = 0.0;
                for (long k = 0; k <= m; ++k) {
                    double term = std::norm(complex_gaussian(12000, static_cast<std::uint64_t>(t),
                                                             static_cast<std::uint64_t>(k))) /
                                  (1.0 + static_cast<double>(k) * k);
                    full += term;
                    if (k <= n) prefix += term;
                }
                diff[static_cast<std::size_t>(t)] =
                    std::min(1.0, std::sqrt(prefix)) - std::min(1.0, std::sqrt(full));
            });
            double mean = 0.0;
            for (double d : diff) mean += d;
            mean /= static_cast<double>(t_lip);
            worst = std::max(worst, std::abs(mean) * std::sqrt(static_cast<double>(n)));
        }
        detail::check_le(r, "sqrt(n) |E F(xi^n) - E F(xi^100n)| for F=min(1,theta-norm)", worst, 1.0);
    }
    {  // monotonicity of the closed-form bounds
        double worst = 0.0;
        double prevw = 1e18, prevc = 1e18;
        for (long n = 1; n <= 4096; n *= 2) {
            auto wb = wasserstein2_bound(n);
            double cb = concentration_bound(n, 0.4);
            if (wb.bound > prevw || cb > prevc) worst = 1.0;
            prevw = wb.bound;
            prevc = cb;
        }
        detail::check_le(r, "bound monotonicity in n", worst, 0.0);
    }

    r.seconds = timer.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// certify: Rouche certificates against recounts at 4n
// ---------------------------------------------------------------------------
inline SuiteResult run_certify(int workers = 1, long target = 1000) {
    detail::Timer timer;
    SuiteResult r{"certify", {}, 0.0};

    const long n = 300;
    const long attempts_cap = 4 * target;
    std::vector<int> status(static_cast<std::size_t>(attempts_cap), -1);  // -1 skip, 0 agree, 1 disagree
    parallel_trials(attempts_cap, workers, [&](long t) {
        double radius = 0.85 + 0.15 * static_cast<double>(t % 3);
        auto s = sample_gaf(GafModel::planar(1.0), n, 13000, static_cast<std::uint64_t>(t));
        RoucheCertificate cert;
        try {
            cert = rouche_certify(s, Curve::circle(cplx(0.0), radius), n, 0.05);
        } catch (const std::exception&) {
            return;
        }
        if (cert.vacuous || cert.prob_bound < 0.999) return;
        auto s4 = sample_gaf(GafModel::planar(1.0), 4 * n, 13000, static_cast<std::uint64_t>(t));
        long recount = 0;
        try {
            recount = count_zeros_inside(s4, Curve::circle(cplx(0.0), radius));
        } catch (const std::exception&) {
            status[static_cast<std::size_t>(t)] = 1;  // unresolved recount counts against us
            return;
        }
        status[static_cast<std::size_t>(t)] = (recount == cert.count) ? 0 : 1;
    });

    long certified = 0, disagreed = 0;
    for (long t = 0; t < attempts_cap && certified < target; ++t) {
        if (status[static_cast<std::size_t>(t)] < 0) continue;
        ++certified;
        disagreed += status[static_cast<std::size_t>(t)];
    }
    r.checks.push_back({"certified instances gathered", certified >= target,
                        static_cast<double>(certified), static_cast<double>(target)});
    double rate = certified > 0 ? static_cast<double>(disagreed) / static_cast<double>(certified) : 1.0;
    detail::check_le(r, "disagreement rate with the 4n recount", rate, 0.005);

    r.seconds = timer.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// oracle: subdivision zeros versus polynomial roots
// ---------------------------------------------------------------------------
inline SuiteResult run_oracle(int workers = 1, long samples = 50) {
    detail::Timer timer;
    SuiteResult r{"oracle", {}, 0.0};

    Rect window{-2.0, 2.0, -2.0, 2.0};
    std::vector<double> dists(static_cast<std::size_t>(samples), 0.0);
    std::vector<int> count_mismatch(static_cast<std::size_t>(samples), 0);
    parallel_trials(samples, workers, [&](long t) {
        auto s = sample_gaf(GafModel::planar(1.0), 150, 14000, static_cast<std::uint64_t>(t));
        auto sub = locate_zeros(s, window, 48);
        auto orc = oracle_zeros(s, window);
        if (sub.points.size() != orc.points.size()) {
            count_mismatch[static_cast<std::size_t>(t)] = 1;
            dists[static_cast<std::size_t>(t)] = 1.0;
            return;
        }
        double worst = 0.0;
        for (const auto& a : sub.points) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& b : orc.points) best = std::min(best, std::abs(a.point - b.point));
            worst = std::max(worst, best);
        }
        for (const auto& b : orc.points) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& a : sub.points) best = std::min(best, std::abs(a.point - b.point));
            worst = std::max(worst, best);
        }
        dists[static_cast<std::size_t>(t)] = worst;
    });
    long mism = 0;
    double worst = 0.0;
    for (long t = 0; t < samples; ++t) {
        mism += count_mismatch[static_cast<std::size_t>(t)];
        worst = std::max(worst, dists[static_cast<std::size_t>(t)]);
    }
    detail::check_le(r, "zero-set count mismatches", static_cast<double>(mism), 0.0);
    detail::check_le(r, "Hausdorff distance, subdivision vs oracle", worst, 1e-9);

    r.seconds = timer.seconds();
    return r;
}

inline std::vector<std::string> suite_names() {
    return {"bases", "transforms", "covariance", "intensity", "dpp", "bounds", "certify", "oracle"};
}

/// Budget in [0,1] scales the Monte Carlo sizes for quick runs.
inline SuiteResult run_suite(const std::string& name, int workers, double budget = 1.0) {
    auto scaled = [&](long full, long floor_val) {
        return std::max(floor_val, static_cast<long>(static_cast<double>(full) * budget));
    };
    if (name == "bases") return run_bases(workers);
    if (name == "transforms") return run_transforms(workers);
    if (name == "covariance") return run_covariance(workers, scaled(10000, 400));
    if (name == "intensity") return run_intensity(workers, scaled(500, 50));
    if (name == "dpp") return run_dpp(workers, scaled(300000, 5000));
    if (name == "bounds") return run_bounds(workers, scaled(10000, 500));
    if (name == "certify") return run_certify(workers, scaled(1000, 20));
    if (name == "oracle") return run_oracle(workers, scaled(50, 5));
    throw DomainError("unknown verify suite: " + name);
}

}  // namespace gafkit::verify

#endif
