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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gafkit/gaf.hpp>
#include <gafkit/transforms.hpp>

using namespace gafkit;

namespace {

std::function<cplx(double)> basis_handle(BasisFamily fam, int k) {
    return [fam, k](double x) { return cplx(eval_basis(fam, k, x), 0.0); };
}

std::vector<cplx> basis_vector(const BasisFamily& fam, int k, int xmax) {
    std::vector<cplx> v(static_cast<std::size_t>(xmax) + 1);
    for (int x = 0; x <= xmax; ++x)
        v[static_cast<std::size_t>(x)] = eval_basis(fam, k, static_cast<double>(x));
    return v;
}

cplx rand_disk(std::uint64_t stream, std::uint64_t idx, double radius) {
    double u = uniform_double(1234, stream, 2 * idx);
    double v = uniform_double(1234, stream, 2 * idx + 1);
    return radius * std::sqrt(u) * cis(2.0 * pi * v);
}

double rel_err(cplx got, cplx want) { return std::abs(got - want) / (1e-30 + std::abs(want)); }

}  // namespace

TEST_CASE("Bargmann maps Hermite functions to Weyl monomials") {
    auto fam = BasisFamily::hermite();
    for (int N : {0, 1, 2}) {
        auto spec = TransformSpec::bargmann(N);
        for (int k : {0, 1, 3, 7, 12}) {
            for (int t = 0; t < 5; ++t) {
                cplx z = rand_disk(10 * static_cast<std::uint64_t>(N) + static_cast<std::uint64_t>(k),
                                   static_cast<std::uint64_t>(t), 2.0);
                cplx got = bargmann_direct(basis_handle(fam, k), z, N);
                cplx want = basis_image(spec, k, z);
                if (k < N)
                    CHECK(std::abs(got) < 1e-10);
                else
                    CHECK(rel_err(got, want) < 1e-9);
            }
        }
    }
    // pinned: k = 2 at a fixed point, N = 0
    cplx z(0.5, 0.3);
    cplx want = z * z / std::sqrt(2.0);
    CHECK(rel_err(bargmann_direct(basis_handle(fam, 2), z, 0), want) < 1e-10);
}

TEST_CASE("derivative identity: d/dz Bargmann = first higher order") {
    auto f = [](double x) { return cplx(std::exp(-0.4 * (x - 0.7) * (x - 0.7)), 0.0); };
    double h = 1e-4;
    for (cplx z : {cplx(0.3, 0.2), cplx(-0.8, 0.5)}) {
        cplx fd = (bargmann_direct(f, z + h, 0) - bargmann_direct(f, z - h, 0)) / (2.0 * h);
        cplx d1 = bargmann_direct(f, z, 1);
        CHECK(std::abs(fd - d1) < 1e-6 * (1.0 + std::abs(d1)));
    }
}

TEST_CASE("Charlier STFT: canonical and Charlier basis images") {
    std::vector<cplx> delta0 = {cplx(1.0)};
    std::vector<cplx> delta1 = {cplx(0.0), cplx(1.0)};
    for (int t = 0; t < 5; ++t) {
        cplx z = rand_disk(3, static_cast<std::uint64_t>(t), 2.0);
        CHECK(rel_err(charlier_stft(delta0, z), cplx(1.0)) < 1e-14);
        CHECK(rel_err(charlier_stft(delta1, z), z) < 1e-14);
    }
    double a = 2.0;
    auto fam = BasisFamily::charlier(a);
    auto spec = TransformSpec::charlier_stft(a);
    for (int k : {0, 1, 4, 9}) {
        auto fk = basis_vector(fam, k, 220);
        for (int t = 0; t < 6; ++t) {
            cplx z = rand_disk(40 + static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(t), 2.0);
            if (std::abs(z - std::sqrt(a)) < 0.2) continue;  // stay off the image zero
            CHECK(rel_err(charlier_stft(fk, z), basis_image(spec, k, z)) < 1e-10);
        }
    }
}

TEST_CASE("Bergman transform: Laguerre spectral basis to hyperbolic monomials") {
    for (double beta : {0.0, 1.0, 0.3}) {
        auto fam = BasisFamily::laguerre(2.0 * beta);
        auto spec = TransformSpec::bergman_dp(beta);
        for (int k : {0, 1, 3, 8}) {
            for (int t = 0; t < 4; ++t) {
                cplx z = rand_disk(60 + static_cast<std::uint64_t>(k),
                                   static_cast<std::uint64_t>(t), 0.7);
                cplx got = bergman_dp(basis_handle(fam, k), z, beta);
                CHECK(rel_err(got, basis_image(spec, k, z)) < 1e-8);
            }
        }
    }
}

TEST_CASE("Bergman at the center equals the plain weighted integral") {
    CHECK(std::abs(dp_phi(cplx(0.0, 0.5))) < 1e-15);  // phi maps i/2 to 0
    double beta = 0.8;
    auto fhat = [](double x) { return cplx(std::exp(-0.6 * x) * (1.0 + x), 0.0); };
    // integral of conj(fhat) x^beta e^{-x/2} dx via a reference rule
    auto rule = gauss_laguerre(200, beta);
    cplx want = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
        want += rule.w[i] * std::conj(fhat(rule.x[i])) * std::exp(0.5 * rule.x[i]);
    CHECK(rel_err(bergman_dp(fhat, cplx(0.0), beta), want) < 1e-9);
}

TEST_CASE("Daubechies-Paul wavelet: Bergman route equals the direct inner product") {
    for (double beta : {1.0, 0.5, 2.0}) {
        auto fhat = [](double x) {
            return cplx(std::exp(-0.7 * x) * x, 0.3 * std::exp(-0.9 * x));
        };
        for (int t = 0; t < 10; ++t) {
            double u = 4.0 * (uniform_double(91, static_cast<std::uint64_t>(t), 0) - 0.5);
            double s = 0.5 + 1.5 * uniform_double(91, static_cast<std::uint64_t>(t), 1);
            cplx a = dp_wavelet(fhat, u, s, beta);
            cplx b = dp_wavelet_direct(fhat, u, s, beta);
            CHECK(rel_err(a, b) < 1e-7);
        }
    }
}

TEST_CASE("Meixner STFT: Meixner basis images") {
    double alpha = 0.4, c = 0.5;
    auto fam = BasisFamily::meixner(alpha, c);
    auto spec = TransformSpec::meixner_stft(alpha, c);
    for (int k : {0, 1, 2, 5, 9}) {
        auto fk = basis_vector(fam, k, 320);
        for (int t = 0; t < 6; ++t) {
            cplx z = rand_disk(100 + static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(t), 0.8);
            if (std::abs(z - std::sqrt(c)) < 0.15) continue;
            CHECK(rel_err(meixner_stft(fk, z, alpha), basis_image(spec, k, z)) < 1e-9);
        }
    }
    CHECK_THROWS_AS(meixner_stft({cplx(1.0)}, cplx(1.1, 0.0), alpha), DomainError);
}

TEST_CASE("Krawtchouk STFT: Krawtchouk basis images") {
    int N = 12;
    double p = 0.35;
    auto fam = BasisFamily::krawtchouk(N, p);
    auto spec = TransformSpec::krawtchouk_stft(N, p);
    double q = std::sqrt((1.0 - p) / p);
    for (int k : {0, 1, 5, 12}) {
        auto fk = basis_vector(fam, k, N);
        for (int t = 0; t < 6; ++t) {
            cplx z = rand_disk(140 + static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(t), 1.5);
            // the image vanishes to high order at 1/q and -q; relative error
            // is ill-posed where it has collapsed many orders below scale
            if (std::abs(z - 1.0 / q) < 0.3 || std::abs(z + q) < 0.3) continue;
            cplx want = basis_image(spec, k, z);
            if (std::abs(want) < 1e-4) continue;
            CHECK(rel_err(krawtchouk_stft(fk, z, N), want) < 1e-9);
        }
    }
}

TEST_CASE("analytic projection: Fourier modes to shifted monomials") {
    int N = 2;
    auto spec = TransformSpec::analytic_projection(N);
    for (long k : {-3L, 0L, 1L, 2L, 5L}) {
        auto signal = [k](double theta) { return fourier_basis(k, theta); };
        for (int t = 0; t < 5; ++t) {
            cplx z = rand_disk(170, static_cast<std::uint64_t>(10 * (k + 5) + t), 0.7);
            cplx got = analytic_projection_direct(signal, z, N, 256);
            cplx want = basis_image(spec, k, z);
            if (k < N)
                CHECK(std::abs(got) < 1e-12);
            else
                CHECK(rel_err(got, want) < 1e-11);
        }
    }
}

TEST_CASE("analyze recovers basis coefficients") {
    // Hermite: signal = f_5 -> e_5; gaussian ground state -> e_0
    auto fam = BasisFamily::hermite();
    auto res = analyze(basis_handle(fam, 5), fam, 10);
    for (int k = 0; k <= 10; ++k)
        CHECK(std::abs(res.coeffs[static_cast<std::size_t>(k)] - (k == 5 ? 1.0 : 0.0)) < 1e-10);
    CHECK(std::abs(res.parseval_defect()) < 1e-9);

    auto gauss = [](double x) { return cplx(std::exp(-0.5 * x * x) * std::pow(pi, -0.25), 0.0); };
    auto res0 = analyze(gauss, fam, 6);
    CHECK(std::abs(res0.coeffs[0] - 1.0) < 1e-11);
    for (int k = 1; k <= 6; ++k) CHECK(std::abs(res0.coeffs[static_cast<std::size_t>(k)]) < 1e-11);

    // mixed discrete signal: f_2 + i f_7 in the Charlier basis
    auto cfam = BasisFamily::charlier(1.5);
    auto f2 = basis_vector(cfam, 2, 200);
    auto f7 = basis_vector(cfam, 7, 200);
    std::vector<cplx> sig(f2.size());
    for (std::size_t x = 0; x < sig.size(); ++x) sig[x] = f2[x] + cplx(0.0, 1.0) * f7[x];
    auto resc = analyze(sig, cfam, 9);
    for (int k = 0; k <= 9; ++k) {
        cplx want = (k == 2) ? cplx(1.0) : (k == 7 ? cplx(0.0, -1.0) : cplx(0.0));
        // <f, f_k> conjugates the signal, so the i coefficient lands as -i
        CHECK(std::abs(resc.coeffs[static_cast<std::size_t>(k)] - want) < 1e-10);
    }
    CHECK(resc.parseval_defect() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("two-path equality: coefficient route equals the direct route") {
    // Bargmann on a random Hermite packet
    auto fam = BasisFamily::hermite();
    std::vector<cplx> amps(10);
    for (std::size_t j = 0; j < amps.size(); ++j) amps[j] = complex_gaussian(55, 0, j);
    auto signal = [&](double x) {
        auto vals = eval_basis_all(fam, 9, x);
        cplx s = 0.0;
        for (std::size_t j = 0; j < amps.size(); ++j) s += amps[j] * vals[j];
        return s;
    };
    for (int N : {0, 1}) {
        auto spec = TransformSpec::bargmann(N);
        auto res = analyze(signal, fam, 24);
        auto series = transform_coeffs(spec, res.coeffs);
        for (int t = 0; t < 8; ++t) {
            cplx z = rand_disk(200 + static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(t), 1.5);
            cplx coeff_path = eval_series(series, z);
            cplx direct = bargmann_direct(signal, z, N);
            CHECK(rel_err(direct, coeff_path) < 1e-7);
        }
    }

    // Charlier STFT on a random decaying sequence
    double a = 1.5;
    auto cfam = BasisFamily::charlier(a);
    std::vector<cplx> sig(60);
    for (std::size_t x = 0; x < sig.size(); ++x)
        sig[x] = complex_gaussian(56, 0, x) * std::exp(-0.15 * static_cast<double>(x));
    auto cres = analyze(sig, cfam, 140);
    auto cspec = TransformSpec::charlier_stft(a);
    auto cseries = transform_coeffs(cspec, cres.coeffs);
    for (int t = 0; t < 8; ++t) {
        cplx z = rand_disk(210, static_cast<std::uint64_t>(t), 1.8);
        CHECK(rel_err(charlier_stft(sig, z), eval_composed(cspec, cseries, z)) < 1e-7);
    }

    // Meixner STFT
    double alpha = 0.4, c = 0.45;
    auto mfam = BasisFamily::meixner(alpha, c);
    std::vector<cplx> msig(50);
    for (std::size_t x = 0; x < msig.size(); ++x)
        msig[x] = complex_gaussian(57, 0, x) * std::exp(-0.2 * static_cast<double>(x));
    auto mres = analyze(msig, mfam, 160);
    auto mspec = TransformSpec::meixner_stft(alpha, c);
    auto mseries = transform_coeffs(mspec, mres.coeffs);
    for (int t = 0; t < 8; ++t) {
        cplx z = rand_disk(220, static_cast<std::uint64_t>(t), 0.75);
        CHECK(rel_err(meixner_stft(msig, z, alpha), eval_composed(mspec, mseries, z)) < 1e-7);
    }

    // Krawtchouk STFT
    int N = 16;
    double p = 0.4;
    auto kfam = BasisFamily::krawtchouk(N, p);
    std::vector<cplx> ksig(static_cast<std::size_t>(N) + 1);
    for (std::size_t x = 0; x < ksig.size(); ++x) ksig[x] = complex_gaussian(58, 0, x);
    auto kres = analyze(ksig, kfam, N);
    auto kspec = TransformSpec::krawtchouk_stft(N, p);
    auto kseries = transform_coeffs(kspec, kres.coeffs);
    for (int t = 0; t < 8; ++t) {
        cplx z = rand_disk(230, static_cast<std::uint64_t>(t), 1.4);
        CHECK(rel_err(krawtchouk_stft(ksig, z, N), eval_composed(kspec, kseries, z)) < 1e-8);
    }

    // Bergman / Daubechies-Paul on a random Laguerre packet
    double beta = 0.6;
    auto lfam = BasisFamily::laguerre(2.0 * beta);
    std::vector<cplx> lamps(8);
    for (std::size_t j = 0; j < lamps.size(); ++j) lamps[j] = complex_gaussian(59, 0, j);
    auto fhat = [&](double x) {
        auto vals = eval_basis_all(lfam, 7, x);
        cplx s = 0.0;
        for (std::size_t j = 0; j < lamps.size(); ++j) s += lamps[j] * vals[j];
        return s;
    };
    auto lres = analyze(fhat, lfam, 20);
    auto lseries = transform_coeffs(TransformSpec::bergman_dp(beta), lres.coeffs);
    for (int t = 0; t < 8; ++t) {
        cplx z = rand_disk(240, static_cast<std::uint64_t>(t), 0.65);
        CHECK(rel_err(bergman_dp(fhat, z, beta), eval_series(lseries, z)) < 1e-7);
    }

    // analytic projection on a trigonometric packet
    int Np = 1;
    auto pspec = TransformSpec::analytic_projection(Np);
    std::vector<cplx> famps(9);
    for (std::size_t j = 0; j < famps.size(); ++j) famps[j] = complex_gaussian(60, 0, j);
    auto psig = [&](double theta) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < famps.size(); ++i)
            s += famps[i] * fourier_basis(ThetaWeights::signed_index(i), theta);
        return s;
    };
    auto pres = analyze_fourier(psig, 6);
    auto pseries = transform_coeffs(pspec, pres.coeffs);
    for (int t = 0; t < 8; ++t) {
        cplx z = rand_disk(250, static_cast<std::uint64_t>(t), 0.7);
        CHECK(rel_err(analytic_projection_direct(psig, z, Np, 512), eval_series(pseries, z)) < 1e-9);
        CHECK(rel_err(analytic_projection(pres.coeffs, z, Np), eval_series(pseries, z)) < 1e-12);
    }
}

TEST_CASE("the transform is conjugate-linear in the signal") {
    std::vector<cplx> sig = {cplx(0.3, 0.1), cplx(-0.4, 0.7), cplx(0.2, -0.2)};
    cplx alpha(0.6, -1.1);
    std::vector<cplx> scaled(sig.size());
    for (std::size_t i = 0; i < sig.size(); ++i) scaled[i] = alpha * sig[i];
    for (int t = 0; t < 6; ++t) {
        cplx z = rand_disk(260, static_cast<std::uint64_t>(t), 1.2);
        CHECK(std::abs(charlier_stft(scaled, z) - std::conj(alpha) * charlier_stft(sig, z)) < 1e-13);
        cplx z2 = 0.6 * z;
        CHECK(std::abs(meixner_stft(scaled, z2, 0.3) -
                       std::conj(alpha) * meixner_stft(sig, z2, 0.3)) < 1e-13);
    }
}

TEST_CASE("transform_coeffs: unit vectors land on dictionary functions, linearly") {
    auto spec = TransformSpec::meixner_stft(0.2, 0.5);
    std::vector<cplx> e3(6, 0.0);
    e3[3] = 1.0;
    auto s3 = transform_coeffs(spec, e3);
    for (int t = 0; t < 5; ++t) {
        cplx z = rand_disk(270, static_cast<std::uint64_t>(t), 0.8);
        CHECK(std::abs(eval_series(s3, z) - psi(spec.dict(), 3, z)) < 1e-13);
    }
    std::vector<cplx> u(6), v(6), w(6);
    for (std::size_t i = 0; i < 6; ++i) {
        u[i] = complex_gaussian(61, 0, i);
        v[i] = complex_gaussian(61, 1, i);
    }
    cplx au(0.3, 0.4), bv(-1.2, 0.1);
    for (std::size_t i = 0; i < 6; ++i) w[i] = au * u[i] + bv * v[i];
    auto su = transform_coeffs(spec, u), sv = transform_coeffs(spec, v),
         sw = transform_coeffs(spec, w);
    for (int t = 0; t < 10; ++t) {
        cplx z = rand_disk(280, static_cast<std::uint64_t>(t), 0.8);
        CHECK(std::abs(eval_series(sw, z) - au * eval_series(su, z) - bv * eval_series(sv, z)) <
              1e-12);
    }
}

TEST_CASE("transformed noise matches the model covariance (light Monte Carlo)") {
    auto spec = TransformSpec::charlier_stft(1.0);
    GafModel model = GafModel::planar(1.0);
    const long trials = 4000;
    cplx z(0.6, 0.2), w(-0.3, 0.5);
    cplx acc = 0.0;
    for (long t = 0; t < trials; ++t) {
        auto s = transform_of_noise(spec, 40, 314, static_cast<std::uint64_t>(t));
        acc += eval_series(s, z) * std::conj(eval_series(s, w));
    }
    acc /= static_cast<double>(trials);
    cplx want = covariance(model, z, w);
    double scale = std::sqrt(covariance(model, z, z).real() * covariance(model, w, w).real());
    CHECK(std::abs(acc - want) / scale < 4.0 / std::sqrt(static_cast<double>(trials)));
}
