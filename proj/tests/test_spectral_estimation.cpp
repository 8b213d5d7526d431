#include "gccha/basis.hpp"
#include "gccha/errors.hpp"
#include "gccha/estimation.hpp"
#include "gccha/synth.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace gccha;
using namespace gccha_test;

namespace {

SpectralBasis laplacian_basis(std::mt19937_64& rng, Index n) {
    return spectral_basis(laplacian(random_connected_graph(rng, n)));
}

}  // namespace

TEST_CASE("cross periodogram closed forms") {
    std::mt19937_64 rng(23);
    SpectralBasis b = laplacian_basis(rng, 6);

    const Complex a(1.5, -0.5);
    const VecC mode = b.eigenvectors().col(0) * a;
    const VecC auto_pg = cross_periodogram(b, mode, mode);
    CHECK(std::abs(auto_pg(0) - Complex(std::norm(a), 0)) < 1e-12);
    CHECK(auto_pg.tail(5).norm() < 1e-12);

    const VecC cross = cross_periodogram(b, b.eigenvectors().col(0), b.eigenvectors().col(1));
    CHECK(cross.norm() < 1e-12);
}

TEST_CASE("cross periodogram equals the dense outer-product diagonal") {
    std::mt19937_64 rng(29);
    SpectralBasis b = laplacian_basis(rng, 8);
    const VecC x = random_complex_vector(rng, 8);
    const VecC y = random_complex_vector(rng, 8);
    const VecC pg = cross_periodogram(b, x, y);
    const MatC dense = b.eigenvectors().adjoint() * (x * y.adjoint()) * b.eigenvectors();
    CHECK((pg - dense.diagonal()).norm() < 1e-12 * std::max(1.0, dense.norm()));
    CHECK_THROWS_AS(cross_periodogram(b, VecC::Zero(3), y), DimensionMismatch);
}

TEST_CASE("auto periodogram of x with itself is real and nonnegative") {
    std::mt19937_64 rng(31);
    SpectralBasis b = laplacian_basis(rng, 7);
    const VecC x = random_complex_vector(rng, 7);
    const VecC pg = cross_periodogram(b, x, x);
    for (Index l = 0; l < 7; ++l) {
        CHECK(std::abs(pg(l).imag()) < 1e-14 * std::abs(pg(l)));
        CHECK(pg(l).real() >= 0.0);
    }
}

TEST_CASE("realization average recovers a white spectrum") {
    std::mt19937_64 rng(37);
    SpectralBasis b = laplacian_basis(rng, 6);
    const double sigma = 1.7;
    const Index m_count = 4000;
    MatC xi(6, m_count);
    for (Index m = 0; m < m_count; ++m)
        xi.col(m) = sigma * random_real_vector(rng, 6).cast<Complex>();
    EstimatorConfig cfg;
    const VecC est = realization_average_csd(b, xi, xi, cfg);
    const double tol = 3.0 * sigma * sigma / std::sqrt(static_cast<double>(m_count));
    for (Index l = 0; l < 6; ++l) CHECK(std::abs(est(l) - Complex(sigma * sigma, 0)) < tol);
}

TEST_CASE("degenerate average of identical copies is the plain periodogram") {
    std::mt19937_64 rng(41);
    SpectralBasis b = laplacian_basis(rng, 5);
    const VecC x = random_complex_vector(rng, 5);
    MatC copies(5, 4);
    for (Index m = 0; m < 4; ++m) copies.col(m) = x;
    EstimatorConfig cfg;
    cfg.center = false;
    const VecC est = realization_average_csd(b, copies, copies, cfg);
    CHECK((est - cross_periodogram(b, x, x)).norm() < 1e-12);

    cfg.center = true;
    CHECK_THROWS_AS(realization_average_csd(b, x, x, cfg), TooFewRealizations);
}

TEST_CASE("realization average tracks a synthesized target spectrum") {
    std::mt19937_64 rng(43);
    SpectralBasis b = laplacian_basis(rng, 8);
    VecR g(8);
    g << 2.0, 1.5, 1.2, 1.0, 0.8, 0.5, 0.4, 0.25;
    std::vector<MatC> joint;
    for (Index l = 0; l < 8; ++l) {
        MatC j(2, 2);
        j << Complex(g(l), 0), Complex(0, 0), Complex(0, 0), Complex(1, 0);
        joint.push_back(j);
    }
    SynthesisSpec spec{b, joint, 1, 2000, 99, MatC(), MatC()};
    auto [x, y] = synthesize_stationary(spec);
    const MatC xi = x.dimension_table(0);
    EstimatorConfig cfg;
    const VecC est = realization_average_csd(b, xi, xi, cfg);
    // relative SE of a chi-square mean is sqrt(2/M)
    const double rel = 5.0 * std::sqrt(2.0 / 2000.0);
    for (Index l = 0; l < 8; ++l) CHECK(std::abs(est(l).real() - g(l)) < rel * g(l));
}

TEST_CASE("windowed average is real nonnegative on x with itself and seeded") {
    std::mt19937_64 rng(47);
    SpectralBasis b = laplacian_basis(rng, 9);
    const VecC x = random_complex_vector(rng, 9);
    EstimatorConfig cfg;
    cfg.mode = EstimatorMode::RandomWindow;
    cfg.window_count = 16;
    cfg.seed = 1234;
    const VecC a = windowed_average_csd(b, x, x, cfg);
    for (Index l = 0; l < 9; ++l) {
        CHECK(a(l).real() >= 0.0);
        CHECK(std::abs(a(l).imag()) < 1e-12 * std::max(1.0, std::abs(a(l))));
    }
    const VecC again = windowed_average_csd(b, x, x, cfg);
    for (Index l = 0; l < 9; ++l) {
        CHECK(a(l).real() == again(l).real());
        CHECK(a(l).imag() == again(l).imag());
    }
    cfg.seed = 1235;
    const VecC other = windowed_average_csd(b, x, x, cfg);
    CHECK((a - other).norm() > 0.0);
}

TEST_CASE("windowed average is unbiased for white signals") {
    std::mt19937_64 rng(53);
    SpectralBasis b = laplacian_basis(rng, 8);
    EstimatorConfig cfg;
    cfg.mode = EstimatorMode::RandomWindow;
    cfg.window_count = 50;
    VecR mean = VecR::Zero(8);
    const int draws = 200;
    for (int t = 0; t < draws; ++t) {
        const VecC x = random_real_vector(rng, 8).cast<Complex>();
        cfg.seed = static_cast<std::uint64_t>(t);
        mean += windowed_average_csd(b, x, x, cfg).real();
    }
    mean /= static_cast<double>(draws);
    for (Index l = 0; l < 8; ++l) CHECK(std::abs(mean(l) - 1.0) < 0.10);
}

TEST_CASE("field estimate of X with itself pairs every block") {
    std::mt19937_64 rng(59);
    SpectralBasis b = laplacian_basis(rng, 6);
    std::vector<MatC> tables;
    for (int m = 0; m < 5; ++m) tables.push_back(random_complex_matrix(rng, 6, 2));
    MultivariateGraphSignal x(tables);
    EstimatorConfig cfg;
    cfg.ridge = 0.0;  // inspect the raw estimate
    SpectralMatrixField f = spectral_matrix_field(x, x, b, cfg);
    for (Index l = 0; l < 6; ++l) {
        CHECK((f.P_X(l) - f.P_Y(l)).norm() < 1e-12);
        CHECK((f.P_X(l) - f.P_XY(l)).norm() < 1e-12);
        CHECK((f.P_YX(l) - f.P_XY(l).adjoint()).norm() == 0.0);  // storage contract
    }
}

TEST_CASE("scalar field obeys Cauchy-Schwarz after projection") {
    std::mt19937_64 rng(61);
    SpectralBasis b = laplacian_basis(rng, 7);
    std::vector<MatC> xt, yt;
    for (int m = 0; m < 6; ++m) {
        xt.push_back(random_complex_matrix(rng, 7, 1));
        yt.push_back(random_complex_matrix(rng, 7, 1));
    }
    SpectralMatrixField f =
        spectral_matrix_field(MultivariateGraphSignal(xt), MultivariateGraphSignal(yt), b, {});
    for (Index l = 0; l < 7; ++l) {
        const double px = f.P_X(l)(0, 0).real();
        const double py = f.P_Y(l)(0, 0).real();
        CHECK(std::norm(f.P_XY(l)(0, 0)) <= px * py + 1e-10);
    }
}

TEST_CASE("joint field satisfies the coherence bound after conditioning") {
    std::mt19937_64 rng(67);
    SpectralBasis b = laplacian_basis(rng, 6);
    std::vector<MatC> xt, yt;
    for (int m = 0; m < 3; ++m) {  // fewer realizations than dimensions
        xt.push_back(random_complex_matrix(rng, 6, 3));
        yt.push_back(random_complex_matrix(rng, 6, 2));
    }
    SpectralMatrixField f =
        spectral_matrix_field(MultivariateGraphSignal(xt), MultivariateGraphSignal(yt), b, {});
    for (Index l = 0; l < 6; ++l) {
        const MatC j = f.joint(l);
        for (Index a = 0; a < 5; ++a)
            for (Index c = 0; c < 5; ++c)
                CHECK(std::norm(j(a, c)) <= j(a, a).real() * j(c, c).real() + 1e-10);
        Eigen::SelfAdjointEigenSolver<MatC> ex(f.P_X(l));
        Eigen::SelfAdjointEigenSolver<MatC> ey(f.P_Y(l));
        CHECK(ex.eigenvalues().minCoeff() > -1e-10);
        CHECK(ey.eigenvalues().minCoeff() > -1e-10);
    }
}

TEST_CASE("field estimates converge on synthesized processes") {
    std::mt19937_64 rng(71);
    SpectralBasis b = laplacian_basis(rng, 6);
    std::vector<MatC> joint;
    for (Index l = 0; l < 6; ++l) {
        SpectralInstance inst = random_spectral_instance(rng, 2, 2, false);
        MatC j(4, 4);
        j << inst.p_x, inst.p_xy, inst.p_xy.adjoint(), inst.p_y;
        joint.push_back(j);
    }

    auto field_error = [&](Index m_count, std::uint64_t seed) {
        SynthesisSpec spec{b, joint, 2, m_count, seed, MatC(), MatC()};
        auto [x, y] = synthesize_stationary(spec);
        EstimatorConfig cfg;
        cfg.ridge = 0.0;
        SpectralMatrixField f = spectral_matrix_field(x, y, b, cfg);
        double num = 0.0, den = 0.0;
        for (Index l = 0; l < 6; ++l) {
            num += (f.joint(l) - joint[static_cast<size_t>(l)]).squaredNorm();
            den += joint[static_cast<size_t>(l)].squaredNorm();
        }
        return std::sqrt(num / den);
    };

    double e100 = 0.0, e400 = 0.0, e1600 = 0.0;
    for (std::uint64_t t = 0; t < 5; ++t) {
        e100 += field_error(100, 1000 + t);
        e400 += field_error(400, 2000 + t);
        e1600 += field_error(1600, 3000 + t);
    }
    CHECK(e400 < e100);
    CHECK(e1600 < e400);
    CHECK(e1600 / 5.0 < 0.2);
}

TEST_CASE("real inputs take the real storage path with matching results") {
    std::mt19937_64 rng(73);
    SpectralBasis b = laplacian_basis(rng, 6);
    std::vector<MatC> xt, yt;
    for (int m = 0; m < 4; ++m) {
        xt.push_back(random_real_matrix(rng, 6, 2).cast<Complex>());
        yt.push_back(random_real_matrix(rng, 6, 2).cast<Complex>());
    }
    MultivariateGraphSignal x(xt), y(yt);
    SpectralMatrixField f = spectral_matrix_field(x, y, b, {});
    CHECK(f.is_real());

    std::vector<MatC> xt2 = xt;
    xt2.front()(0, 0) += Complex(0.0, 1e-30);  // negligible but nonzero imaginary part
    SpectralMatrixField fc = spectral_matrix_field(MultivariateGraphSignal(xt2), y, b, {});
    CHECK_FALSE(fc.is_real());
    double diff = 0.0;
    for (Index l = 0; l < 6; ++l) diff += (f.joint(l) - fc.joint(l)).norm();
    CHECK(diff < 1e-9);
}

TEST_CASE("psd_project clips and is idempotent") {
    MatC d = MatC::Zero(2, 2);
    d(0, 0) = Complex(1, 0);
    d(1, 1) = Complex(-0.1, 0);
    const MatC proj = psd_project(d);
    CHECK(std::abs(proj(0, 0) - Complex(1, 0)) < 1e-14);
    CHECK(std::abs(proj(1, 1)) < 1e-14);

    std::mt19937_64 rng(79);
    const MatC psd = random_hpd(rng, 4);
    CHECK((psd_project(psd) - psd).norm() < 1e-12 * psd.norm());

    const MatC anything = random_complex_matrix(rng, 4, 4);
    const MatC once = psd_project(anything);
    CHECK((psd_project(once) - once).norm() < 1e-12 * std::max(1.0, once.norm()));
}

TEST_CASE("psd_project is the nearest Hermitian clipping") {
    std::mt19937_64 rng(83);
    MatC base = random_hpd(rng, 3, 0.0);
    base -= 0.4 * MatC::Identity(3, 3);  // make it indefinite
    base = ((base + base.adjoint()) / 2.0).eval();
    const MatC proj = psd_project(base);

    // Oracle route: clip through a different eigensolver.
    Eigen::ComplexEigenSolver<MatC> eig(base);
    MatC oracle = MatC::Zero(3, 3);
    for (Index i = 0; i < 3; ++i) {
        const double lam = std::max(0.0, eig.eigenvalues()(i).real());
        const VecC v = eig.eigenvectors().col(i).normalized();
        oracle += lam * v * v.adjoint();
    }
    CHECK((proj - oracle).norm() < 1e-9);

    // No sampled PSD matrix comes closer in Frobenius norm.
    const double best = (base - proj).norm();
    for (int t = 0; t < 50; ++t) {
        const MatC cand = proj + 0.2 * random_hpd(rng, 3, 0.0);
        CHECK((base - cand).norm() >= best - 1e-12);
    }
}

TEST_CASE("stationarity diagnostic separates stationary from misaligned processes") {
    std::mt19937_64 rng(89);
    SpectralBasis b = laplacian_basis(rng, 6);
    const Index m_count = 5000;

    std::vector<MatC> white;
    for (Index m = 0; m < m_count; ++m)
        white.push_back(random_real_matrix(rng, 6, 2).cast<Complex>());
    const MatR clean = stationarity_diagnostic(MultivariateGraphSignal(white), b);
    CHECK(clean.maxCoeff() < 0.05);

    std::vector<MatC> joint(6, MatC::Identity(3, 3));
    SynthesisSpec spec{b, joint, 2, m_count, 7, MatC(), MatC()};
    auto [x, y] = synthesize_stationary(spec);
    CHECK(stationarity_diagnostic(x, b).maxCoeff() < 0.05);

    // Rank-1 covariance spread across three basis vectors: ratio ~ 2/3.
    const VecC u = (b.eigenvectors().col(0) + b.eigenvectors().col(1) +
                    b.eigenvectors().col(2)) /
                   std::sqrt(3.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<MatC> bad;
    for (Index m = 0; m < m_count; ++m) bad.push_back(u * Complex(gauss(rng), 0.0));
    CHECK(stationarity_diagnostic(MultivariateGraphSignal(bad), b).maxCoeff() > 0.5);

    CHECK_THROWS_AS(stationarity_diagnostic(
                        MultivariateGraphSignal(std::vector<MatC>{MatC::Ones(6, 2)}), b),
                    TooFewRealizations);
}
