#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qcoh/harness.hpp"
#include "qcoh/linalg.hpp"
#include "qcoh/rng.hpp"

using namespace qcoh;

namespace {

ComplexMatrix example_3d_state() {
    ComplexMatrix m(3, 3);
    m << 1, 0, 1, 0, 2, 0, 1, 0, 1;
    return 0.25 * m;
}

ComplexMatrix random_hermitian(int dim, SplitMixRng& rng) {
    ComplexMatrix g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = rng.next_complex_gaussian();
    return 0.5 * (g + g.adjoint());
}

} // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("validate_density accepts the maximally mixed state") {
    const DensityMatrix rho = validate_density(0.5 * ComplexMatrix::Identity(2, 2), 1e-9);
    CHECK(rho.dim() == 2);
    CHECK(rho.spectrum().eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("validate_density rejects a negative eigenvalue beyond tol") {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -0.01;
    CHECK_THROWS_AS(validate_density(m, 1e-9), NotPositive);
}

TEST_CASE("validate_density rejects non-Hermitian and bad-trace input") {
    ComplexMatrix m(2, 2);
    m << 0.5, Complex(0.1, 0.2), Complex(0.1, -0.1), 0.5;
    CHECK_THROWS_AS(validate_density(m, 1e-9), NotHermitian);
    ComplexMatrix t(2, 2);
    t << 0.7, 0.0, 0.0, 0.7;
    CHECK_THROWS_AS(validate_density(t, 1e-9), TraceMismatch);
}

TEST_CASE("validate_density accepts the 3-dimensional reference state") {
    const DensityMatrix rho = validate_density(example_3d_state(), 1e-9);
    // eigenvalues (1/2, 1/2, 0)
    CHECK(rho.spectrum().eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rho.spectrum().eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(rho.spectrum().eigenvalues[2]) < 1e-12);
}

TEST_CASE("validation renormalizes a slightly off trace") {
    ComplexMatrix m = 0.5 * ComplexMatrix::Identity(2, 2);
    m(0, 0) += 5e-10;
    const DensityMatrix rho = validate_density(m, 1e-9);
    CHECK(std::abs(std::real(rho.matrix().trace()) - 1.0) < 1e-15);
}

TEST_CASE("hermitian_eig on diagonal and rank-1 matrices") {
    ComplexMatrix d(2, 2);
    d << 0.75, 0.0, 0.0, 0.25;
    const Spectrum s = hermitian_eig(d);
    CHECK(s.eigenvalues[0] == doctest::Approx(0.75));
    CHECK(s.eigenvalues[1] == doctest::Approx(0.25));
    CHECK((s.eigenvectors - ComplexMatrix::Identity(2, 2)).norm() < 1e-12);

    ComplexMatrix p(2, 2);
    p << 0.5, 0.5, 0.5, 0.5;
    const Spectrum sp = hermitian_eig(p);
    CHECK(sp.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(std::abs(sp.eigenvalues[1]) < 1e-12);
}

TEST_CASE("hermitian_eig reproduces the analytic eigenvalues of the damped pure state") {
    // Lambda(rho) of the first reference channel: [[3/4, a], [a, 1/4]]
    const double a = (3.0 + std::sqrt(3.0)) / (8.0 * std::sqrt(2.0));
    ComplexMatrix m(2, 2);
    m << 0.75, a, a, 0.25;
    const Spectrum s = hermitian_eig(m);
    const double disc = std::sqrt(0.25 + 4.0 * a * a);
    CHECK(s.eigenvalues[0] == doctest::Approx(0.5 * (1.0 + disc)).epsilon(1e-14));
    CHECK(s.eigenvalues[1] == doctest::Approx(0.5 * (1.0 - disc)).epsilon(1e-14));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("hermitian_eig satisfies reconstruction and orthonormality on random matrices") {
    SplitMixRng rng(2024);
    for (int t = 0; t < 1000; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const int dim = 2 + static_cast<int>(sub.next_u64() % 7);
        const ComplexMatrix h = random_hermitian(dim, sub);
        const Spectrum s = hermitian_eig(h);
        ComplexMatrix rebuilt =
            s.eigenvectors * s.eigenvalues.asDiagonal() * s.eigenvectors.adjoint();
        CHECK((rebuilt - h).norm() <= 1e-10 * dim);
        CHECK((s.eigenvectors.adjoint() * s.eigenvectors - ComplexMatrix::Identity(dim, dim))
                  .norm() <= 1e-10 * dim);
        for (int j = 0; j + 1 < dim; ++j) {
            CHECK(s.eigenvalues[j] >= s.eigenvalues[j + 1]);
        }
    }
}

TEST_CASE("hermitian_eig is deterministic for identical input") {
    SplitMixRng rng(7);
    const ComplexMatrix h = random_hermitian(5, rng);
    const Spectrum s1 = hermitian_eig(h);
    const Spectrum s2 = hermitian_eig(h);
    CHECK((s1.eigenvectors - s2.eigenvectors).norm() == 0.0);
    CHECK((s1.eigenvalues - s2.eigenvalues).norm() == 0.0);
}

TEST_CASE("matrix_power squares the maximally mixed state") {
    const DensityMatrix rho = validate_density(0.5 * ComplexMatrix::Identity(2, 2), 1e-9);
    CHECK((matrix_power(rho, 2.0) - 0.25 * ComplexMatrix::Identity(2, 2)).norm() < 1e-14);
}

TEST_CASE("matrix_power is idempotent on pure states") {
    SplitMixRng rng(3);
    const DensityMatrix rho = random_state(4, Purity::Pure, rng);
    for (double alpha : {0.3, 0.7, 1.4}) {
        CHECK((matrix_power(rho, alpha) - rho.matrix()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("matrix_power of the 3-dimensional reference state has the closed form") {
    const DensityMatrix rho = validate_density(example_3d_state(), 1e-9);
    for (double alpha : {0.3, 0.7, 1.5}) {
        const ComplexMatrix expected = std::pow(2.0, -(1.0 + alpha)) * 4.0 * example_3d_state();
        CHECK((matrix_power(rho, alpha) - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("matrix_power at alpha=1 returns the state") {
    SplitMixRng rng(11);
    for (int t = 0; t < 50; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const DensityMatrix rho = random_state(3, Purity::Mixed, sub);
        CHECK((matrix_power(rho, 1.0) - rho.matrix()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("trace power respects the Schur-convexity bounds") {
    SplitMixRng rng(13);
    for (int t = 0; t < 100; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const int dim = 2 + static_cast<int>(sub.next_u64() % 3);
        const DensityMatrix rho = random_state(dim, Purity::Mixed, sub);
        for (double alpha : {0.2, 0.5, 0.8, 1.3, 1.7, 2.0}) {
            const double tr = std::real(matrix_power(rho, alpha).trace());
            if (alpha < 1.0) {
                CHECK(tr > 0.0);
                CHECK(tr <= std::pow(dim, 1.0 - alpha) + 1e-9);
                CHECK(tr >= 1.0 - 1e-9);
            } else {
                CHECK(tr >= std::pow(dim, 1.0 - alpha) - 1e-9);
                CHECK(tr <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("trace_norm basics") {
    const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    CHECK(trace_norm(zero) == doctest::Approx(0.0));
    ComplexMatrix diff(2, 2);
    diff << 1.0, 0.0, 0.0, -1.0;
    CHECK(trace_norm(diff) == doctest::Approx(2.0));
    ComplexMatrix d2(2, 2);
    d2 << 0.4, 0.0, 0.0, -0.4;
    CHECK(trace_norm(d2) == doctest::Approx(0.8));
}

TEST_CASE("trace_norm is a unitarily invariant norm") {
    SplitMixRng rng(17);
    for (int t = 0; t < 50; ++t) {
        SplitMixRng sub = rng.split(static_cast<std::uint64_t>(t));
        const ComplexMatrix x = random_hermitian(3, sub);
        const ComplexMatrix y = random_hermitian(3, sub);
        CHECK(trace_norm(x) >= 0.0);
        CHECK(trace_norm(x + y) <= trace_norm(x) + trace_norm(y) + 1e-9);
        // Haar-ish unitary from the QR of a Gaussian matrix
        ComplexMatrix g(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) g(r, c) = sub.next_complex_gaussian();
        const ComplexMatrix u = Eigen::HouseholderQR<ComplexMatrix>(g).householderQ();
        CHECK(trace_norm(u * x * u.adjoint()) == doctest::Approx(trace_norm(x)).epsilon(1e-9));
        // Hermitian input: sum of |eigenvalues|
        double abs_sum = 0.0;
        for (double l : hermitian_eig(x).eigenvalues) abs_sum += std::abs(l);
        CHECK(trace_norm(x) == doctest::Approx(abs_sum).epsilon(1e-10));
    }
}

TEST_CASE("abs_power_trace examples") {
    CHECK(abs_power_trace(ComplexMatrix::Zero(3, 3), 0.7) == doctest::Approx(0.0));
    ComplexMatrix m(2, 2);
    m << 0.4, 0.0, 0.0, -0.4;
    CHECK(abs_power_trace(m, 1.0) == doctest::Approx(0.8));
    ComplexMatrix m2(2, 2);
    m2 << 0.25, 0.0, 0.0, -0.25;
    CHECK(abs_power_trace(m2, 2.0) == doctest::Approx(0.125));
    CHECK_THROWS_AS(abs_power_trace(m, 0.0), ParamOutOfRange);
    ComplexMatrix nh(2, 2);
    nh << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(abs_power_trace(nh, 1.0), NotHermitian);
}

TEST_CASE("matrix text format round-trips within write precision") {
    SplitMixRng rng(23);
    const DensityMatrix rho = random_state(4, Purity::Mixed, rng);
    std::stringstream buf;
    write_matrix(buf, rho.matrix());
    const ComplexMatrix back = read_matrix(buf);
    CHECK((back - rho.matrix()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("matrix reader accepts comments and reports malformed input") {
    std::istringstream ok("# a comment\n2\n0.5,0 0,0\n# interleaved\n0,0 0.5,0\n");
    const ComplexMatrix m = read_matrix(ok);
    CHECK(m(0, 0) == Complex(0.5, 0.0));

    std::istringstream bad_dim("x\n");
    CHECK_THROWS_AS(read_matrix(bad_dim), ParseError);
    std::istringstream missing_row("2\n0.5,0 0,0\n");
    CHECK_THROWS_AS(read_matrix(missing_row), ParseError);
    std::istringstream bad_entry("1\n0.5;0\n");
    CHECK_THROWS_AS(read_matrix(bad_entry), ParseError);
    std::istringstream short_row("2\n0.5,0\n0,0 0.5,0\n");
    CHECK_THROWS_AS(read_matrix(short_row), ParseError);
}

TEST_SUITE_END();
