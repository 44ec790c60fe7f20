#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "pencilscope/errors.hpp"
#include "pencilscope/pencil.hpp"
#include "pencilscope/random.hpp"
#include "pencilscope/verify.hpp"

using namespace pencilscope;

namespace {

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

CMatrix diag(std::vector<Complex> d) { return CMatrix::diagonal(d); }

double r_of(const Pencil& p, Complex z, unsigned n) {
    const ExtendedReal r = pseudo_resolvent_norm(p, z, n);
    REQUIRE(r.is_finite());
    return r.value();
}

// ‖(λB−A)^{−2ⁿ}‖^{1/2ⁿ} by explicit powers and the Gram oracle.
double r_oracle(const Pencil& p, Complex z, unsigned n) {
    const CMatrix inv = oracle::invert(p.at(z));
    CMatrix pw = inv;
    for (unsigned k = 0; k < n; ++k) pw = oracle::matmul(pw, pw);
    return std::pow(oracle::norm2(pw), 1.0 / std::ldexp(1.0, static_cast<int>(n)));
}

}  // namespace

TEST_SUITE("pencil") {
TEST_CASE("pencil validation") {
    CHECK_THROWS_AS(Pencil(CMatrix(2, 3), CMatrix(2, 3)), InvalidArgument);
    CHECK_THROWS_AS(Pencil(CMatrix(2, 2), CMatrix(3, 3)), InvalidArgument);
    CHECK_THROWS_AS(Pencil(CMatrix{{std::nan("")}}, CMatrix{{1.0}}), InvalidArgument);
}

TEST_CASE("resolvent examples") {
    CHECK(resolvent_matrix(Pencil(CMatrix::zeros(2, 2), CMatrix::identity(2)), 2.0) == 0.5 * CMatrix::identity(2));
    const CMatrix r = resolvent_matrix(Pencil(-CMatrix::identity(2), diag({1.0, 0.0})), 1.0);
    CHECK(r == diag({0.5, 1.0}));
    CHECK_THROWS_AS(resolvent_matrix(Pencil(diag({1.0, 2.0}), CMatrix::identity(2)), 1.0), AtSpectrum);
}

TEST_CASE("resolvent residual") {
    Rng rng(101);
    for (int t = 0; t < 30; ++t) {
        const Pencil p = random_pencil(rng, 6);
        const Complex z = rng.complex_normal();
        const CMatrix r = resolvent_matrix(p, z);
        CHECK(frobenius_norm(p.at(z) * r - CMatrix::identity(6)) <= 1e-10 * 6);
    }
}

TEST_CASE("pseudo resolvent norm examples") {
    const Pencil normal(diag({1.0, 3.0}), CMatrix::identity(2));
    for (unsigned n : {0u, 1u, 2u, 6u}) CHECK(r_of(normal, 0.0, n) == doctest::Approx(1.0).epsilon(1e-12));
    const Pencil jordan(CMatrix{{0.0, 1.0}, {0.0, 0.0}}, CMatrix::identity(2));
    CHECK(r_of(jordan, 1.0, 0) == doctest::Approx(kGolden).epsilon(1e-12));
    const ExtendedReal at = pseudo_resolvent_norm(Pencil(diag({1.0, 2.0}), CMatrix::identity(2)), 2.0, 0);
    CHECK(at.is_infinite());
    CHECK(at.to_string() == "inf");
    CHECK(pseudo_resolvent_norm(Pencil(diag({1.0, 2.0}), CMatrix::identity(2)), 2.0, 3).is_infinite());
    CHECK_THROWS_AS(pseudo_resolvent_norm(normal, 0.0, 21), InvalidArgument);
}

TEST_CASE("r_n against explicit powers") {
    Rng rng(103);
    for (int t = 0; t < 40; ++t) {
        const Pencil p = random_pencil(rng, 5);
        const Complex z = rng.complex_normal();
        for (unsigned n = 0; n <= 3; ++n) CHECK(oracle::rel_diff(r_of(p, z, n), r_oracle(p, z, n)) <= 1e-8);
        CHECK(oracle::rel_diff(r_of(p, z, 0), 1.0 / oracle::singular_values(p.at(z)).front()) <= 1e-8);
    }
}

TEST_CASE("resolvent derivative") {
    CHECK(frobenius_norm(resolvent_derivative(Pencil(CMatrix::zeros(2, 2), CMatrix::identity(2)), 2.0) +
                         0.25 * CMatrix::identity(2)) < 1e-15);
    const Pencil jordan(CMatrix{{0.0, 1.0}, {0.0, 0.0}}, CMatrix::identity(2));
    const Complex z = 1.0;
    const CMatrix d = resolvent_derivative(jordan, z);
    auto fd_err = [&](double h) {
        const CMatrix fd = (1.0 / (2.0 * h)) * (resolvent_matrix(jordan, z + h) - resolvent_matrix(jordan, z - h));
        return frobenius_norm(fd - d);
    };
    const double ratio = fd_err(0.02) / fd_err(0.01);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
    CHECK_THROWS_AS(resolvent_derivative(Pencil(diag({1.0, 2.0}), CMatrix::identity(2)), 1.0), AtSpectrum);

    Rng rng(107);
    const Pencil p = random_pencil(rng, 5);
    const Complex w = rng.complex_normal();
    const CMatrix dw = resolvent_derivative(p, w);
    const double h = 1e-3;
    const CMatrix fd = (1.0 / (2.0 * h)) * (resolvent_matrix(p, w + h) - resolvent_matrix(p, w - h));
    CHECK(frobenius_norm(fd - dw) <= 1e-4 * frobenius_norm(dw));
}

TEST_CASE("neumann series") {
    const Pencil scalar(CMatrix{{0.0}}, CMatrix{{1.0}});
    const CMatrix s = neumann_series_resolvent(scalar, 1.0, 1.4, 1e-14);
    CHECK(s(0, 0).real() == doctest::Approx(1.0 / 1.4).epsilon(1e-12));
    CHECK(std::abs(s(0, 0) - 1.0 / 0.6) > 0.5);  // the non-alternating sum
    CHECK(neumann_radius(scalar, 1.0) == doctest::Approx(1.0));

    Rng rng(109);
    const Pencil p = random_pencil(rng, 5);
    const Complex z0 = rng.complex_normal();
    CHECK(neumann_series_resolvent(p, z0, z0, 1e-12) == resolvent_matrix(p, z0));
    const double rad = neumann_radius(p, z0);
    CHECK_THROWS_AS(neumann_series_resolvent(p, z0, z0 + 2.0 * rad, 1e-10), OutsideRadius);
    const Complex z = z0 + 0.8 * rad * std::polar(1.0, 0.7);
    const CMatrix direct = resolvent_matrix(p, z);
    CHECK(frobenius_norm(neumann_series_resolvent(p, z0, z, 1e-10) - direct) <= 10 * 1e-10 * std::max(1.0, frobenius_norm(direct)));
    CHECK_THROWS_AS(neumann_series_resolvent(Pencil(diag({1.0, 2.0}), CMatrix::identity(2)), 1.0, 1.1, 1e-10), AtSpectrum);
}

TEST_CASE("witness examples") {
    const Pencil scalar(CMatrix{{0.0}}, CMatrix{{1.0}});
    const Witness w = perturbation_witness(scalar, 0.1, 0);
    CHECK(std::abs(w.e(0, 0) - 0.1) < 1e-15);
    CHECK(std::abs(std::abs(w.u[0]) - 1.0) < 1e-15);
    CHECK(std::abs((0.1 - w.e(0, 0)) * w.u[0]) < 1e-15);

    const Pencil jordan(CMatrix{{0.0, 1.0}, {0.0, 0.0}}, CMatrix::identity(2));
    const Witness j = perturbation_witness(jordan, 1.0, 0);
    CHECK(j.e_norm == doctest::Approx(1.0 / kGolden).epsilon(1e-12));
    CHECK(oracle::norm2(j.e) == doctest::Approx(1.0 / kGolden).epsilon(1e-10));
    const std::vector<Complex> res = multiply(jordan.at(1.0) - j.e, j.u);
    CHECK(vector_norm(res) < 1e-12);
    CHECK_THROWS_AS(perturbation_witness(Pencil(diag({1.0, 2.0}), CMatrix::identity(2)), 2.0, 1), AtSpectrum);
}

TEST_CASE("witness is rank one and certifies membership") {
    Rng rng(113);
    for (int t = 0; t < 30; ++t) {
        const Pencil p = random_pencil(rng, 6);
        const Complex z = rng.complex_normal();
        const unsigned n = static_cast<unsigned>(t % 3);
        const Witness w = perturbation_witness(p, z, n);
        // rank one: every 2x2 minor vanishes
        const double e2 = frobenius_norm(w.e) * frobenius_norm(w.e);
        double minor = 0.0;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t k = i + 1; k < 6; ++k)
                for (std::size_t j = 0; j < 6; ++j)
                    for (std::size_t l = j + 1; l < 6; ++l)
                        minor = std::max(minor, std::abs(w.e(i, j) * w.e(k, l) - w.e(i, l) * w.e(k, j)));
        CHECK(minor <= 1e-14 * e2);
        CHECK(vector_norm(w.u) == doctest::Approx(1.0).epsilon(1e-12));
        const double bound = std::pow(1.0 / r_of(p, z, n), std::ldexp(1.0, static_cast<int>(n)));
        CHECK(w.e_norm <= bound * (1.0 + 1e-8));
        CHECK(w.e_norm >= bound * (1.0 - 1e-8));
        CHECK(w.defect <= 1e-10);
    }
}

TEST_CASE("eigenvalue examples") {
    const auto e1 = eigenvalues(Pencil(diag({1.0, 2.0}), CMatrix::identity(2)));
    CHECK(oracle::match_distance(e1, {1.0, 2.0}) < 1e-14);
    const auto e2 = eigenvalues(Pencil(CMatrix::identity(2), diag({1.0, 2.0})));
    CHECK(oracle::match_distance(e2, {1.0, 0.5}) < 1e-14);
    CHECK_THROWS_AS(eigenvalues(Pencil(CMatrix::identity(2), diag({1.0, 0.0}))), SingularB);
}

TEST_CASE("eigenvalues against the determinant polynomial") {
    Rng rng(127);
    for (int t = 0; t < 50; ++t) {
        const Pencil p = random_pencil(rng, 4);
        const auto ev = eigenvalues(p);
        CHECK(oracle::match_distance(ev, oracle::pencil_roots(p.a(), p.b())) < 1e-6);
        const double scale = oracle::norm2(p.a());
        const double bn = oracle::norm2(p.b());
        for (Complex mu : ev) CHECK(extreme_singular_values(p.at(mu)).sigma_min <= 1e-8 * (scale + std::abs(mu) * bn));
    }
}

TEST_CASE("refine_eigenvalue converges from a nearby seed") {
    Rng rng(131);
    const Pencil p = random_pencil(rng, 5);
    for (Complex mu : eigenvalues(p)) CHECK(std::abs(refine_eigenvalue(p, mu + Complex(0.01, -0.01)) - mu) < 1e-9);
}

TEST_CASE("pencil properties, small seeded runs") {
    VerifyOptions opt;
    opt.trials = 20;
    opt.seed = 2024;
    for (const char* name : {"nesting", "eps-monotone", "intersection", "disk-sum", "scaling", "affine", "adjoint",
                             "lemma", "self-adjoint", "equivalence"}) {
        CAPTURE(name);
        const PropertyReport r = run_property(name, opt);
        CHECK(r.module == "pencil");
        CHECK(r.checks > 0);
        CHECK(r.failure_count == 0);
    }
}

TEST_CASE("adjoint conjugation symmetry, direct") {
    Rng rng(137);
    for (int t = 0; t < 20; ++t) {
        const Pencil p = random_pencil(rng, 5);
        const Pencil q(p.a().adjoint(), p.b().adjoint());
        const Complex z = rng.complex_normal();
        for (unsigned n = 0; n <= 2; ++n) CHECK(oracle::rel_diff(r_of(q, std::conj(z), n), r_of(p, z, n)) <= 1e-10);
    }
}
}
