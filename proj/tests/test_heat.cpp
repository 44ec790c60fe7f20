#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "pencilscope/errors.hpp"
#include "pencilscope/heat.hpp"
#include "pencilscope/pseudogrid.hpp"
#include "pencilscope/random.hpp"
#include "pencilscope/verify.hpp"

using namespace pencilscope;

namespace {

constexpr double kPi = std::numbers::pi;
const HeatParams kRod{1.0, kPi};
const Complex I{0.0, 1.0};

std::vector<Complex> constant(std::size_t n, Complex v) { return std::vector<Complex>(n, v); }

double max_abs(const std::vector<Complex>& v) {
    double m = 0.0;
    for (Complex z : v) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace

TEST_SUITE("heat") {
TEST_CASE("closed-form eigenvalues") {
    const auto e = heat_eigenvalues(kRod, 3);
    CHECK(e[0] == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(e[1] == doctest::Approx(-2.25).epsilon(1e-15));
    CHECK(e[2] == doctest::Approx(-6.25).epsilon(1e-15));
    CHECK(heat_eigenvalues({2.0, 1.0}, 1)[0] == doctest::Approx(-kPi * kPi).epsilon(1e-15));
    CHECK(heat_eigenvalues({2.0, 1.0}, 1)[0] == doctest::Approx(-9.8696044).epsilon(1e-8));
    const auto a = heat_eigenvalues({1.3, 2.0}, 6), b = heat_eigenvalues({1.3, 4.0}, 6);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(b[k] == doctest::Approx(a[k] / 4.0).epsilon(1e-15));
        if (k) CHECK(a[k] < a[k - 1]);
    }
    CHECK_THROWS_AS(heat_eigenvalues({0.0, 1.0}, 2), InvalidArgument);
}

TEST_CASE("eigenfunction samples") {
    const std::vector<double> xs{0.0, 0.5, 1.0, 2.0, kPi};
    const EigenSamples s = heat_eigenfunction(kRod, 0, xs);
    CHECK(std::abs(s.psi1[0]) < 1e-12);
    CHECK(std::abs(s.psi2.back()) < 1e-12);
    for (std::size_t k = 0; k < xs.size(); ++k) CHECK(std::abs(s.psi1[k] - I * std::sin(xs[k] / 2.0)) < 1e-14);
    for (std::size_t n = 1; n < 5; ++n) {
        const EigenSamples t = heat_eigenfunction({1.7, 2.3}, n, std::vector<double>{0.0, 2.3});
        CHECK(std::abs(t.psi1[0]) < 1e-12);
        CHECK(std::abs(t.psi2[1]) < 1e-12 * std::abs(t.lambda));
    }
}

TEST_CASE("eigenfunction ODE residuals are second order") {
    const HeatParams hp{1.4, 2.0};
    const std::size_t n = 2;
    auto residual = [&](double h) {
        const double x = 0.77;
        const EigenSamples s = heat_eigenfunction(hp, n, std::vector<double>{x - h, x, x + h});
        const Complex lam = s.lambda;
        const Complex d2 = (s.psi1[0] - 2.0 * s.psi1[1] + s.psi1[2]) / (h * h);
        const Complex d1 = (s.psi1[2] - s.psi1[0]) / (2.0 * h);
        return std::max(std::abs(hp.c * hp.c * d2 - lam * s.psi1[1]), std::abs(lam * d1 - lam * s.psi2[1]));
    };
    const double ratio = residual(0.02) / residual(0.01);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("difference matrices") {
    const std::size_t m = 8;
    const CMatrix d2 = heat_second_difference(kRod, m);
    const double h = kPi / m;
    for (std::size_t j = 0; j <= m; ++j) CHECK(d2(0, j) == Complex{});
    CHECK(d2(1, 0) == Complex{});
    CHECK(d2(1, 1).real() == doctest::Approx(-2.0 / (h * h)));
    CHECK(d2(m, m - 1).real() == doctest::Approx(2.0 / (h * h)));
    // exact on quadratics vanishing at 0 with zero slope at d
    std::vector<Complex> q(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        const double x = h * static_cast<double>(i);
        q[i] = x * (2.0 * kPi - x);
    }
    const auto dq = multiply(d2, q);
    for (std::size_t i = 1; i <= m; ++i) CHECK(dq[i].real() == doctest::Approx(-2.0).epsilon(1e-10));

    const CMatrix d1 = heat_first_difference(kRod, m);
    for (std::size_t i = 0; i <= m; ++i) CHECK(d1(i, 0) == Complex{});
    std::vector<Complex> lin(m + 1);
    for (std::size_t i = 0; i <= m; ++i) lin[i] = 3.0 * h * static_cast<double>(i);
    for (Complex v : multiply(d1, lin)) CHECK(v.real() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("heat block pencil") {
    for (std::size_t m : {8u, 16u, 32u}) {
        const BlockPencil bp = heat_pencil_matrices(kRod, m);
        const Pencil p = assemble(bp);
        CHECK(bp.a1 == heat_second_difference(kRod, m));
        CHECK(bp.b3 == heat_first_difference(kRod, m));
        CHECK(bp.b4 == -CMatrix::identity(m + 1));
        CHECK(frobenius_norm(bp.a2) + frobenius_norm(bp.a3) + frobenius_norm(bp.a4) + frobenius_norm(bp.b2) == 0.0);
        CHECK(frobenius_norm(p.b() * p.b() - CMatrix::identity(2 * (m + 1))) == 0.0);
    }
    CHECK_THROWS_AS(heat_pencil_matrices(kRod, 2), InvalidArgument);
}

TEST_CASE("assembled eigenvalues converge to the closed form") {
    const auto exact = heat_eigenvalues(kRod, 2);
    std::vector<double> err0, err1;
    for (std::size_t m : {16u, 32u, 64u}) {
        const auto ev = eigenvalues(assemble(heat_pencil_matrices(kRod, m)));
        double b0 = 1e300, b1 = 1e300;
        for (Complex z : ev) {
            b0 = std::min(b0, std::abs(z - exact[0]));
            b1 = std::min(b1, std::abs(z - exact[1]));
        }
        err0.push_back(b0);
        err1.push_back(b1);
    }
    for (std::size_t k = 0; k + 1 < err0.size(); ++k) {
        CHECK(err0[k] / err0[k + 1] >= 2.8);
        CHECK(err1[k] / err1[k + 1] >= 2.8);
    }
}

TEST_CASE("green resolvent") {
    const HeatParams unit{1.0, 1.0};
    const GreenResult zero = green_resolvent_apply(unit, 1.0, constant(17, 0.0));
    CHECK(max_abs(zero.u) == 0.0);
    CHECK(zero.quadrature.rfind("simpson", 0) == 0);
    CHECK_FALSE(zero.branch_cut);
    CHECK(green_resolvent_apply(unit, -2.0, constant(5, 1.0)).branch_cut);
    CHECK(green_resolvent_apply(unit, 1.0, constant(5, 1.0), Quadrature::trapezoid).quadrature == "trapezoid");
    CHECK_THROWS_AS(green_resolvent_apply(unit, 0.0, constant(5, 1.0)), InvalidArgument);

    // f ≡ 1: u = (1 − cosh(√λ(x−d)/c))/λ, so u(d) = u′(d) = 0
    for (Complex lam : {Complex(1.0), Complex(-3.0, 0.5), Complex(4.0, -2.0)}) {
        auto max_err = [&](std::size_t m) {
            const GreenResult g = green_resolvent_apply(unit, lam, constant(m + 1, 1.0));
            CHECK(std::abs(g.u[m]) == 0.0);
            const double h = 1.0 / static_cast<double>(m);
            CHECK(std::abs(g.u[m] - g.u[m - 1]) / h <= h * (1.0 + std::abs(lam)));
            double e = 0.0;
            for (std::size_t i = 0; i <= m; ++i) {
                const double x = static_cast<double>(i) / m;
                const Complex exact = (1.0 - std::cosh(std::sqrt(lam) * (x - 1.0))) / lam;
                e = std::max(e, std::abs(g.u[i] - exact));
            }
            return e;
        };
        CHECK(max_err(32) < 1e-6);
        CHECK(max_err(33) < 1e-6);  // odd interval count takes the 3/8 panel
    }
}

TEST_CASE("green residual is second order") {
    const HeatParams hp{0.8, 2.0};
    const Complex lam(1.5, 0.7);
    auto residual = [&](std::size_t m) {
        const double h = hp.d / m;
        std::vector<Complex> f(m + 1);
        for (std::size_t i = 0; i <= m; ++i) f[i] = std::cos(1.3 * h * i) + I * h * static_cast<double>(i);
        const auto u = green_resolvent_apply(hp, lam, f).u;
        double r = 0.0;
        for (std::size_t i = 1; i < m; ++i) {
            const Complex upp = (u[i - 1] - 2.0 * u[i] + u[i + 1]) / (h * h);
            r = std::max(r, std::abs(lam * u[i] - hp.c * hp.c * upp - f[i]));
        }
        return r;
    };
    const double ratio = residual(32) / residual(64);
    CHECK(ratio >= 3.0);
    CHECK(ratio <= 5.0);
}

TEST_CASE("delta1 forms") {
    for (Complex lam : {Complex(-2.0, 0.5), Complex(3.0, 1.0), Complex(-7.0, -2.0)}) {
        const Delta1 d = enclosure_delta1(kRod, 32, lam);
        CHECK(d.split == doctest::Approx(d.direct).epsilon(1e-6));
        const CMatrix piv = lam * CMatrix::identity(33) - heat_second_difference(kRod, 32);
        const double expect = std::abs(lam) * oracle::norm2(oracle::matmul(heat_first_difference(kRod, 32), oracle::invert(piv)));
        CHECK(d.delta1 == doctest::Approx(expect).epsilon(1e-8));
    }
    CHECK_THROWS_AS(enclosure_delta1(kRod, 16, 0.0), AtPivotSpectrum);
}

TEST_CASE("delta1 stays bounded under refinement for large real lambda") {
    for (double lam : {10.0, 100.0, 1000.0}) {
        std::vector<double> d;
        for (std::size_t m : {32u, 64u, 128u}) d.push_back(enclosure_delta1(kRod, m, lam).delta1);
        CAPTURE(lam);
        for (double v : d) CHECK(v <= std::sqrt(lam));
        CHECK(d[2] / d[1] <= 1.2);
        CHECK(d[1] / d[0] <= 1.3);
    }
}

TEST_CASE("ftcs matrix") {
    const FtcsParams fp = FtcsParams::from_a(kRod, 3, 5.0);
    const CMatrix t = ftcs_matrix(fp);
    const CMatrix expect{{1.0, 0.0, 0.0, 0.0}, {5.0, -9.0, 5.0, 0.0}, {0.0, 5.0, -9.0, 5.0}, {0.0, 0.0, -1.0, 1.0}};
    CHECK(t == expect);
    const CMatrix id_rows = ftcs_matrix(FtcsParams::from_a(kRod, 6, 0.0));
    for (std::size_t i = 1; i < 6; ++i)
        for (std::size_t j = 0; j <= 6; ++j) CHECK(id_rows(i, j) == (i == j ? Complex(1.0) : Complex{}));
    for (double a : {0.1, 0.4, 5.0, 10.0}) {
        const CMatrix tt = ftcs_matrix(FtcsParams::from_a(kRod, 10, a));
        for (std::size_t j = 2; j + 2 <= 10; ++j) {
            Complex sum{};
            for (std::size_t i = 0; i <= 10; ++i) sum += tt(i, j);
            CHECK(sum.real() == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
    const FtcsParams q = FtcsParams::from_dt({2.0, 1.0}, 10, 1e-3);
    CHECK(q.dx == doctest::Approx(0.1));
    CHECK(q.a == doctest::Approx(4.0 * 1e-3 / 0.01).epsilon(1e-15));
    CHECK(FtcsParams::from_a({2.0, 1.0}, 10, q.a).dt == doctest::Approx(1e-3).epsilon(1e-14));
}

TEST_CASE("ftcs simulation") {
    const FtcsParams fp = FtcsParams::from_a(kRod, 10, 0.3);
    const FtcsRun zero = simulate_ftcs(fp, std::vector<double>(11, 0.0), 5);
    REQUIRE(zero.states.size() == 6);
    for (const auto& s : zero.states)
        for (double v : s) CHECK(v == 0.0);
    CHECK_FALSE(zero.unstable);

    std::vector<double> init(11);
    Rng rng(401);
    for (std::size_t i = 1; i < 11; ++i) init[i] = rng.uniform(-1.0, 1.0);
    const FtcsRun run = simulate_ftcs(FtcsParams::from_a(kRod, 10, 0.7), init, 8);
    CHECK(run.unstable);
    for (std::size_t s = 1; s < run.states.size(); ++s) {
        CHECK(run.states[s][0] == 0.0);
        CHECK(run.states[s][10] == run.states[s][9]);
    }
    init[0] = 1.0;
    CHECK_THROWS_AS(simulate_ftcs(fp, init, 3), InvalidArgument);
    CHECK_THROWS_AS(simulate_ftcs(fp, std::vector<double>(5, 0.0), 3), GridMismatch);
}

TEST_CASE("ftcs decay tracks the first eigenvalue") {
    const double lam0 = heat_eigenvalues(kRod, 1)[0];
    std::vector<double> err;
    for (std::size_t m : {16u, 32u, 64u}) {
        const FtcsParams fp = FtcsParams::from_a(kRod, m, 0.25);
        std::vector<double> init;
        for (double x : heat_nodes(kRod, m)) init.push_back(std::sin(x / 2.0));
        const std::size_t steps = static_cast<std::size_t>(std::ceil(0.2 / fp.dt));
        const FtcsRun run = simulate_ftcs(fp, init, steps);
        const auto& a = run.states[steps - 1];
        const auto& b = run.states[steps];
        const double rate = std::log(b[m / 2] / a[m / 2]) / fp.dt;
        err.push_back(std::abs(rate - lam0));
    }
    CHECK(err[0] / err[1] >= 1.5);
    CHECK(err[1] / err[2] >= 1.5);
    CHECK(err[2] <= 0.05 * std::abs(lam0));
}

TEST_CASE("fold isometry") {
    const auto xs = heat_nodes({1.0, 2.0}, 20);
    const FoldResult z = fold_isometry(xs, constant(21, 0.0), constant(21, 0.0));
    CHECK(max_abs(z.left) == 0.0);
    CHECK(max_abs(z.right) == 0.0);
    CHECK(z.x_left.front() == -2.0);
    CHECK(z.x_left.back() == 0.0);

    const FoldResult k = fold_isometry(xs, constant(21, 1.5), constant(21, 1.5));
    CHECK(max_abs(k.left) == 0.0);
    for (Complex v : k.right) CHECK(std::abs(v - std::sqrt(2.0) * 1.5) < 1e-15);
    const double lhs = std::hypot(trapezoid_norm(k.x_left, k.left), trapezoid_norm(k.x_right, k.right));
    const double rhs = std::hypot(trapezoid_norm(xs, constant(21, 1.5)), trapezoid_norm(xs, constant(21, 1.5)));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));

    auto defect = [](std::size_t m) {
        const auto x = heat_nodes({1.0, 1.0}, m);
        std::vector<Complex> v1, v2;
        for (double t : x) {
            v1.push_back(std::exp(t) * Complex(1.0, 0.3));
            v2.push_back(std::sin(3.0 * t));
        }
        const FoldResult w = fold_isometry(x, v1, v2);
        const double nw = std::hypot(trapezoid_norm(w.x_left, w.left), trapezoid_norm(w.x_right, w.right));
        // exact ‖(v1, v2)‖² on [0, 1]
        const double exact = std::sqrt(1.09 * (std::exp(2.0) - 1.0) / 2.0 + 0.5 - std::sin(6.0) / 12.0);
        return std::abs(nw - exact);
    };
    const double ratio = defect(20) / defect(40);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.15));

    CHECK_THROWS_AS(fold_isometry(xs, constant(20, 0.0), constant(21, 0.0)), GridMismatch);
    std::vector<double> bent = xs;
    bent[3] += 0.01;
    CHECK_THROWS_AS(fold_isometry(bent, constant(21, 0.0), constant(21, 0.0)), GridMismatch);
}

TEST_CASE("enclosure check on a small discretization") {
    const GridSpec g = GridSpec::parse("-12:2:-4:4:29:17");
    const std::vector<double> eps{0.1, 0.25};
    const HeatEnclosureReport r = heat_enclosure_check(kRod, 16, g, eps);
    CHECK(r.points == g.size());
    CHECK(r.in_set > 0);
    CHECK(r.violations == 0);
    CHECK(r.spectrum.size() == 17);
    CHECK(heat_enclosure_check(kRod, 16, g, eps, true).violations == 0);
}

TEST_CASE("heat properties, seeded") {
    VerifyOptions opt;
    for (const char* name : {"eig-convergence", "ftcs-link", "green-convergence"}) {
        CAPTURE(name);
        const PropertyReport r = run_property(name, opt);
        CHECK(r.module == "heat");
        CHECK(r.failure_count == 0);
    }
}
}
