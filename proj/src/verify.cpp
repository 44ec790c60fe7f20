#include "pencilscope/verify.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "pencilscope/blockpencil.hpp"
#include "pencilscope/errors.hpp"
#include "pencilscope/heat.hpp"
#include "pencilscope/linalg.hpp"
#include "pencilscope/parallel.hpp"
#include "pencilscope/pencil.hpp"
#include "pencilscope/pseudogrid.hpp"
#include "pencilscope/random.hpp"

namespace pencilscope {

namespace {

constexpr std::size_t kKeptFailures = 20;

struct TrialOutcome {
    std::size_t checks = 0;
    std::vector<FailureRecord> failures;
    std::size_t diag_checks = 0;
    std::size_t diag_failures = 0;

    void check(bool ok, std::uint64_t trial, Complex lambda, double observed, double bound, std::string detail) {
        ++checks;
        if (!ok) failures.push_back({trial, lambda, observed, bound, std::move(detail)});
    }
};

using TrialFn = std::function<TrialOutcome(Rng&, std::uint64_t, const VerifyOptions&)>;

struct PropertyDef {
    const char* name;
    const char* module;
    bool single_run;  // deterministic sweep, trial count ignored
    TrialFn fn;
    const char* note = "";
};

double r_value(const ExtendedReal& e) {
    return e.value_or(std::numeric_limits<double>::infinity());
}

double rn(const Pencil& p, Complex z, unsigned n) {
    return r_value(pseudo_resolvent_norm(p, z, n));
}

bool rel_close(double a, double b, double tol) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

std::string level_tag(unsigned n) {
    return "n=" + std::to_string(n);
}

double dist_to(Complex z, const std::vector<Complex>& set) {
    double d = std::numeric_limits<double>::infinity();
    for (Complex s : set) d = std::min(d, std::abs(z - s));
    return d;
}

// --- pencil laws ---

TrialOutcome nesting(Rng& rng, std::uint64_t t, const VerifyOptions& o) {
    TrialOutcome out;
    const Pencil p = random_pencil(rng, o.dim);
    const Complex z = rng.complex_uniform_disk(2.0);
    for (unsigned n : o.levels) {
        const double a = rn(p, z, n), b = rn(p, z, n + 1);
        out.check(std::isinf(a) || b <= a * (1.0 + 1e-10), t, z, b, a, level_tag(n));
    }
    return out;
}

TrialOutcome eps_monotone(Rng& rng, std::uint64_t t, const VerifyOptions& o) {
    TrialOutcome out;
    const Pencil p = random_pencil(rng, o.dim);
    const Complex z = rng.complex_uniform_disk(2.0);
    for (unsigned n : o.levels) {
        const double r = rn(p, z, n);
        const double e1 = std::isinf(r) ? rng.uniform(0.01, 1.0) : rng.uniform(0.5, 1.5) / r;
        const double e2 = e1 * (1.0 + rng.uniform(0.0, 3.0));
        const bool in1 = r >= 1.0 / e1, in2 = r >= 1.0 / e2;
        out.check(!in1 || in2, t, z, e1, e2, level_tag(n));
    }
    return out;
}

TrialOutcome intersection(Rng& rng, std::uint64_t t, const VerifyOptions& o) {
    TrialOutcome out;
    const Pencil p = random_pencil(rng, o.dim);
    const std::vector<Complex> eig = eigenvalues(p);
    const Complex z = rng.complex_uniform_disk(2.0);
    for (unsigned n : o.levels) {
        if (dist_to(z, eig) > 1e-8) {
            const double r = rn(p, z, n);
            out.check(std::isfinite(r), t, z, r, 0.0, level_tag(n) + " finite off the spectrum");
        }
        for (Complex mu : eig) {
            const double r = rn(p, mu, n);
            out.check(r >= 1e6, t, mu, r, 1e6, level_tag(n) + " eigenvalue inside every small level");
        }
    }
    return out;
}

TrialOutcome disk_sum(Rng& rng, std::uint64_t t, const VerifyOptions& o) {
    TrialOutcome out;
    const Pencil p = random_pencil(rng, o.dim);
    const std::vector<Complex> eig = eigenvalues(p);
    const double bnorm = spectral_norm(p.b());
    for (unsigned n : o.levels) {
        const Complex mu0 = eig[static_cast<std::size_t>(rng.uniform() * static_cast<double>(eig.size()))];
        const Complex z = mu0 + rng.complex_uniform_disk(0.5);
        const double r = rn(p, z, n);
        if (std::isinf(r)) continue;
        const double eps = rng.uniform(1.0, 2.0) / r;  // z ∈ Λ_{n,ε}
        const double delta = rng.uniform(0.0, 0.5);
        const Complex shift = rng.complex_uniform_disk(delta);
        const double r0 = rn(p, z + shift, 0);
        const double bound = 1.0 / (eps + delta * bnorm);
        out.check(r0 >= bound * (1.0 - 1e-8), t, z + shift, r0, bound, level_tag(n));
    }
    return out;
}

TrialOutcome scaling(Rng& rng, std::uint64_t t, const VerifyOptions& o) {
    TrialOutcome out;
    const Pencil p = random_pencil(rng, o.dim);
    const Complex z = rng.complex_uniform_disk(2.0);
    const Complex alpha = std::polar(rng.uniform(0.2, 5.0), rng.uniform(0.0, 2 * std::numbers::pi));
    const Pencil q(alpha * p.a(), alpha * p.b());
    for (unsigned n : o.levels) {
        const double lhs = rn(q, z, n), rhs = rn(p, z, n) / std::abs(alpha);
        out.check(rel_close(lhs, rhs, 1e-10), t, z, lhs, rhs, level_tag(n));
    }
    return out;
}

TrialOutcome affine(Rng& rng, std::uint64_t t, const VerifyOptions& o) {
    TrialOutcome out;
    const Pencil p = random_pencil(rng, o.dim);
    const Complex z = rng.complex_uniform_disk(2.0);
    const Complex alpha = rng.complex_uniform_disk(1.0);
    const Complex beta = std::polar(rng.uniform(0.3, 3.0), rng.uniform(0.0, 2 * std::numbers::pi));
    const Pencil q(beta * p.a() + alpha * p.b(), p.b());
    for (unsigned n : o.levels) {
        const double lhs = rn(q, z, n), rhs = rn(p, (z - alpha) / beta, n) / std::abs(beta);
        out.check(rel_close(lhs, rhs, 1e-10), t, z, lhs, rhs, level_tag(n));
    }
    return out;
}

TrialOutcome adjoint(Rng& rng, std::uint64_t t, const VerifyOptions& o) {
    TrialOutcome out;
    const Pencil p = random_pencil(rng, o.dim);
    const Pencil q(p.a().adjoint(), p.b().adjoint());
    const Complex z = rng.complex_uniform_disk(2.0);
    for (unsigned n : o.levels) {
        const double lhs = rn(q, std::conj(z), n), rhs = rn(p, z, n);
        out.check(rel_close(lhs, rhs, 1e-10), t, z, lhs, rhs, level_tag(n));
    }
    return out;
}

TrialOutcome lemma(Rng& rng, std::uint64_t t, const VerifyOptions& o) {
    TrialOutcome out;
    constexpr double eps = 0.3;
    const Pencil p = random_pencil(rng, o.dim);
    CMatrix c = random_matrix(rng, o.dim, o.dim);
    c *= eps * rng.uniform(0.5, 1.0) / spectral_norm(c);
    const Pencil perturbed(p.a() + c, p.b());
    for (Complex mu : eigenvalues(perturbed)) {
        const double smin = extreme_singular_values(p.at(mu)).sigma_min;
        out.check(smin <= eps * (1.0 + 1e-6), t, mu, smin, eps, "sigma_min(mu B - A)");
    }
    return out;
}

TrialOutcome self_adjoint(Rng& rng, std::uint64_t t, const VerifyOptions& o) {
    TrialOutcome out;
    const Pencil p = random_hermitian_commuting_pencil(rng, o.dim);
    const std::vector<Complex> eig = eigenvalues(p);
    const CMatrix binv = inverse(p.b());
    for (unsigned n : o.levels) {
        const double factor = std::exp(scaled_square_power(binv, n) / std::ldexp(1.0, static_cast<int>(n)));
        const Complex mu0 = eig[static_cast<std::size_t>(rng.uniform() * static_cast<double>(eig.size()))];
        const Complex z = mu0 + rng.complex_uniform_disk(1.0);
        const double r = rn(p, z, n);
        if (std::isinf(r)) continue;
        const double eps = rng.uniform(1.0, 2.0) / r;
        const double d = dist_to(z, eig);
        out.check(d <= eps * factor * (1.0 + 1e-8), t, z, d, eps * factor, level_tag(n));
    }
    return out;
}

TrialOutcome equivalence(Rng& rng, std::uint64_t t, const VerifyOptions& o) {
    TrialOutcome out;
    const Pencil p = random_pencil(rng, o.dim);
    const Complex z = rng.complex_uniform_disk(2.0);
    const double r0 = rn(p, z, 0);
    const double alt = std::exp(scaled_square_power(inverse(p.at(z)), 0));
    out.check(rel_close(r0, alt, 1e-8), t, z, r0, alt, "r_0 vs ||inverse||");
    for (unsigned n : o.levels) {
        const double r = rn(p, z, n);
        const double target = std::exp(-std::ldexp(1.0, static_cast<int>(n)) * std::log(r));
        const Witness w = perturbation_witness(p, z, n);
        out.check(rel_close(w.e_norm, target, 1e-8), t, z, w.e_norm, target, level_tag(n) + " ||E||");
        out.check(w.defect <= 1e-10, t, z, w.defect, 1e-10, level_tag(n) + " defect");
        out.check(std::abs(vector_norm(w.u) - 1.0) <= 1e-12, t, z, vector_norm(w.u), 1.0, level_tag(n) + " ||u||");
        // characterization via ‖(zB−A)^{2ⁿ}u‖ ≤ ε^{2ⁿ} at ε = 1/r_n
        std::vector<Complex> mu = w.u;
        const CMatrix m = p.at(z);
        for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) mu = multiply(m, mu);
        const double img = vector_norm(mu);
        out.check(img <= target * (1.0 + 1e-8) + 1e-10, t, z, img, target, level_tag(n) + " ||M^(2^n) u||");
    }
    return out;
}

// --- block pencil ---

constexpr std::size_t kBlock = 3;

TrialOutcome fbs_equivalence(Rng& rng, std::uint64_t t, const VerifyOptions&) {
    TrialOutcome out;
    const BlockPencil bp = random_block_pencil(rng, kBlock);
    const Pencil full = assemble(bp);
    std::vector<Complex> pts;
    for (int k = 0; k < 20; ++k) pts.push_back(rng.complex_uniform_disk(2.0));
    for (Complex mu : eigenvalues(full)) pts.push_back(mu);
    for (Complex z : pts) {
        const CMatrix m = full.at(z);
        const double scale = frobenius_norm(m);
        const double smin = extreme_singular_values(m).sigma_min;
        const bool full_singular = smin <= 1e-8 * scale;
        for (Complement c : {Complement::first, Complement::second}) {
            bool schur_singular = false;
            try {
                resolvent_via_schur(bp, z, c);
            } catch (const AtPivotSpectrum&) {
                continue;
            } catch (const SchurSingular&) {
                schur_singular = true;
            }
            out.check(schur_singular == full_singular, t, z, smin, 1e-8 * scale, to_string(c) + " complement");
        }
    }
    return out;
}

EnclosureSweep sweep(const BlockPencil& bp, Complement c, unsigned n, InflationRule rule) {
    const GridSpec g{-3.0, 3.0, -3.0, 3.0, 41, 41};
    const double eps[] = {0.1, 0.3};
    EnclosureOptions opt;
    opt.complement = c;
    opt.n = n;
    opt.rule = rule;
    return enclosure_sweep(bp, g, eps, opt);
}

void record_sweep(TrialOutcome& out, std::uint64_t t, const EnclosureSweep& s, const std::string& tag) {
    out.checks += s.in_set;
    for (std::size_t k = 0; k < s.violations; ++k) {
        FailureRecord f{t, {}, 0.0, 0.0, tag};
        if (k < s.failures.size()) {
            const EnclosurePoint& p = s.failures[k];
            f.lambda = p.lambda;
            f.observed = std::max(p.pivot, p.schur);
            f.bound = -std::log10(p.epsilon) - std::log10(p.inflation);
            f.detail = tag + " eps=" + std::to_string(p.epsilon) + " (log10 r)";
        }
        out.failures.push_back(std::move(f));
    }
}

TrialOutcome pseu(Rng& rng, std::uint64_t t, const VerifyOptions&) {
    TrialOutcome out;
    const BlockPencil bp = random_block_pencil(rng, kBlock);
    for (Complement c : {Complement::first, Complement::second})
        record_sweep(out, t, sweep(bp, c, 0, InflationRule::stated), to_string(c) + " complement");
    return out;
}

BlockPencil commuting_family(Rng& rng, std::uint64_t t) {
    return t % 2 == 0 ? commuting_block_pencil(rng, kBlock) : shifted_copy_block_pencil(rng, kBlock, rng.uniform(0.2, 0.8));
}

bool hypotheses_hold(Rng& rng, const BlockPencil& bp, Complement c) {
    for (int k = 0; k < 4; ++k) {
        try {
            if (!verify_hypotheses(bp, rng.complex_uniform_disk(2.0), c).all()) return false;
        } catch (const AtPivotSpectrum&) {
        }
    }
    return true;
}

// Stated inflation is checked; the corrected inflation runs alongside as a diagnostic.
TrialOutcome npseu(Rng& rng, std::uint64_t t, const VerifyOptions& o) {
    TrialOutcome out;
    const BlockPencil bp = commuting_family(rng, t);
    for (Complement c : {Complement::first, Complement::second}) {
        if (!hypotheses_hold(rng, bp, c)) continue;
        for (unsigned n : o.levels) {
            record_sweep(out, t, sweep(bp, c, n, InflationRule::stated), to_string(c) + " " + level_tag(n));
            const EnclosureSweep alt = sweep(bp, c, n, InflationRule::corrected);
            out.diag_checks += alt.in_set;
            out.diag_failures += alt.violations;
        }
    }
    return out;
}

TrialOutcome spectral_inclusion(Rng& rng, std::uint64_t t, const VerifyOptions&) {
    TrialOutcome out;
    const BlockPencil bp = random_block_pencil(rng, kBlock);
    for (Complex mu : eigenvalues(assemble(bp))) {
        double ind;
        try {
            ind = spectral_indicator(bp, mu);
        } catch (const AtPivotSpectrum&) {
            continue;
        }
        out.check(ind >= 1.0 - 1e-8, t, mu, ind, 1.0 - 1e-8, "indicator at eigenvalue");
    }
    return out;
}

// --- heat ---

const HeatParams kRod{1.0, std::numbers::pi};

Complex nearest(const std::vector<Complex>& set, double target) {
    Complex best = set.front();
    for (Complex z : set)
        if (std::abs(z - target) < std::abs(best - target)) best = z;
    return best;
}

TrialOutcome eig_convergence(Rng&, std::uint64_t t, const VerifyOptions&) {
    TrialOutcome out;
    const std::vector<double> exact = heat_eigenvalues(kRod, 2);
    std::vector<std::array<double, 2>> err;
    for (std::size_t m : {16, 32, 64, 128}) {
        const std::vector<Complex> eig = eigenvalues(assemble(heat_pencil_matrices(kRod, m)));
        err.push_back({std::abs(nearest(eig, exact[0]) - exact[0]), std::abs(nearest(eig, exact[1]) - exact[1])});
    }
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t i = 0; i + 1 < err.size(); ++i) {
            const double ratio = err[i][k] / err[i + 1][k];
            out.check(ratio >= 2.8, t, exact[k], ratio, 2.8, "lambda_" + std::to_string(k) + " ratio m=" +
                                                                  std::to_string(16 << i) + "->" +
                                                                  std::to_string(32 << i));
        }
    }
    return out;
}

// log of per-step decay over the last step, divided by δt.
double ftcs_rate(std::size_t m, std::size_t mode, double t_end) {
    const FtcsParams fp = FtcsParams::from_a(kRod, m, 0.25);
    const std::vector<double> xs = heat_nodes(kRod, m);
    std::vector<double> init(m + 1);
    const double w = (static_cast<double>(mode) + 0.5) * std::numbers::pi / kRod.d;
    for (std::size_t i = 0; i <= m; ++i) init[i] = std::sin(w * xs[i]);
    init[0] = 0.0;
    const auto steps = static_cast<std::size_t>(std::ceil(t_end / fp.dt));
    const FtcsRun run = simulate_ftcs(fp, init, steps);
    const auto& a = run.states[run.states.size() - 2];
    const auto& b = run.states.back();
    double na = 0, nb = 0;
    for (std::size_t i = 0; i <= m; ++i) na += a[i] * a[i], nb += b[i] * b[i];
    return 0.5 * std::log(nb / na) / fp.dt;
}

TrialOutcome ftcs_link(Rng&, std::uint64_t t, const VerifyOptions&) {
    TrialOutcome out;
    const std::vector<double> exact = heat_eigenvalues(kRod, 2);
    for (std::size_t k = 0; k < 2; ++k) {
        std::vector<double> err;
        for (std::size_t m : {16, 32, 64, 128}) err.push_back(std::abs(ftcs_rate(m, k, 0.2) - exact[k]));
        for (std::size_t i = 0; i + 1 < err.size(); ++i) {
            const double ratio = err[i] / err[i + 1];
            out.check(ratio >= 1.5, t, exact[k], ratio, 1.5, "decay rate mode " + std::to_string(k));
        }
        out.check(err.back() <= 0.05 * std::abs(exact[k]), t, exact[k], err.back(), 0.05 * std::abs(exact[k]),
                  "decay rate error at m=128, mode " + std::to_string(k));
    }
    return out;
}

TrialOutcome thm1(Rng&, std::uint64_t t, const VerifyOptions&) {
    TrialOutcome out;
    const GridSpec g{-12.0, 2.0, -4.0, 4.0, 101, 101};
    const double eps[] = {0.1, 0.25};
    const HeatEnclosureReport rep = heat_enclosure_check(kRod, 64, g, eps);
    out.checks = rep.in_set;
    for (std::size_t k = 0; k < rep.violations; ++k)
        out.failures.push_back({t, {}, rep.worst_ratio, 1.0, "dist/(eps(1+delta1)) > 1"});
    return out;
}

// max |u_green − u_discrete| for λ=1, c=1, d=1, f≡1
double green_gap(std::size_t m) {
    const HeatParams hp{1.0, 1.0};
    const Complex lambda = 1.0;
    const double h = hp.d / static_cast<double>(m);
    const std::vector<Complex> f(m + 1, 1.0);
    const GreenResult g = green_resolvent_apply(hp, lambda, f);
    CMatrix sys(m + 1, m + 1);
    CMatrix rhs(m + 1, 1);
    const double s = hp.c * hp.c / (h * h);
    for (std::size_t i = 1; i < m; ++i) {
        sys(i - 1, i - 1) = -s;
        sys(i - 1, i) = lambda + 2.0 * s;
        sys(i - 1, i + 1) = -s;
        rhs(i - 1, 0) = f[i];
    }
    sys(m - 1, m) = 1.0;  // u(d) = 0
    sys(m, m) = 3.0 / (2 * h);
    sys(m, m - 1) = -4.0 / (2 * h);
    sys(m, m - 2) = 1.0 / (2 * h);  // u'(d) = 0
    const CMatrix u = lu_solve(sys, rhs);
    double gap = 0.0;
    for (std::size_t i = 0; i <= m; ++i) gap = std::max(gap, std::abs(u(i, 0) - g.u[i]));
    return gap;
}

TrialOutcome green_convergence(Rng&, std::uint64_t t, const VerifyOptions&) {
    TrialOutcome out;
    std::vector<double> gaps;
    for (std::size_t m : {16, 32, 64, 128}) gaps.push_back(green_gap(m));
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
        const double ratio = gaps[i] / gaps[i + 1];
        out.check(ratio >= 3.0 && ratio <= 5.0, t, 1.0, ratio, 4.0, "gap ratio m=" + std::to_string(16 << i));
    }
    return out;
}

const std::vector<PropertyDef>& registry() {
    static const std::vector<PropertyDef> defs = {
        {"nesting", "pencil", false, nesting},
        {"eps-monotone", "pencil", false, eps_monotone},
        {"intersection", "pencil", false, intersection},
        {"disk-sum", "pencil", false, disk_sum},
        {"scaling", "pencil", false, scaling},
        {"affine", "pencil", false, affine},
        {"adjoint", "pencil", false, adjoint},
        {"lemma", "pencil", false, lemma},
        {"self-adjoint", "pencil", false, self_adjoint},
        {"equivalence", "pencil", false, equivalence},
        {"fbs-equivalence", "blockpencil", false, fbs_equivalence},
        {"pseu", "blockpencil", false, pseu},
        {"npseu", "blockpencil", false, npseu,
         "inflation ((1+d1^(2^n))(1+d2^(2^n)))^(1/2^n); diagnostic uses ((1+2^n d1)(1+2^n d2))^(1/2^n)"},
        {"spectral-inclusion", "blockpencil", false, spectral_inclusion},
        {"eig-convergence", "heat", true, eig_convergence},
        {"ftcs-link", "heat", true, ftcs_link},
        {"thm1", "heat", true, thm1},
        {"green-convergence", "heat", true, green_convergence},
    };
    return defs;
}

const PropertyDef& find(const std::string& name) {
    for (const auto& d : registry())
        if (name == d.name) return d;
    throw InvalidArgument("unknown property '" + name + "'");
}

}  // namespace

std::vector<std::string> property_names() {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.emplace_back(d.name);
    return out;
}

bool is_property(const std::string& name) {
    return std::any_of(registry().begin(), registry().end(), [&](const PropertyDef& d) { return name == d.name; });
}

PropertyReport run_property(const std::string& name, const VerifyOptions& opt) {
    const PropertyDef& def = find(name);
    const auto start = std::chrono::steady_clock::now();
    const std::size_t trials = def.single_run ? 1 : opt.trials;
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, [&](std::size_t k) {
        Rng rng = Rng::substream(opt.seed, k);
        outcomes[k] = def.fn(rng, k, opt);
    });
    PropertyReport rep;
    rep.name = def.name;
    rep.module = def.module;
    rep.note = def.note;
    rep.trials = trials;
    for (auto& o : outcomes) {
        rep.checks += o.checks;
        rep.failure_count += o.failures.size();
        rep.diagnostic_checks += o.diag_checks;
        rep.diagnostic_failures += o.diag_failures;
        for (auto& f : o.failures)
            if (rep.failures.size() < kKeptFailures) rep.failures.push_back(std::move(f));
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<PropertyReport> run_all(const VerifyOptions& opt) {
    std::vector<PropertyReport> out;
    for (const auto& d : registry()) out.push_back(run_property(d.name, opt));
    return out;
}

std::string verify_report_json(const std::vector<PropertyReport>& reports, const VerifyOptions& opt) {
    using nlohmann::json;
    json j;
    j["seed"] = opt.seed;
    j["trials"] = opt.trials;
    j["dim"] = opt.dim;
    j["levels"] = opt.levels;
    bool all = true;
    json props = json::array();
    for (const auto& r : reports) {
        all = all && r.passed();
        json fails = json::array();
        for (const auto& f : r.failures) {
            fails.push_back({{"trial", f.trial},
                             {"lambda", {f.lambda.real(), f.lambda.imag()}},
                             {"observed", f.observed},
                             {"bound", f.bound},
                             {"detail", f.detail}});
        }
        json p = {{"name", r.name},       {"module", r.module},           {"trials", r.trials},
                  {"checks", r.checks},   {"failures", r.failure_count},  {"passed", r.passed()},
                  {"failure_records", fails}};
        if (!r.note.empty()) p["note"] = r.note;
        if (r.diagnostic_checks > 0) {
            p["diagnostic"] = {{"checks", r.diagnostic_checks}, {"failures", r.diagnostic_failures}};
        }
        props.push_back(std::move(p));
    }
    j["properties"] = std::move(props);
    j["passed"] = all;
    return j.dump(2) + "\n";
}

}  // namespace pencilscope
