// pencilscope: spectra and (n,eps)-pseudospectra of matrix pencils.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pencilscope/blockpencil.hpp"
#include "pencilscope/errors.hpp"
#include "pencilscope/heat.hpp"
#include "pencilscope/matrix_io.hpp"
#include "pencilscope/pencil.hpp"
#include "pencilscope/pseudogrid.hpp"
#include "pencilscope/render.hpp"
#include "pencilscope/verify.hpp"

namespace fs = std::filesystem;
using namespace pencilscope;

namespace {

struct PropertyFailure : Error {
    using Error::Error;
};

void stage(const std::string& msg) {
    std::cerr << "[pencilscope] " << msg << "\n";
}

std::vector<double> parse_eps(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string t; std::getline(ss, t, ',');) {
        char* end = nullptr;
        const double v = std::strtod(t.c_str(), &end);
        if (t.empty() || *end != '\0' || !(v > 0.0)) throw InvalidArgument("bad epsilon '" + t + "'");
        out.push_back(v);
    }
    if (out.empty()) throw InvalidArgument("empty epsilon list");
    return out;
}

std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string complex_text(Complex z) {
    return format_double(z.real()) + " " + format_double(z.imag());
}

// Reads a field CSV written by `grid` back onto the grid it was sampled on.
Field read_field_csv(const fs::path& path, const GridSpec& g, unsigned n) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    LineReader lines(in);
    if (lines.next("CSV header") != "re,im,log10r") throw pencilscope::ParseError(lines.line(), "expected header re,im,log10r");
    Field f{g, n, std::vector<ExtendedReal>(g.size())};
    for (std::size_t k = 0; k < g.size(); ++k) {
        const std::string row = lines.next("field row");
        std::stringstream ss(row);
        std::string re, im, val;
        if (!std::getline(ss, re, ',') || !std::getline(ss, im, ',') || !std::getline(ss, val)) {
            throw pencilscope::ParseError(lines.line(), "expected re,im,log10r");
        }
        const Complex z = g.point(k);
        if (std::abs(std::strtod(re.c_str(), nullptr) - z.real()) > 1e-12 * (1 + std::abs(z.real())) ||
            std::abs(std::strtod(im.c_str(), nullptr) - z.imag()) > 1e-12 * (1 + std::abs(z.imag()))) {
            throw GridMismatch("field CSV does not match --grid at line " + std::to_string(lines.line()));
        }
        f.values[k] = val == "inf" ? ExtendedReal::infinity() : ExtendedReal(std::strtod(val.c_str(), nullptr));
    }
    return f;
}

// Expands the eigenvalue bounding box until the largest level set stays clear of the frame.
GridSpec auto_bounds(const Pencil& p, const std::vector<Complex>& eig, double max_eps, std::size_t samples) {
    double lo_re = eig.front().real(), hi_re = lo_re, lo_im = eig.front().imag(), hi_im = lo_im;
    for (Complex z : eig) {
        lo_re = std::min(lo_re, z.real());
        hi_re = std::max(hi_re, z.real());
        lo_im = std::min(lo_im, z.imag());
        hi_im = std::max(hi_im, z.imag());
    }
    const double span = std::max(hi_re - lo_re, hi_im - lo_im);
    double pad = 0.1 * span + 2.0 * max_eps;
    const double level = -std::log10(max_eps);
    for (int attempt = 0; attempt < 12; ++attempt) {
        GridSpec g{lo_re - pad, hi_re + pad, lo_im - pad, hi_im + pad, 41, 41};
        const Field f = evaluate_field(p, g, 0);
        bool touches = false;
        for (std::size_t j = 0; j < g.n_im && !touches; ++j) {
            for (std::size_t i = 0; i < g.n_re; ++i) {
                if (i != 0 && j != 0 && i + 1 != g.n_re && j + 1 != g.n_im) continue;
                if (f.at(i, j) >= ExtendedReal(level)) {
                    touches = true;
                    break;
                }
            }
        }
        if (!touches) {
            g.n_re = g.n_im = samples;
            return g;
        }
        pad *= 1.5;
    }
    throw InvalidArgument("could not find grid bounds enclosing the largest level set");
}

struct ContourJob {
    Pencil pencil;
    GridSpec grid;
    unsigned n;
    std::vector<double> eps;
    std::string title;
};

void write_contours(const ContourJob& job, const Field& field, const fs::path& svg, const fs::path& json) {
    const CenterSampler center = [&](Complex z) {
        return log10_pseudo_resolvent_norm(job.pencil, z, job.n).value_or(1e300);
    };
    const ContourSet cs = extract_contours(field, job.eps, center);
    for (const auto& l : cs.levels)
        if (l.empty_level) stage("level eps=" + format_double(l.epsilon) + " does not meet the grid");
    std::vector<Complex> eig;
    try {
        eig = eigenvalues(job.pencil);
    } catch (const SingularB&) {
        eig = locate_eigenvalues(job.pencil, job.grid);
    }
    write_text_file(svg, render_svg(cs, eig, job.grid, job.title));
    write_text_file(json, contours_json(cs));
    stage("wrote " + svg.string() + " and " + json.string());
}

Pencil ftcs_pencil(std::size_t m, double a) {
    const HeatParams hp{1.0, 1.0};
    const CMatrix t = ftcs_matrix(FtcsParams::from_a(hp, m, a));
    return Pencil(t, CMatrix::identity(t.rows()));
}

void run_preset(const fs::path& out) {
    // T is (m+1)×(m+1); the figures use the 10×10 case.
    constexpr std::size_t m = 9;
    const std::vector<double> eps{0.25, 0.5};
    for (double a : {5.0, 10.0}) {
        const Pencil p = ftcs_pencil(m, a);
        const std::vector<Complex> eig = eigenvalues(p);
        const GridSpec g = auto_bounds(p, eig, 0.5, 201);
        stage("paper-fig a=" + fmt15(a) + " grid " + g.to_string());
        const Field field = evaluate_field(p, g, 0);
        const std::string tag = "paper-fig-a" + fmt15(a);
        write_text_file(out / (tag + ".csv"), field_csv(field));
        ContourJob job{p, g, 0, eps, "FTCS T 10x10, a=" + fmt15(a)};
        write_contours(job, field, out / (tag + ".svg"), out / (tag + ".json"));
    }
}

std::vector<double> read_initial(const std::string& spec, const HeatParams& hp, std::size_t m) {
    std::vector<double> v;
    if (spec.rfind("mode:", 0) == 0) {
        const long k = std::strtol(spec.c_str() + 5, nullptr, 10);
        if (k < 0) throw InvalidArgument("mode index must be nonnegative");
        const double w = (static_cast<double>(k) + 0.5) * std::numbers::pi / hp.d;
        for (double x : heat_nodes(hp, m)) v.push_back(std::sin(w * x));
        v[0] = 0.0;
        return v;
    }
    std::ifstream in(spec);
    if (!in) throw IoError("cannot open '" + spec + "'");
    LineReader lines(in);
    try {
        while (true) {
            std::stringstream ss(lines.next("state values"));
            for (std::string t; ss >> t;) {
                char* end = nullptr;
                const double x = std::strtod(t.c_str(), &end);
                if (*end != '\0' || !std::isfinite(x)) {
                    throw pencilscope::ParseError(lines.line(), "bad state value '" + t + "'");
                }
                v.push_back(x);
            }
        }
    } catch (const pencilscope::ParseError& e) {
        if (std::string(e.what()).find("unexpected end of input") == std::string::npos) throw;
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra and pseudospectra of matrix pencils"};
    app.require_subcommand(1);

    std::string pencil_path, field_path, grid_text = "-2:2:-2:2:201:201", eps_text = "0.25,0.5", out_dir = ".";
    std::string preset;
    unsigned level = 0;

    auto* grid_cmd = app.add_subcommand("grid", "Sample log10 r_n on a grid and write field.csv");
    grid_cmd->add_option("--pencil", pencil_path, "CPENCIL v1 file")->required();
    grid_cmd->add_option("--grid", grid_text, "reMin:reMax:imMin:imMax:nRe:nIm");
    grid_cmd->add_option("--n", level, "level n");
    grid_cmd->add_option("--out", out_dir, "output directory");

    auto* contour_cmd = app.add_subcommand("contour", "Extract level sets and render SVG/JSON");
    contour_cmd->add_option("--pencil", pencil_path, "CPENCIL v1 file");
    contour_cmd->add_option("--field", field_path, "field.csv from `grid` (recomputed if absent)");
    contour_cmd->add_option("--grid", grid_text, "reMin:reMax:imMin:imMax:nRe:nIm");
    contour_cmd->add_option("--n", level, "level n");
    contour_cmd->add_option("--eps", eps_text, "comma-separated epsilons");
    contour_cmd->add_option("--out", out_dir, "output directory");
    contour_cmd->add_option("--preset", preset, "paper-fig")->check(CLI::IsMember({"paper-fig"}));

    auto* eig_cmd = app.add_subcommand("eig", "Generalized eigenvalues");
    eig_cmd->add_option("--pencil", pencil_path, "CPENCIL v1 file")->required();
    eig_cmd->add_option("--grid", grid_text, "grid for localization when B is singular");

    std::string block_path, complement_text = "second";
    bool sup_radius = false;
    auto* encl_cmd = app.add_subcommand("enclosure", "Block-pencil enclosure sweep");
    encl_cmd->add_option("--block", block_path, "CPENCIL-BLOCK v1 file")->required();
    encl_cmd->add_option("--grid", grid_text, "reMin:reMax:imMin:imMax:nRe:nIm");
    encl_cmd->add_option("--eps", eps_text, "comma-separated epsilons");
    encl_cmd->add_option("--n", level, "level n");
    encl_cmd->add_option("--complement", complement_text, "first|second");
    encl_cmd->add_flag("--sup-radius", sup_radius, "use grid-supremum deltas");
    encl_cmd->add_option("--out", out_dir, "output directory");

    double c = 1.0, d = 1.0, a = -1.0, dt = -1.0;
    std::size_t count = 5, m = 10, steps = 10;
    std::string initial = "mode:0";
    auto* heat_cmd = app.add_subcommand("heat", "Heat-equation pencil");
    heat_cmd->require_subcommand(1);
    auto* heat_eig = heat_cmd->add_subcommand("eig", "Closed-form eigenvalues");
    heat_eig->add_option("--c", c, "c");
    heat_eig->add_option("--d", d, "rod length");
    heat_eig->add_option("--count", count, "how many");
    auto* heat_fdm = heat_cmd->add_subcommand("fdm", "Write the FTCS matrix T as a pencil (T, I)");
    heat_fdm->add_option("--m", m, "grid intervals");
    heat_fdm->add_option("--a", a, "c^2 dt/dx^2");
    heat_fdm->add_option("--dt", dt, "time step");
    heat_fdm->add_option("--c", c, "c");
    heat_fdm->add_option("--d", d, "rod length");
    heat_fdm->add_option("--out", out_dir, "output directory");
    auto* heat_sim = heat_cmd->add_subcommand("simulate", "Run FTCS and dump states");
    heat_sim->add_option("--m", m, "grid intervals");
    heat_sim->add_option("--a", a, "c^2 dt/dx^2");
    heat_sim->add_option("--dt", dt, "time step");
    heat_sim->add_option("--c", c, "c");
    heat_sim->add_option("--d", d, "rod length");
    heat_sim->add_option("--steps", steps, "time steps");
    heat_sim->add_option("--initial", initial, "file of m+1 values or mode:k");
    heat_sim->add_option("--out", out_dir, "output directory");
    auto* heat_encl = heat_cmd->add_subcommand("enclosure", "Distance check of the pseudospectrum to c^2 sigma(D2)");
    std::size_t heat_m = 64;
    std::string heat_grid = "-12:2:-4:4:101:101", heat_eps = "0.1,0.25";
    double heat_d = std::numbers::pi;
    heat_encl->add_option("--m", heat_m, "grid intervals");
    heat_encl->add_option("--c", c, "c");
    heat_encl->add_option("--d", heat_d, "rod length");
    heat_encl->add_option("--grid", heat_grid, "reMin:reMax:imMin:imMax:nRe:nIm");
    heat_encl->add_option("--eps", heat_eps, "comma-separated epsilons");
    heat_encl->add_flag("--sup-radius", sup_radius, "use the grid supremum of delta1");
    heat_encl->add_option("--out", out_dir, "output directory");

    std::vector<std::string> props{"all"};
    std::uint64_t seed = 7;
    std::size_t trials = 100, dim = 6;
    auto* verify_cmd = app.add_subcommand("verify", "Run the seeded property suite");
    verify_cmd->add_option("properties", props, "property names or 'all'");
    verify_cmd->add_option("--seed", seed, "seed");
    verify_cmd->add_option("--trials", trials, "trials per property");
    verify_cmd->add_option("--dim", dim, "random pencil dimension");
    verify_cmd->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const fs::path out(out_dir);
    try {
        if (*grid_cmd) {
            const Pencil p = load_pencil(pencil_path);
            const GridSpec g = GridSpec::parse(grid_text);
            stage("evaluating " + std::to_string(g.size()) + " points at n=" + std::to_string(level));
            const Field f = evaluate_field(p, g, level);
            write_text_file(out / "field.csv", field_csv(f));
            stage("wrote " + (out / "field.csv").string());
        } else if (*contour_cmd) {
            if (preset == "paper-fig") {
                run_preset(out);
                return 0;
            }
            if (pencil_path.empty()) throw InvalidArgument("contour needs --pencil (or --preset paper-fig)");
            const Pencil p = load_pencil(pencil_path);
            const GridSpec g = GridSpec::parse(grid_text);
            const Field f = field_path.empty() ? evaluate_field(p, g, level) : read_field_csv(field_path, g, level);
            ContourJob job{p, g, level, parse_eps(eps_text), ""};
            write_contours(job, f, out / "contours.svg", out / "contours.json");
        } else if (*eig_cmd) {
            const Pencil p = load_pencil(pencil_path);
            std::vector<Complex> eig;
            try {
                eig = eigenvalues(p);
            } catch (const SingularB&) {
                stage("B is singular; locating eigenvalues on " + grid_text);
                eig = locate_eigenvalues(p, GridSpec::parse(grid_text));
            }
            for (Complex z : eig) std::cout << complex_text(z) << "\n";
        } else if (*encl_cmd) {
            const BlockPencil bp = load_block_pencil(block_path);
            const GridSpec g = GridSpec::parse(grid_text);
            EnclosureOptions opt;
            opt.complement = parse_complement(complement_text);
            opt.n = level;
            opt.sup_radius = sup_radius;
            const std::vector<double> eps = parse_eps(eps_text);
            const EnclosureSweep s = enclosure_sweep(bp, g, eps, opt);
            nlohmann::json j = {{"grid", g.to_string()},     {"complement", to_string(opt.complement)},
                                {"n", level},                {"mode", sup_radius ? "sup" : "pointwise"},
                                {"epsilons", eps},           {"points", s.points},
                                {"skipped", s.skipped},      {"in_set", s.in_set},
                                {"violations", s.violations}, {"sup_delta1", s.sup_delta1},
                                {"sup_delta2", s.sup_delta2}};
            nlohmann::json fails = nlohmann::json::array();
            for (const auto& f : s.failures) {
                fails.push_back({{"lambda", {f.lambda.real(), f.lambda.imag()}}, {"epsilon", f.epsilon},
                                 {"log10_full", f.full_infinite ? nlohmann::json("inf") : nlohmann::json(f.full)},
                                 {"log10_pivot", f.pivot}, {"log10_schur", f.schur}, {"delta1", f.delta1},
                                 {"delta2", f.delta2}, {"inflation", f.inflation}});
            }
            j["failures"] = fails;
            write_text_file(out / "enclosure.json", j.dump(2) + "\n");
            std::cout << "in_set " << s.in_set << " violations " << s.violations << " skipped " << s.skipped << "\n";
            if (s.violations) throw PropertyFailure("enclosure violated; see " + (out / "enclosure.json").string());
        } else if (*heat_cmd) {
            if (*heat_eig) {
                for (double v : heat_eigenvalues({c, d}, count)) std::cout << fmt15(v) << "\n";
            } else if (*heat_fdm || *heat_sim) {
                const HeatParams hp{c, d};
                if ((a >= 0) == (dt > 0)) throw InvalidArgument("give exactly one of --a or --dt");
                const FtcsParams fp = a >= 0 ? FtcsParams::from_a(hp, m, a) : FtcsParams::from_dt(hp, m, dt);
                if (*heat_fdm) {
                    const CMatrix t = ftcs_matrix(fp);
                    std::ostringstream ss;
                    write_pencil(ss, Pencil(t, CMatrix::identity(t.rows())));
                    write_text_file(out / "ftcs.pencil", ss.str());
                    stage("wrote " + (out / "ftcs.pencil").string() + " (a=" + format_double(fp.a) + ")");
                } else {
                    const FtcsRun run = simulate_ftcs(fp, read_initial(initial, hp, m), steps);
                    if (run.unstable) stage("a=" + format_double(fp.a) + " > 1/2: the scheme is unstable");
                    const std::vector<double> xs = heat_nodes(hp, m);
                    std::string csv = "x";
                    for (std::size_t s = 0; s < run.states.size(); ++s) csv += ",step" + std::to_string(s);
                    csv += "\n";
                    for (std::size_t i = 0; i <= m; ++i) {
                        csv += format_double(xs[i]);
                        for (const auto& st : run.states) csv += "," + format_double(st[i]);
                        csv += "\n";
                    }
                    write_text_file(out / "states.csv", csv);
                    stage("wrote " + (out / "states.csv").string());
                }
            } else if (*heat_encl) {
                const GridSpec g = GridSpec::parse(heat_grid);
                const std::vector<double> eps = parse_eps(heat_eps);
                const HeatEnclosureReport rep = heat_enclosure_check({c, heat_d}, heat_m, g, eps, sup_radius);
                const nlohmann::json j = {{"m", heat_m},           {"grid", g.to_string()},
                                          {"epsilons", eps},       {"mode", sup_radius ? "sup" : "pointwise"},
                                          {"points", rep.points},  {"skipped", rep.skipped},
                                          {"in_set", rep.in_set},  {"violations", rep.violations},
                                          {"worst_ratio", rep.worst_ratio}, {"sup_delta1", rep.sup_delta1}};
                write_text_file(out / "heat_enclosure.json", j.dump(2) + "\n");
                std::cout << "in_set " << rep.in_set << " violations " << rep.violations << " worst_ratio "
                          << fmt15(rep.worst_ratio) << "\n";
                if (rep.violations) throw PropertyFailure("heat enclosure violated");
            }
        } else if (*verify_cmd) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.trials = trials;
            opt.dim = dim;
            std::vector<std::string> names;
            for (const auto& p : props) {
                if (p == "all") {
                    const auto all = property_names();
                    names.insert(names.end(), all.begin(), all.end());
                } else if (!is_property(p)) {
                    throw InvalidArgument("unknown property '" + p + "'");
                } else {
                    names.push_back(p);
                }
            }
            std::vector<PropertyReport> reports;
            bool ok = true;
            for (const auto& name : names) {
                reports.push_back(run_property(name, opt));
                const auto& r = reports.back();
                ok = ok && r.passed();
                std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " checks=" << r.checks
                          << " failures=" << r.failure_count << " time=" << fmt15(r.wall_seconds) << "s\n";
            }
            const fs::path report = out / "verify.json";
            write_text_file(report, verify_report_json(reports, opt));
            if (!ok) throw PropertyFailure("property failures; report at " + report.string());
        }
    } catch (const PropertyFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const pencilscope::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
