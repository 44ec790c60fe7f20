#include "pencilscope/pseudogrid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

#include "pencilscope/errors.hpp"
#include "pencilscope/matrix_io.hpp"
#include "pencilscope/parallel.hpp"

namespace pencilscope {

namespace {

double parse_double(const std::string& s, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0' || !std::isfinite(v)) throw InvalidArgument("bad grid " + what + " '" + s + "'");
    return v;
}

std::size_t parse_size(const std::string& s, const std::string& what) {
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0' || v <= 0) throw InvalidArgument("bad grid " + what + " '" + s + "'");
    return static_cast<std::size_t>(v);
}

double axis(double lo, double hi, std::size_t k, std::size_t n) {
    if (k + 1 == n) return hi;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

struct Node {
    Complex pos;
    std::vector<std::uint64_t> nbrs;
};

Complex lerp_edge(Complex pa, double va, Complex pb, double vb, double level) {
    const double t = (level - va) / (vb - va);
    return pa + t * (pb - pa);
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string t; std::getline(ss, t, ':');) parts.push_back(t);
    if (parts.size() != 6) throw InvalidArgument("grid must be reMin:reMax:imMin:imMax:nRe:nIm, got '" + text + "'");
    GridSpec g;
    g.re_min = parse_double(parts[0], "reMin");
    g.re_max = parse_double(parts[1], "reMax");
    g.im_min = parse_double(parts[2], "imMin");
    g.im_max = parse_double(parts[3], "imMax");
    g.n_re = parse_size(parts[4], "nRe");
    g.n_im = parse_size(parts[5], "nIm");
    g.validate();
    return g;
}

std::string GridSpec::to_string() const {
    return format_double(re_min) + ":" + format_double(re_max) + ":" + format_double(im_min) + ":" +
           format_double(im_max) + ":" + std::to_string(n_re) + ":" + std::to_string(n_im);
}

void GridSpec::validate() const {
    if (!(re_min < re_max) || !(im_min < im_max)) throw InvalidArgument("grid bounds must satisfy min < max");
    if (n_re < 2 || n_im < 2) throw InvalidArgument("grid needs at least 2 samples per axis");
}

Complex GridSpec::point(std::size_t i, std::size_t j) const {
    return {axis(re_min, re_max, i, n_re), axis(im_min, im_max, j, n_im)};
}

bool GridSpec::contains(Complex z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
}

Field evaluate_grid(const GridSpec& g, unsigned n, const PointFunction& f) {
    g.validate();
    Field out{g, n, std::vector<ExtendedReal>(g.size())};
    parallel_for(g.size(), [&](std::size_t k) { out.values[k] = f(g.point(k)); });
    return out;
}

Field evaluate_grid_serial(const GridSpec& g, unsigned n, const PointFunction& f) {
    g.validate();
    Field out{g, n, std::vector<ExtendedReal>(g.size())};
    for (std::size_t k = 0; k < g.size(); ++k) out.values[k] = f(g.point(k));
    return out;
}

Field evaluate_field(const Pencil& p, const GridSpec& g, unsigned n) {
    if (n > kMaxLevel) throw InvalidArgument("level n exceeds cap " + std::to_string(kMaxLevel));
    return evaluate_grid(g, n, [&](Complex z) { return log10_pseudo_resolvent_norm(p, z, n); });
}

Field evaluate_field_serial(const Pencil& p, const GridSpec& g, unsigned n) {
    if (n > kMaxLevel) throw InvalidArgument("level n exceeds cap " + std::to_string(kMaxLevel));
    return evaluate_grid_serial(g, n, [&](Complex z) { return log10_pseudo_resolvent_norm(p, z, n); });
}

ContourSet extract_contours(const Field& f, std::span<const double> epsilons, const CenterSampler& center) {
    const GridSpec& g = f.grid;
    const std::size_t nx = g.n_re, ny = g.n_im;
    if (f.values.size() != g.size()) throw GridMismatch("field size does not match its grid");

    double max_finite = -std::numeric_limits<double>::infinity();
    for (const auto& v : f.values)
        if (v.is_finite()) max_finite = std::max(max_finite, v.value());
    const double clamp = std::isfinite(max_finite) ? max_finite + 2.0 : 0.0;
    std::vector<double> v(f.values.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.values[k].value_or(clamp);

    ContourSet out;
    for (double eps : epsilons) {
        if (!(eps > 0.0)) throw InvalidArgument("epsilon must be positive");
        ContourLevel lvl;
        lvl.epsilon = eps;
        lvl.level = -std::log10(eps);
        const double level = lvl.level;

        std::map<std::uint64_t, Node> nodes;
        auto link = [&](std::uint64_t ka, Complex pa, std::uint64_t kb, Complex pb) {
            Node& a = nodes[ka];
            a.pos = pa;
            a.nbrs.push_back(kb);
            Node& b = nodes[kb];
            b.pos = pb;
            b.nbrs.push_back(ka);
        };

        for (std::size_t j = 0; j + 1 < ny; ++j) {
            for (std::size_t i = 0; i + 1 < nx; ++i) {
                const std::size_t k00 = j * nx + i, k10 = k00 + 1, k01 = k00 + nx, k11 = k01 + 1;
                const double c[4] = {v[k00], v[k10], v[k11], v[k01]};
                const unsigned code = (c[0] >= level ? 1u : 0u) | (c[1] >= level ? 2u : 0u) |
                                      (c[2] >= level ? 4u : 0u) | (c[3] >= level ? 8u : 0u);
                if (code == 0 || code == 15) continue;
                const Complex p00 = g.point(i, j), p10 = g.point(i + 1, j);
                const Complex p11 = g.point(i + 1, j + 1), p01 = g.point(i, j + 1);
                const std::uint64_t key[4] = {2 * k00, 2 * k10 + 1, 2 * k01, 2 * k00 + 1};
                auto pos = [&](int e) {
                    switch (e) {
                        case 0: return lerp_edge(p00, c[0], p10, c[1], level);
                        case 1: return lerp_edge(p10, c[1], p11, c[2], level);
                        case 2: return lerp_edge(p01, c[3], p11, c[2], level);
                        default: return lerp_edge(p00, c[0], p01, c[3], level);
                    }
                };
                auto seg = [&](int ea, int eb) { link(key[ea], pos(ea), key[eb], pos(eb)); };
                if (code == 5 || code == 10) {
                    const Complex mid = 0.5 * (p00 + p11);
                    const double cv = center ? center(mid) : 0.25 * (c[0] + c[1] + c[2] + c[3]);
                    const bool inside = cv >= level;
                    if ((code == 5) == inside) {
                        seg(0, 1);
                        seg(2, 3);
                    } else {
                        seg(3, 0);
                        seg(1, 2);
                    }
                    continue;
                }
                int crossed[2], nc = 0;
                const bool b[4] = {(code & 1u) != 0, (code & 2u) != 0, (code & 4u) != 0, (code & 8u) != 0};
                if (b[0] != b[1]) crossed[nc++] = 0;
                if (b[1] != b[2]) crossed[nc++] = 1;
                if (b[2] != b[3]) crossed[nc++] = 2;
                if (b[3] != b[0]) crossed[nc++] = 3;
                seg(crossed[0], crossed[1]);
            }
        }

        std::map<std::uint64_t, bool> seen;
        auto walk = [&](std::uint64_t start, bool closed) {
            Polyline pl;
            pl.closed = closed;
            std::uint64_t prev = start, cur = start;
            bool first = true;
            while (true) {
                seen[cur] = true;
                const Node& nd = nodes.at(cur);
                pl.vertices.push_back(nd.pos);
                std::uint64_t next = cur;
                bool found = false;
                for (std::uint64_t nb : nd.nbrs) {
                    if ((first || nb != prev) && !seen[nb]) {
                        next = nb;
                        found = true;
                        break;
                    }
                }
                if (!found) break;
                prev = cur;
                cur = next;
                first = false;
            }
            lvl.polylines.push_back(std::move(pl));
        };
        for (const auto& [k, nd] : nodes)
            if (nd.nbrs.size() == 1 && !seen[k]) walk(k, false);
        for (const auto& [k, nd] : nodes)
            if (!seen[k]) walk(k, true);
        lvl.empty_level = lvl.polylines.empty();
        out.levels.push_back(std::move(lvl));
    }
    return out;
}

std::vector<Complex> locate_minima(const Field& f) {
    const GridSpec& g = f.grid;
    const std::size_t nx = g.n_re, ny = g.n_im;
    struct Cand {
        std::size_t i, j;
        ExtendedReal v;
    };
    std::vector<Cand> cands;
    for (std::size_t j = 1; j + 1 < ny; ++j) {
        for (std::size_t i = 1; i + 1 < nx; ++i) {
            const ExtendedReal c = f.at(i, j);
            bool ge = true, gt = false;
            for (int dj = -1; dj <= 1 && ge; ++dj) {
                for (int di = -1; di <= 1; ++di) {
                    if (!di && !dj) continue;
                    const ExtendedReal nb = f.at(i + di, j + dj);
                    if (c < nb) {
                        ge = false;
                        break;
                    }
                    if (c > nb) gt = true;
                }
            }
            if (ge && gt) cands.push_back({i, j, c});
        }
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.v > b.v; });
    std::vector<Cand> kept;
    for (const Cand& c : cands) {
        const bool dup = std::any_of(kept.begin(), kept.end(), [&](const Cand& k) {
            const long long di = static_cast<long long>(k.i) - static_cast<long long>(c.i);
            const long long dj = static_cast<long long>(k.j) - static_cast<long long>(c.j);
            return std::llabs(di) <= 1 && std::llabs(dj) <= 1;
        });
        if (!dup) kept.push_back(c);
    }
    std::vector<Complex> out;
    for (const Cand& c : kept) out.push_back(g.point(c.i, c.j));
    return out;
}

std::vector<Complex> locate_eigenvalues(const Pencil& p, const GridSpec& g) {
    const Field f = evaluate_field(p, g, 0);
    std::vector<Complex> out;
    for (Complex seed : locate_minima(f)) {
        const Complex mu = refine_eigenvalue(p, seed);
        if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag())) continue;
        const bool dup = std::any_of(out.begin(), out.end(),
                                     [&](Complex z) { return std::abs(z - mu) <= 1e-8 * (1.0 + std::abs(mu)); });
        if (!dup) out.push_back(mu);
    }
    sort_complex(out);
    return out;
}

bool point_in_polygon(const Polyline& poly, Complex z) {
    const auto& v = poly.vertices;
    if (v.size() < 3) return false;
    bool inside = false;
    for (std::size_t a = 0, b = v.size() - 1; a < v.size(); b = a++) {
        const double ya = v[a].imag(), yb = v[b].imag();
        if ((ya > z.imag()) != (yb > z.imag())) {
            const double x = v[a].real() + (z.imag() - ya) * (v[b].real() - v[a].real()) / (yb - ya);
            if (z.real() < x) inside = !inside;
        }
    }
    return inside;
}

}  // namespace pencilscope
