#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pencilscope/extended_real.hpp"
#include "pencilscope/pencil.hpp"

namespace pencilscope {

/// Rectangle in the λ-plane sampled at nRe × nIm corners, boundary included.
struct GridSpec {
    double re_min = -1.0, re_max = 1.0;
    double im_min = -1.0, im_max = 1.0;
    std::size_t n_re = 201, n_im = 201;

    /// "reMin:reMax:imMin:imMax:nRe:nIm"
    static GridSpec parse(const std::string& text);
    std::string to_string() const;
    void validate() const;

    std::size_t size() const noexcept { return n_re * n_im; }
    double d_re() const noexcept { return (re_max - re_min) / static_cast<double>(n_re - 1); }
    double d_im() const noexcept { return (im_max - im_min) / static_cast<double>(n_im - 1); }
    /// Sample (i, j): i along Re, j along Im. Row-major index j·nRe + i.
    Complex point(std::size_t i, std::size_t j) const;
    Complex point(std::size_t index) const { return point(index % n_re, index / n_re); }
    bool contains(Complex z) const;
};

/// log10 r_n sampled on a grid.
struct Field {
    GridSpec grid;
    unsigned n = 0;
    std::vector<ExtendedReal> values;

    const ExtendedReal& at(std::size_t i, std::size_t j) const { return values[j * grid.n_re + i]; }
};

using PointFunction = std::function<ExtendedReal(Complex)>;

/// Parallel map of f over the grid points.
Field evaluate_grid(const GridSpec& g, unsigned n, const PointFunction& f);
Field evaluate_grid_serial(const GridSpec& g, unsigned n, const PointFunction& f);

Field evaluate_field(const Pencil& p, const GridSpec& g, unsigned n);
/// Single-threaded reference, kept for testing and benchmarking.
Field evaluate_field_serial(const Pencil& p, const GridSpec& g, unsigned n);

struct Polyline {
    std::vector<Complex> vertices;
    bool closed = false;
};

struct ContourLevel {
    double epsilon = 0.0;
    double level = 0.0;       // −log10 ε
    bool empty_level = false; // the level set misses the grid
    std::vector<Polyline> polylines;
};

struct ContourSet {
    std::vector<ContourLevel> levels;
};

/// Returns log10 r at a cell center; used to split saddle cells.
using CenterSampler = std::function<double(Complex)>;

/// Marching squares on log10 r = −log10 ε. Without a sampler the saddle
/// center value is the mean of the four corners.
ContourSet extract_contours(const Field& f, std::span<const double> epsilons, const CenterSampler& center = {});

/// Interior grid points whose r is ≥ all 8 neighbours and > at least one,
/// strongest first, one per cell neighbourhood.
std::vector<Complex> locate_minima(const Field& f);

/// Eigenvalue estimates without inverting B: grid seeds refined by inverse
/// iteration, duplicates dropped.
std::vector<Complex> locate_eigenvalues(const Pencil& p, const GridSpec& g);

/// Even-odd point-in-polygon test on a closed polyline.
bool point_in_polygon(const Polyline& poly, Complex z);

}  // namespace pencilscope
