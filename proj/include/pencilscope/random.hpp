#pragma once

#include <cstdint>
#include <random>

#include "pencilscope/blockpencil.hpp"
#include "pencilscope/cmatrix.hpp"
#include "pencilscope/pencil.hpp"

namespace pencilscope {

/// mt19937_64 with hand-rolled uniform/normal draws, so streams are the same
/// on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    /// Independent stream for trial `index` of a run seeded with `seed`.
    static Rng substream(std::uint64_t seed, std::uint64_t index);

    double uniform();  // [0, 1), 53 bits
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal();   // Box–Muller
    Complex complex_normal();  // (x + iy)/√2, E|z|² = 1
    Complex complex_uniform_disk(double radius);

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Entries i.i.d. complex standard normal times `scale`.
CMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0);

/// Haar-ish unitary: QR of a complex Gaussian matrix.
CMatrix random_unitary(Rng& rng, std::size_t n);

/// A, B Gaussian with entries scaled by 1/√dim.
Pencil random_pencil(Rng& rng, std::size_t dim);

/// Hermitian, simultaneously diagonalizable A, B with B nonsingular
/// (|b_k| ∈ [0.5, 2]).
Pencil random_hermitian_commuting_pencil(Rng& rng, std::size_t dim);

BlockPencil random_block_pencil(Rng& rng, std::size_t m);

/// Blocks diagonal in one unitary basis, A4 = A1, B4 = B1, with λB2−A2 and
/// λB3−A3 supported on disjoint index sets. Satisfies every intertwining
/// hypothesis at every λ.
BlockPencil commuting_block_pencil(Rng& rng, std::size_t m);

/// A = [[A1, δA1], [0, A1]], B = [[B1, δB1], [0, B1]]: G₂ = δI, F₂ = 0.
BlockPencil shifted_copy_block_pencil(Rng& rng, std::size_t m, double delta);

}  // namespace pencilscope
