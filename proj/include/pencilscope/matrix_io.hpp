#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pencilscope/blockpencil.hpp"
#include "pencilscope/cmatrix.hpp"
#include "pencilscope/pencil.hpp"

namespace pencilscope {

/// %.17g: enough digits for a bit-identical round trip.
std::string format_double(double x);

/// Line-counting reader shared by the three text formats. Blank lines are skipped.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}
    /// Next non-blank line; throws ParseError at end of input.
    std::string next(const char* expecting);
    std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

// CPENCIL-MAT v1: "rows cols", then one line per row of "re im" pairs.
void write_matrix(std::ostream& out, const CMatrix& m);
CMatrix read_matrix(LineReader& in);
CMatrix read_matrix(std::istream& in);

// CPENCIL v1: "pencil dim", then A and B.
void write_pencil(std::ostream& out, const Pencil& p);
Pencil read_pencil(std::istream& in);

// CPENCIL-BLOCK v1: "block m", then A1..A4, B1..B4.
void write_block_pencil(std::ostream& out, const BlockPencil& bp);
BlockPencil read_block_pencil(std::istream& in);

CMatrix load_matrix(const std::filesystem::path& path);
Pencil load_pencil(const std::filesystem::path& path);
BlockPencil load_block_pencil(const std::filesystem::path& path);

/// Writes text atomically enough for CLI use; throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace pencilscope
