#include "pencilscope/matrix_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pencilscope/errors.hpp"
#include "pencilscope/extended_real.hpp"

namespace pencilscope {

namespace {

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0' || errno != 0 || v <= 0) {
        throw ParseError(line, std::string("expected positive integer ") + what + ", got '" + tok + "'");
    }
    return static_cast<std::size_t>(v);
}

double parse_real(const std::string& tok, std::size_t line) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0') throw ParseError(line, "expected a number, got '" + tok + "'");
    if (!std::isfinite(v)) throw ParseError(line, "non-finite entry '" + tok + "'");
    return v;
}

std::size_t read_header(LineReader& in, const char* keyword) {
    const std::string line = in.next(keyword);
    const auto t = tokens(line);
    if (t.size() != 2 || t[0] != keyword) {
        throw ParseError(in.line(), std::string("expected header '") + keyword + " <size>'");
    }
    return parse_count(t[1], in.line(), "size");
}

CMatrix read_sized(LineReader& in, std::size_t n) {
    CMatrix m = read_matrix(in);
    if (m.rows() != n || m.cols() != n) {
        throw ParseError(in.line(), "block is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                        ", expected " + std::to_string(n) + "x" + std::to_string(n));
    }
    return m;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return in;
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string ExtendedReal::to_string() const {
    return infinite_ ? "inf" : format_double(value_);
}

std::string LineReader::next(const char* expecting) {
    std::string s;
    while (std::getline(in_, s)) {
        ++line_;
        if (!blank(s)) return s;
    }
    throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + expecting);
}

void write_matrix(std::ostream& out, const CMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << format_double(m(i, j).real()) << ' ' << format_double(m(i, j).imag());
        }
        out << '\n';
    }
}

CMatrix read_matrix(LineReader& in) {
    const auto head = tokens(in.next("matrix header"));
    if (head.size() != 2) throw ParseError(in.line(), "matrix header must be 'rows cols'");
    const std::size_t rows = parse_count(head[0], in.line(), "rows");
    const std::size_t cols = parse_count(head[1], in.line(), "cols");
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto t = tokens(in.next("matrix row"));
        if (t.size() != 2 * cols) {
            throw ParseError(in.line(), "row has " + std::to_string(t.size()) + " numbers, expected " +
                                            std::to_string(2 * cols));
        }
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Complex(parse_real(t[2 * j], in.line()), parse_real(t[2 * j + 1], in.line()));
    }
    return m;
}

CMatrix read_matrix(std::istream& in) {
    LineReader r(in);
    return read_matrix(r);
}

void write_pencil(std::ostream& out, const Pencil& p) {
    out << "pencil " << p.dim() << '\n';
    write_matrix(out, p.a());
    write_matrix(out, p.b());
}

Pencil read_pencil(std::istream& is) {
    LineReader in(is);
    const std::size_t n = read_header(in, "pencil");
    CMatrix a = read_sized(in, n);
    CMatrix b = read_sized(in, n);
    return Pencil(std::move(a), std::move(b));
}

void write_block_pencil(std::ostream& out, const BlockPencil& bp) {
    out << "block " << bp.block_size() << '\n';
    for (const CMatrix* m : {&bp.a1, &bp.a2, &bp.a3, &bp.a4, &bp.b1, &bp.b2, &bp.b3, &bp.b4}) write_matrix(out, *m);
}

BlockPencil read_block_pencil(std::istream& is) {
    LineReader in(is);
    const std::size_t n = read_header(in, "block");
    BlockPencil bp;
    for (CMatrix* m : {&bp.a1, &bp.a2, &bp.a3, &bp.a4, &bp.b1, &bp.b2, &bp.b3, &bp.b4}) *m = read_sized(in, n);
    return bp;
}

CMatrix load_matrix(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_matrix(in);
}

Pencil load_pencil(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_pencil(in);
}

BlockPencil load_block_pencil(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_block_pencil(in);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace pencilscope
