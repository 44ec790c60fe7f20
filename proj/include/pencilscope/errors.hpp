#pragma once

#include <stdexcept>
#include <string>

namespace pencilscope {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A pivot fell below the relative floor during LU factorization.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// λB − A is singular: λ belongs to the spectrum of the pencil.
class AtSpectrum : public Error {
public:
    using Error::Error;
};

/// Neumann continuation requested outside its disk of convergence.
class OutsideRadius : public Error {
public:
    using Error::Error;
};

/// B is singular, so eigenvalues of B⁻¹A are not available.
class SingularB : public Error {
public:
    using Error::Error;
};

/// A diagonal pivot block of a block pencil is singular at λ.
class AtPivotSpectrum : public Error {
public:
    using Error::Error;
};

/// The Schur complement pencil is singular at λ, so λ ∈ σ(A, B).
class SchurSingular : public Error {
public:
    using Error::Error;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace pencilscope
