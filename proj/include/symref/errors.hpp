#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symref {

/// Base of every diagnostic raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConductorMismatch : public Error {
public:
    ConductorMismatch(unsigned a, unsigned b)
        : Error("conductor mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class NotASubfield : public Error {
public:
    NotASubfield(unsigned from, unsigned to)
        : Error("Q(zeta_" + std::to_string(from) + ") is not a subfield of Q(zeta_" + std::to_string(to) + ")") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class BadForm : public Error {
public:
    using Error::Error;
};

class NotSymplectic : public Error {
public:
    explicit NotSymplectic(std::size_t generator)
        : Error("generator " + std::to_string(generator) + " does not preserve the symplectic form"),
          generator_(generator) {}
    std::size_t generator() const { return generator_; }

private:
    std::size_t generator_;
};

class SingularGenerator : public Error {
public:
    explicit SingularGenerator(std::size_t generator)
        : Error("generator " + std::to_string(generator) + " is singular"), generator_(generator) {}
    std::size_t generator() const { return generator_; }

private:
    std::size_t generator_;
};

class OrderBoundExceeded : public Error {
public:
    explicit OrderBoundExceeded(std::size_t bound)
        : Error("group order exceeds the bound " + std::to_string(bound) +
                " (infinite group or bound too small)"),
          bound_(bound) {}
    std::size_t bound() const { return bound_; }

private:
    std::size_t bound_;
};

class NotAMember : public Error {
public:
    NotAMember() : Error("matrix is not an element of the group") {}
};

class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

class MissingFiberData : public Error {
public:
    explicit MissingFiberData(std::size_t stratum)
        : Error("missing fiber dimension for stratum " + std::to_string(stratum)), stratum_(stratum) {}
    std::size_t stratum() const { return stratum_; }

private:
    std::size_t stratum_;
};

class ToleranceViolation : public Error {
public:
    using Error::Error;
};

class BadInput : public Error {
public:
    using Error::Error;
};

/// Input document diagnostics carry the JSON path of the offending field.
class DocumentError : public Error {
public:
    DocumentError(std::string path, const std::string& reason)
        : Error((path.empty() ? std::string("<root>") : path) + ": " + reason), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

class ParseError : public DocumentError {
public:
    using DocumentError::DocumentError;
};

class ValidationError : public DocumentError {
public:
    using DocumentError::DocumentError;
};

}  // namespace symref
