#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace lat {

// Root of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A family/operation parameter outside its allowed range.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Structurally invalid graph or labeling (bad index, size mismatch, loop, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error("parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Label multiset is not exactly {1, ..., n}.
class BijectionError : public Error {
public:
    using Error::Error;
};

// A transform or construction was handed input violating its contract.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what, std::optional<std::size_t> vertex = std::nullopt)
        : Error(what), vertex_(vertex) {}

    // Offending vertex, when the failure is tied to one.
    std::optional<std::size_t> vertex() const noexcept { return vertex_; }

private:
    std::optional<std::size_t> vertex_;
};

// The graph does not have the shape an operation requires (e.g. apex not universal).
class StructureError : public Error {
public:
    using Error::Error;
};

// Instance exceeds the scale an exact routine accepts.
class RefusalError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

// A certificate whose stored claims disagree with re-verification.
class IntegrityError : public Error {
public:
    using Error::Error;
};

} // namespace lat
