#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace charid {

/// Base class of every error thrown by this library. `code()` is a stable
/// machine-readable tag; `what()` is "<code>: <detail>".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& d) : Error("DivisionByZero", d) {}
};

struct InvalidCartanData : Error {
    explicit InvalidCartanData(const std::string& d) : Error("InvalidCartanData", d) {}
};

struct NotASubgroup : Error {
    explicit NotASubgroup(const std::string& d) : Error("NotASubgroup", d) {}
};

struct SingularWeight : Error {
    explicit SingularWeight(const std::string& d) : Error("SingularWeight", d) {}
};

struct SingularPoint : Error {
    explicit SingularPoint(const std::string& d) : Error("SingularPoint", d) {}
};

struct NonIntegralWeight : Error {
    explicit NonIntegralWeight(const std::string& d) : Error("NonIntegralWeight", d) {}
};

struct ExhaustedSearch : Error {
    explicit ExhaustedSearch(const std::string& d) : Error("ExhaustedSearch", d) {}
};

struct RouteMismatch : Error {
    explicit RouteMismatch(const std::string& d) : Error("RouteMismatch", d) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& d) : Error("ConfigError", d) {}
};

struct CatalogError : Error {
    explicit CatalogError(const std::string& d) : Error("CatalogError", d) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& d) : Error("Overflow", d) {}
};

}  // namespace charid
