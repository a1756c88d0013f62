#ifndef SECTORDET_ERRORS_HPP
#define SECTORDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sectordet {

// Base class so callers can catch any library error in one clause.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct SingularBlockError : Error {
    explicit SingularBlockError(const std::string& msg) : Error(msg) {}
};

struct DefinitenessError : Error {
    explicit DefinitenessError(const std::string& msg) : Error(msg) {}
};

struct SymmetryError : Error {
    explicit SymmetryError(const std::string& msg) : Error(msg) {}
};

struct NotSectorialError : Error {
    explicit NotSectorialError(const std::string& msg) : Error(msg) {}
};

// An inequality evaluator was fed an instance outside its hypothesis class.
struct HypothesisError : Error {
    explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace sectordet

#endif
