#pragma once

#include <stdexcept>
#include <string>

namespace sgstar {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateEdge : Error { using Error::Error; };
struct LoopEdge : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct MixedFields : Error { using Error::Error; };
struct NotSquare : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct NotAnEigenvalue : Error { using Error::Error; };
struct CertificationMismatch : Error { using Error::Error; };
struct SingularShift : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };
struct IncompatiblePair : Error { using Error::Error; };
struct SameVertex : Error { using Error::Error; };
struct VacuousClass : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct EvenNegativeCount : Error { using Error::Error; };
struct GramEntryOutOfRange : Error { using Error::Error; };

// Raised by the graph-file reader; carries the location of the offending token.
struct ParseError : Error {
    std::string file;
    long line;
    std::string token;

    ParseError(std::string file_, long line_, std::string token_, const std::string& what)
        : Error(file_ + ":" + std::to_string(line_) + ": " + what +
                (token_.empty() ? "" : " (token '" + token_ + "')")),
          file(std::move(file_)), line(line_), token(std::move(token_)) {}
};

}  // namespace sgstar
