#pragma once

#include <stdexcept>
#include <string>

namespace centropy {

// Every failure the library can raise, so callers can branch on the kind
// instead of parsing messages.
enum class ErrorKind {
    NonFiniteInput,
    SingularCovariance,
    NeighborCountTooLarge,
    NonCountData,
    RowMisalignment,
    SeriesTooShort,
    InvalidConfig,
    MalformedCsv,
    SchemaError,
    DuplicateEdgeTriple,
    NodeCountMismatch,
    IoError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonFiniteInput: return "NonFiniteInput";
        case ErrorKind::SingularCovariance: return "SingularCovariance";
        case ErrorKind::NeighborCountTooLarge: return "NeighborCountTooLarge";
        case ErrorKind::NonCountData: return "NonCountData";
        case ErrorKind::RowMisalignment: return "RowMisalignment";
        case ErrorKind::SeriesTooShort: return "SeriesTooShort";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::MalformedCsv: return "MalformedCsv";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::DuplicateEdgeTriple: return "DuplicateEdgeTriple";
        case ErrorKind::NodeCountMismatch: return "NodeCountMismatch";
        case ErrorKind::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace centropy
