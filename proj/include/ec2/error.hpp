#ifndef EC2_ERROR_HPP
#define EC2_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ec2 {

enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    Disconnected,
    NotSpanning,
    TrivialSegment,
    NotTwoConnected,
    Infeasible2ECSS,
    Infeasible,
    TooLarge,
    BudgetExceeded,
    SyntaxError,
    CountMismatch,
    TooManyChords,
    RatioViolation,
    NotSubset,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::TrivialSegment: return "TrivialSegment";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::Infeasible2ECSS: return "Infeasible2ECSS";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::TooManyChords: return "TooManyChords";
    case ErrorCode::RatioViolation: return "RatioViolation";
    case ErrorCode::NotSubset: return "NotSubset";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ec2

#endif // EC2_ERROR_HPP
