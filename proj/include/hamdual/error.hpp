#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamdual {

enum class ErrorCode {
    MalformedHeader,
    TruncatedRecord,
    ParseError,
    NotCubic,
    NotSimple,
    InconsistentAdjacency,
    FaceNotCycle,
    OddVertexCount,
    NotPlanar,
    CycleNotInGraph,
    IndexOutOfRange,
    EdgeNotOnCycle,
    NoComplementaryPath,
    ScriptEdgeInvalid,
    ReconstructionFailed,
    ReplayMismatch,
    TooLarge,
    Io,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-readable code; the message holds the human context.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          code_(code),
          detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace hamdual
