#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quandlekit {

enum class ErrorKind {
    NonSquare,
    EntryOutOfRange,
    IdempotencyViolation,
    RightInvertibilityViolation,
    DistributivityViolation,
    IndexOutOfRange,
    NotABijection,
    FixedPointMissing,
    ConjugationViolation,
    ProfileInconsistency,
    SizeLimitExceeded,
    NotRelabelable,
    NotCanonical,
    NotAPartition,
    NotClosed,
    ParamOutOfRange,
    NotSHQShape,
    NotOddPrime,
    MultiplierNotInvertible,
    DegenerateMultiplier,
    RepeatedLengthsUnsupported,
    InvalidProfile,
    ParseError,
};

auto to_string(ErrorKind kind) -> std::string_view;

// Every failure raised by the library carries a machine-readable kind; the
// message is for humans and uses 1-based element labels.
class QuandleError : public std::runtime_error {
public:
    QuandleError(ErrorKind kind, const std::string & message, std::vector<std::uint64_t> witness = {}) :
        std::runtime_error(std::string{to_string(kind)} + ": " + message),
        _kind(kind),
        _witness(std::move(witness))
    {
    }

    auto kind() const noexcept -> ErrorKind { return _kind; }
    // 1-based labels (or parameters) identifying the failure, when there are any.
    auto witness() const -> const std::vector<std::uint64_t> & { return _witness; }

private:
    ErrorKind _kind;
    std::vector<std::uint64_t> _witness;
};

} // namespace quandlekit
