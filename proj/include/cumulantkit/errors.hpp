#pragma once

#include <stdexcept>
#include <string>

namespace ckit {

enum class errc {
    invalid_argument,
    invalid_partition,
    invalid_subset,
    invalid_gap,
    arity_mismatch,
    colour_mismatch,
    not_comparable,
    unsupported_for_crossing,
    not_in_augmentation_ideal,
    empty_excluded,
    truncation_exceeded,
    not_invertible,
    algebra_mismatch,
    internal_inconsistency,
    parse_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c), message_(msg) {}
    errc code() const { return code_; }
    const std::string& message() const { return message_; }

private:
    errc code_;
    std::string message_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_argument: return "InvalidArgument";
        case errc::invalid_partition: return "InvalidPartition";
        case errc::invalid_subset: return "InvalidSubset";
        case errc::invalid_gap: return "InvalidGap";
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::colour_mismatch: return "ColourMismatch";
        case errc::not_comparable: return "NotComparable";
        case errc::unsupported_for_crossing: return "UnsupportedForCrossing";
        case errc::not_in_augmentation_ideal: return "NotInAugmentationIdeal";
        case errc::empty_excluded: return "EmptyExcluded";
        case errc::truncation_exceeded: return "TruncationExceeded";
        case errc::not_invertible: return "NotInvertible";
        case errc::algebra_mismatch: return "AlgebraMismatch";
        case errc::internal_inconsistency: return "InternalInconsistency";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace ckit
