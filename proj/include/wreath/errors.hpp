#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wreath {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-level failures: wrong arguments, theorem hypotheses not met, caps.
struct CapExceeded : Error {
    using Error::Error;
};
struct BadSubsetSize : Error {
    using Error::Error;
};
struct HypothesisViolated : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct UnsupportedRegime : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct InvalidCharacter : Error {
    using Error::Error;
};
struct NotADecomposition : Error {
    using Error::Error;
};
struct NotInKernel : Error {
    using Error::Error;
};

// The linear-character hypothesis failed for a concrete subset; the witness
// mask identifies it.
struct HypothesisFailed : Error {
    std::uint32_t witness_mask;
    HypothesisFailed(const std::string& msg, std::uint32_t mask)
        : Error(msg), witness_mask(mask) {}
};

// A positive-part extraction left some subset uncovered.
struct ExtractionFailed : Error {
    std::uint32_t witness_mask;
    ExtractionFailed(const std::string& msg, std::uint32_t mask)
        : Error(msg), witness_mask(mask) {}
};

// Internal invariant failures: a constructed kernel vector failing its own
// orthogonality check indicates a bug, not bad input.
struct KernelCheckFailed : Error {
    using Error::Error;
};

}  // namespace wreath
