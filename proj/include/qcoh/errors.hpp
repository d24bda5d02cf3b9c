#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace qcoh {

// %g formatting for diagnostics (std::to_string renders 1e-9 as 0.000000)
inline std::string num_str(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Base for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix fails the Hermiticity check; message carries max |m_ij - conj(m_ji)|.
struct NotHermitian : Error {
    using Error::Error;
};

// Matrix fails positive semidefiniteness; message carries the most negative eigenvalue.
struct NotPositive : Error {
    using Error::Error;
};

// Trace differs from 1 beyond tolerance; message carries |Tr - 1|.
struct TraceMismatch : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Entropy/coherence parameter outside the measure's domain.
struct AlphaOutOfRange : Error {
    using Error::Error;
};

struct ParamOutOfRange : Error {
    using Error::Error;
};

struct MeasureUndefined : Error {
    using Error::Error;
};

// Kraus operators do not satisfy sum K*K = I within tolerance.
struct CompletenessViolation : Error {
    using Error::Error;
};

struct NotGio : Error {
    using Error::Error;
};

struct NotIo : Error {
    using Error::Error;
};

struct ResolutionTooCoarse : Error {
    using Error::Error;
};

// Malformed matrix/channel text input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace qcoh
