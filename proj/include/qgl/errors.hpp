#pragma once

#include <stdexcept>
#include <string>

namespace qgl {

struct QglError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A denominator vanished identically.
struct DivisionByZero : QglError {
    using QglError::QglError;
};

/// delta_residues met a pole of order > 1.
struct MultiplePoleError : QglError {
    using QglError::QglError;
};

/// A zero factor survived in a denominator after resonance cancellation.
struct ResonanceSingular : QglError {
    using QglError::QglError;
};

/// (k, r) with gcd(k+1, r-1) != 1.
struct UnsupportedResonance : QglError {
    using QglError::QglError;
};

/// A gamma evaluation in a tensor product hit one of its poles.
struct PoleCollision : QglError {
    using QglError::QglError;
};

/// Malformed user input (labels, windows, shapes).
struct InvalidInput : QglError {
    using QglError::QglError;
};

}  // namespace qgl
