#pragma once

#include <stdexcept>
#include <string>

namespace lancbio {

/// Pivot magnitude fell below the guard in the tridiagonal LDL' solve.
/// Callers treat this as a signal to restart the epoch.
struct NearSingularError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The (j+1) x j least-squares matrix lost full column rank.
struct RankDeficientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cholesky factorization hit a nonpositive pivot.
struct NotPositiveDefiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inner solve failed to reach its tolerance within the iteration cap.
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Programming error: vector sizes disagree with the problem dimensions.
struct DimensionMismatchError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Inconsistent data shapes when building a problem instance.
struct ShapeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// IDX file loader errors.
struct BadMagicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncatedFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CountMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Experiment configuration errors (unknown ids, bad syntax). Carries
/// line/field context in the message; the CLI maps it to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lancbio
