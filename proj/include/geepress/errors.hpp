#ifndef GEEPRESS_ERRORS_HPP
#define GEEPRESS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geepress {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument values: correlation parameters outside their domain,
/// nonsensical option combinations, malformed hypothesis matrices.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Problems with user-supplied data: schema violations, non-finite values,
/// responses incompatible with the declared family.
class InputError : public Error {
public:
  using Error::Error;
};

/// The scoring system matrix (or another matrix that must be inverted
/// exactly) is numerically singular, e.g. because of collinear covariates.
class RankDeficiencyError : public Error {
public:
  using Error::Error;
};

/// A working correlation structure cannot be estimated from the data at
/// hand, e.g. an unstructured matrix with a wave pair that no cluster
/// observes often enough.
class StructureInfeasibleError : public Error {
public:
  using Error::Error;
};

/// (I - H_i) could not be inverted for a cluster-deletion quantity.
class DeletionSingularError : public Error {
public:
  using Error::Error;
};

/// A simulation target correlation lies outside the attainable range for
/// the requested pair of margins.
class RangeViolationError : public Error {
public:
  using Error::Error;
};

/// Correlated-data generation failed (e.g. a latent matrix that cannot be
/// repaired to positive definiteness).
class GenerationError : public Error {
public:
  using Error::Error;
};

/// A model-selection criterion was requested for a fit that did not
/// converge, or a harness scenario lost every replicate.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

}  // namespace geepress

#endif  // GEEPRESS_ERRORS_HPP
