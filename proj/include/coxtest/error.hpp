#ifndef COXTEST_ERROR_HPP_
#define COXTEST_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace coxtest {

// Root of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (count_at past the
// horizon, normal_quantile(0), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Sample violates the structural requirements of a TrajectorySet.
class InvalidSampleError : public Error {
 public:
  using Error::Error;
};

// Sample is structurally valid but carries no events, so the normalizers of
// the test statistics vanish.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

// Invalid model, window, or experiment parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied callback broke its documented contract.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Malformed input file.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace coxtest

#endif  // COXTEST_ERROR_HPP_
