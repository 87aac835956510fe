#ifndef MOUFANG_ERRORS_HPP
#define MOUFANG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace moufang {

/// A point (or a product of points) left the coordinate chart.
class ChartDomainError : public std::domain_error {
public:
  explicit ChartDomainError(const std::string& what) : std::domain_error(what) {}
};

/// A structural assumption of a loop model failed (e.g. singular u or v).
class ModelViolationError : public std::runtime_error {
public:
  explicit ModelViolationError(const std::string& what) : std::runtime_error(what) {}
};

/// Building a derived structure from invalid input (e.g. Chein double of a non-group).
class ConstructionError : public std::invalid_argument {
public:
  explicit ConstructionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Random sampling kept leaving the chart domain.
class SamplingError : public std::runtime_error {
public:
  SamplingError(const std::string& what, int retries)
      : std::runtime_error(what + " (retries: " + std::to_string(retries) + ")"),
        retries_(retries) {}
  int retries() const { return retries_; }

private:
  int retries_;
};

}

#endif
