#pragma once

#include <stdexcept>
#include <string>

namespace dfock {

// Base class for all numerical-guard and usage errors thrown by the library.
class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimensionError : public SimError {
 public:
  using SimError::SimError;
};

class InvalidLevelError : public SimError {
 public:
  using SimError::SimError;
};

class InvalidSplitterError : public SimError {
 public:
  using SimError::SimError;
};

class InvalidSqueezingError : public SimError {
 public:
  using SimError::SimError;
};

// Thrown when a requested operation would silently lose amplitude past the
// Fock cutoff. Operations refuse rather than degrade.
class TruncationRiskError : public SimError {
 public:
  using SimError::SimError;
};

class ZeroProbabilityError : public SimError {
 public:
  using SimError::SimError;
};

class DimensionMismatchError : public SimError {
 public:
  using SimError::SimError;
};

}  // namespace dfock
