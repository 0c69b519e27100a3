#pragma once

#include <stdexcept>
#include <string>

namespace crscore {

// Root of the library error hierarchy. Every message starts with a stable
// kind token (e.g. "NotNormalized: ...") so callers and CLI output can
// match on it.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class NegativeMassError : public Error {
 public:
  explicit NegativeMassError(const std::string& detail)
      : Error("NegativeMass: " + detail) {}
};

class NotNormalizedError : public Error {
 public:
  explicit NotNormalizedError(const std::string& detail)
      : Error("NotNormalized: " + detail) {}
};

class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& detail)
      : Error("DimensionMismatch: " + detail) {}
};

class IndexOutOfRangeError : public Error {
 public:
  explicit IndexOutOfRangeError(const std::string& detail)
      : Error("IndexOutOfRange: " + detail) {}
};

class GridMismatchError : public Error {
 public:
  explicit GridMismatchError(const std::string& detail)
      : Error("GridMismatch: " + detail) {}
};

class CauseOutOfRangeError : public Error {
 public:
  explicit CauseOutOfRangeError(const std::string& detail)
      : Error("CauseOutOfRange: " + detail) {}
};

class EmptyDatasetError : public Error {
 public:
  explicit EmptyDatasetError(const std::string& detail)
      : Error("EmptyDataset: " + detail) {}
};

class IndeterminateGapError : public Error {
 public:
  explicit IndeterminateGapError(const std::string& detail)
      : Error("IndeterminateGap: " + detail) {}
};

// File-level failures. The CLI maps these two to exit code 2 and every
// other Error to exit code 1.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& detail)
      : Error("ParseError: " + detail) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& detail) : Error("IoError: " + detail) {}
};

}  // namespace crscore
