#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tsg {

enum class ErrorKind {
  OddDimension,
  NotSkewSymmetric,
  UnknownName,
  DegenerateForm,
  DegreeOverflow,
  NotAnAction,
  OddRank,
  FiberAlgebraMismatch,
  DegenerateInput,
  RoundingUnstable,
  PreconditionNotVerified,
  DimensionMismatch,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind and, where one exists, a
/// 1-based index witness plus a free-form detail (e.g. a defect polynomial).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<int> witness = {},
        std::string detail = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        witness_(std::move(witness)),
        detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
  std::string detail_;
};

/// Pass/fail result of a check. `condition` names what broke, `witness`
/// holds 1-based indices locating the first failure.
struct Verdict {
  bool pass = true;
  std::string condition;
  std::vector<int> witness;
  std::string detail;

  explicit operator bool() const noexcept { return pass; }

  static Verdict ok() { return {}; }
  static Verdict fail(std::string condition, std::vector<int> witness = {},
                      std::string detail = {}) {
    return {false, std::move(condition), std::move(witness), std::move(detail)};
  }
};

}  // namespace tsg
