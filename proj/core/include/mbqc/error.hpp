#pragma once

#include <stdexcept>
#include <string>

namespace mbqc {

enum class ErrorCode {
  // stabilizer
  NotCommuting,
  NotFullRank,
  // flow
  InvalidGaugeSet,
  InvalidOutputSet,
  GaugeableOutsideInput,
  NoValidSplit,
  RankMismatch,
  NotCommutingReconstruction,
  NotOptimalOutput,
  // transforms
  SelfLoopAtQubit,
  NotInStabilizer,
  // ctc
  NoSelfLoop,
  BoundaryQubit,
  NotMinimal,
  BoundaryOverlap,
  // sim
  SizeGuard,
  NotRunnable,
  OrderInconsistent,
  ZeroSuccessProbability,
  // pattern files
  SyntaxError,
  MixedSource,
  IndexOutOfRange,
  WrongStabCount,
};

const char* error_code_name(ErrorCode c);

/// Carrier for all domain failures; `detail` holds the offending qubit label
/// or input line number where one exists, -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg, int detail = -1)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code), detail_(detail) {}

  ErrorCode code() const { return code_; }
  int detail() const { return detail_; }

 private:
  ErrorCode code_;
  int detail_;
};

}  // namespace mbqc
