#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace normlap {

enum class ErrorCode {
  // graph construction and IO
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  TooFewVertices,
  SizeTooSmall,
  NotConnected,
  RetriesExhausted,
  ParseError,
  IoError,
  // spectral
  ZeroDegreeVertex,
  ConvergenceFailure,
  InvalidAlpha,
  UnexpectedZeroEigenvalue,
  // majorization
  DegenerateB,
  InfeasibleB,
  Infeasible,
  NoSignChange,
  // bounds
  InfeasibleT,
  ThetaOutOfRange,
  NTooSmall,
  BetaExceedsTheta,
  ThetaBetaTooLarge,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ZeroDegreeVertex: return "ZeroDegreeVertex";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::UnexpectedZeroEigenvalue: return "UnexpectedZeroEigenvalue";
    case ErrorCode::DegenerateB: return "DegenerateB";
    case ErrorCode::InfeasibleB: return "InfeasibleB";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::InfeasibleT: return "InfeasibleT";
    case ErrorCode::ThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::BetaExceedsTheta: return "BetaExceedsTheta";
    case ErrorCode::ThetaBetaTooLarge: return "ThetaBetaTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// All library failures are reported through this exception; `code()` is the
// stable machine-readable part, `what()` is "<Code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace normlap
