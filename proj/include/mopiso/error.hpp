#pragma once

#include <stdexcept>
#include <string>

namespace mopiso {

enum class Errc {
  WrongDiagonalCount,
  CrossingDiagonals,
  InvalidIndex,
  TooFewVertices,
  NotAnEdge,
  NotADiagonal,
  TooSmall,
  TooLarge,
  NotABoundaryEdge,
  NotDegree2,
  KTooSmall,
  LimitExceeded,
  BadParams,
  NotSimple,
  Degenerate,
  ParseError,
  VerificationFailure,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::WrongDiagonalCount: return "WrongDiagonalCount";
    case Errc::CrossingDiagonals: return "CrossingDiagonals";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::NotADiagonal: return "NotADiagonal";
    case Errc::TooSmall: return "TooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotABoundaryEdge: return "NotABoundaryEdge";
    case Errc::NotDegree2: return "NotDegree2";
    case Errc::KTooSmall: return "KTooSmall";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::BadParams: return "BadParams";
    case Errc::NotSimple: return "NotSimple";
    case Errc::Degenerate: return "Degenerate";
    case Errc::ParseError: return "ParseError";
    case Errc::VerificationFailure: return "VerificationFailure";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}
  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

// VerificationFailure marks an internal contract break, never bad input.
[[noreturn]] inline void internal_fail(const std::string& detail) {
  throw Error(Errc::VerificationFailure, detail);
}

inline void require(bool cond, Errc code, const std::string& detail) {
  if (!cond) throw Error(code, detail);
}

}  // namespace mopiso
