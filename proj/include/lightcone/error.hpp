#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lightcone {

enum class ErrorCode {
  InvalidArgument,
  NotSpacelike,
  UnsupportedRegion,
  UnsupportedConfiguration,
  PreconditionFailed,
  NoTangent,
  SingularPoint,
  LightlikeSlope,
  BadGeometry,
  TargetTooClose,
  TargetOutside,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSpacelike: return "NotSpacelike";
    case ErrorCode::UnsupportedRegion: return "UnsupportedRegion";
    case ErrorCode::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NoTangent: return "NoTangent";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::LightlikeSlope: return "LightlikeSlope";
    case ErrorCode::BadGeometry: return "BadGeometry";
    case ErrorCode::TargetTooClose: return "TargetTooClose";
    case ErrorCode::TargetOutside: return "TargetOutside";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace lightcone
