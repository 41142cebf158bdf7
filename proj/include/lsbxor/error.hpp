#pragma once

#include <stdexcept>
#include <string>

namespace lsbxor {

enum class Errc {
  invalid_image,
  malformed_block,
  malformed_shares,
  capacity_exceeded,
  share_mismatch,
  authentication_failure,
  truncated_frame,
  unknown_kind,
  frame_length_mismatch,
  unsupported_dimensions,
  unsupported_format,
  unsupported_depth,
  truncated_image,
  malformed_sample,
  shape_mismatch,
};

inline const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_image: return "invalid-image";
    case Errc::malformed_block: return "malformed-block";
    case Errc::malformed_shares: return "malformed-shares";
    case Errc::capacity_exceeded: return "capacity-exceeded";
    case Errc::share_mismatch: return "share-mismatch";
    case Errc::authentication_failure: return "authentication-failure";
    case Errc::truncated_frame: return "truncated-frame";
    case Errc::unknown_kind: return "unknown-kind";
    case Errc::frame_length_mismatch: return "frame-length-mismatch";
    case Errc::unsupported_dimensions: return "unsupported-dimensions";
    case Errc::unsupported_format: return "unsupported-format";
    case Errc::unsupported_depth: return "unsupported-depth";
    case Errc::truncated_image: return "truncated-image";
    case Errc::malformed_sample: return "malformed-sample";
    case Errc::shape_mismatch: return "shape-mismatch";
  }
  return "unknown-error";
}

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lsbxor
