#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vt {

enum class Errc {
  param_too_small,
  parity_violation,
  unknown_vertex,
  unknown_edge,
  degenerate_jump,
  non_uniform_intersection,
  cap_exceeded,
  disconnected_subgraph,
  instance_too_large,
  partition_mismatch,
  io_failure,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::param_too_small: return "ParamTooSmall";
    case Errc::parity_violation: return "ParityViolation";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::degenerate_jump: return "DegenerateJump";
    case Errc::non_uniform_intersection: return "NonUniformIntersection";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::disconnected_subgraph: return "DisconnectedSubgraph";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::partition_mismatch: return "PartitionMismatch";
    case Errc::io_failure: return "IoFailure";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vt
