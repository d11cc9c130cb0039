#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scree {

enum class Errc {
  kSelfLoop,
  kDisconnected,
  kUnknownVertex,
  kDuplicateVertex,
  kBadParams,
  kNotTwoValent,
  kNotABridge,
  kNotATree,
  kBagsOverlap,
  kBagsMissVertices,
  kGraphMismatch,
  kUnknownLink,
  kUnknownNode,
  kBadPartition,
  kNotIndependent,
  kEndpointNotFound,
  kShapeMismatch,
  kEmptyEgg,
  kDisconnectedEgg,
  kDuplicateEgg,
  kBudgetExceeded,
  kNotEquivalent,
  kNonEffectiveIntermediate,
  kNotPartitioning,
  kPreconditionFailed,
  kInconsistentCertificates,
  kClaimFailed,
  kParseError,
};

std::string_view to_string(Errc code) noexcept;

// All library failures are reported through this exception type; the code
// identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace scree
