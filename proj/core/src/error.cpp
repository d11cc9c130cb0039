#include "scree/error.hpp"

namespace scree {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::kSelfLoop: return "SelfLoop";
    case Errc::kDisconnected: return "Disconnected";
    case Errc::kUnknownVertex: return "UnknownVertex";
    case Errc::kDuplicateVertex: return "DuplicateVertex";
    case Errc::kBadParams: return "BadParams";
    case Errc::kNotTwoValent: return "NotTwoValent";
    case Errc::kNotABridge: return "NotABridge";
    case Errc::kNotATree: return "NotATree";
    case Errc::kBagsOverlap: return "BagsOverlap";
    case Errc::kBagsMissVertices: return "BagsMissVertices";
    case Errc::kGraphMismatch: return "GraphMismatch";
    case Errc::kUnknownLink: return "UnknownLink";
    case Errc::kUnknownNode: return "UnknownNode";
    case Errc::kBadPartition: return "BadPartition";
    case Errc::kNotIndependent: return "NotIndependent";
    case Errc::kEndpointNotFound: return "EndpointNotFound";
    case Errc::kShapeMismatch: return "ShapeMismatch";
    case Errc::kEmptyEgg: return "EmptyEgg";
    case Errc::kDisconnectedEgg: return "DisconnectedEgg";
    case Errc::kDuplicateEgg: return "DuplicateEgg";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kNotEquivalent: return "NotEquivalent";
    case Errc::kNonEffectiveIntermediate: return "NonEffectiveIntermediate";
    case Errc::kNotPartitioning: return "NotPartitioning";
    case Errc::kPreconditionFailed: return "PreconditionFailed";
    case Errc::kInconsistentCertificates: return "InconsistentCertificates";
    case Errc::kClaimFailed: return "ClaimFailed";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace scree
