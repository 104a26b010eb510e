#include "abelocus/error.hpp"

namespace abelocus {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NotComplementary: return "not-complementary";
    case ErrorKind::NoSolution: return "no-solution";
    case ErrorKind::NotInSiegelSpace: return "not-in-siegel-space";
    case ErrorKind::OutsideFamily: return "outside-family";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::EmbeddingInvalid: return "embedding-invalid";
    case ErrorKind::LemmaViolation: return "lemma-violation";
    case ErrorKind::UnsupportedMagnitude: return "unsupported-magnitude";
    case ErrorKind::BoundExceeded: return "bound-exceeded";
    case ErrorKind::InternalConsistency: return "internal-consistency";
  }
  return "unknown";
}

}  // namespace abelocus
