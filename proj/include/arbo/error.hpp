#ifndef ARBO_ERROR_HPP
#define ARBO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace arbo {

enum class ErrorCode {
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kMissingLabels,
  kKTooSmall,
  kTooLarge,
  kNotPrime,
  kTooManyEdges,
  kNotTripartite,
  kBadSigma,
  kBadModulus,
  kBadS,
  kBadEpsilon,
  kBadArgument,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kMissingLabels: return "MissingLabels";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kTooManyEdges: return "TooManyEdges";
    case ErrorCode::kNotTripartite: return "NotTripartite";
    case ErrorCode::kBadSigma: return "BadSigma";
    case ErrorCode::kBadModulus: return "BadModulus";
    case ErrorCode::kBadS: return "BadS";
    case ErrorCode::kBadEpsilon: return "BadEpsilon";
    case ErrorCode::kBadArgument: return "BadArgument";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace arbo

#endif  // ARBO_ERROR_HPP
