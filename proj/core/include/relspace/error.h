#ifndef RELSPACE_ERROR_H_
#define RELSPACE_ERROR_H_

#include <stdexcept>
#include <string>

namespace relspace {

enum class ErrorCode {
  kTypeMismatch,
  kInvalidArgument,
  kUnboundBox,
  kUnboundRelation,
  kUnknownWord,
  kUnknownName,
  kNoParse,
  kLexicon,
  kScene,
  kSizeBound,
  kMalformedDiagram,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map them onto stable exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace relspace

#endif  // RELSPACE_ERROR_H_
