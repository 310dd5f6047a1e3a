#ifndef DISCO_ERROR_H_
#define DISCO_ERROR_H_

#include <stdexcept>
#include <string>

namespace disco {

enum class ErrorKind {
  kParse,            // malformed PTB bracketing
  kInputFormat,      // malformed JSON / JSONL input
  kAlignment,        // tree leaves do not line up with the word list
  kMissingDocument,  // doc_id without raw text (or dangling reference)
  kExport,
  kData,             // well-formed input that violates a data contract
  kLookup,
  kModel,            // schema or version mismatch in a trained model
  kTraining,
  kDomain,           // operation applied to arguments it is not defined on
};

const char* ErrorKindName(ErrorKind kind);

// All library failures surface as this exception; `kind()` lets callers
// (notably the CLI) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace disco

#endif  // DISCO_ERROR_H_
