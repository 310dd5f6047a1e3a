#include "disco/error.h"

namespace disco {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kInputFormat: return "input format error";
    case ErrorKind::kAlignment: return "alignment error";
    case ErrorKind::kMissingDocument: return "missing document";
    case ErrorKind::kExport: return "export error";
    case ErrorKind::kData: return "data error";
    case ErrorKind::kLookup: return "lookup error";
    case ErrorKind::kModel: return "model error";
    case ErrorKind::kTraining: return "training error";
    case ErrorKind::kDomain: return "domain error";
  }
  return "error";
}

}  // namespace disco
