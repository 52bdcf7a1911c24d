#include "jbekit/error.hpp"

namespace jbekit {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::TruncatedInput: return "truncated input";
        case ErrorKind::CorruptStream: return "corrupt stream";
        case ErrorKind::LengthMismatch: return "length mismatch";
        case ErrorKind::UnknownStage: return "unknown stage";
        case ErrorKind::ChecksumMismatch: return "checksum mismatch";
    }
    return "codec error";
}

CodecError::CodecError(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

}  // namespace jbekit
