#pragma once

#include <stdexcept>
#include <string>

namespace jbekit {

enum class ErrorKind {
    TruncatedInput,
    CorruptStream,
    LengthMismatch,
    UnknownStage,
    ChecksumMismatch,
};

const char* error_kind_name(ErrorKind kind);

// Decoding never fabricates output on error; it fails with a kind.
class CodecError : public std::runtime_error {
public:
    CodecError(ErrorKind kind, std::string detail);

    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace jbekit
