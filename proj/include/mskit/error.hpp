#pragma once

#include <stdexcept>
#include <string>

namespace mskit {

// Library errors carry a machine-readable kind next to the message.
// Validation findings are *not* errors; they are reported as data
// (see MatchstickCertificate).
enum class ErrorKind {
    IndexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    DegenerateSegment,
    DegenerateDirections,
    InvalidAngle,
    NestingAmbiguity,
    InvalidK,
    UnknownName,
    NotHexFamily,
    ParseError,
    SchemaError,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

const char* to_string(ErrorKind kind);

}  // namespace mskit
