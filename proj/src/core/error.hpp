#pragma once

#include <stdexcept>
#include <string>

namespace tql {

// Error categories; the values mirror the process exit codes and the
// C API status codes (0 = ok is implicit).
enum class ErrorKind {
    invalid = 1,
    config = 2,
    numeric = 3,
    io = 4,
};

class TqlError : public std::runtime_error {
public:
    TqlError(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) { throw TqlError(ErrorKind::invalid, msg); }
[[noreturn]] inline void fail_config(const std::string& msg) { throw TqlError(ErrorKind::config, msg); }
[[noreturn]] inline void fail_numeric(const std::string& msg) { throw TqlError(ErrorKind::numeric, msg); }
[[noreturn]] inline void fail_io(const std::string& msg) { throw TqlError(ErrorKind::io, msg); }

} // namespace tql
