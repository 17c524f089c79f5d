// Error hierarchy shared by the library and the CLI.
// Each class maps to one process exit code (see report.hpp):
//   UsageError     -> 2   bad flags, invalid config, refused resume
//   IoError        -> 3   filesystem failures, corrupt checkpoint files
//   CapacityError  -> 4   input exceeds the supported integer range
// DomainError signals a contract violation at an operation boundary
// (caller bug, not user input) and also maps to exit code 2.

#pragma once

#include <stdexcept>
#include <string>

namespace paritygap {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid command line or scan configuration.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// Operation argument outside its documented domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A value or range exceeds the supported integer limits.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

// Filesystem trouble: unreadable, unwritable, or corrupt files.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Checkpoint payload does not match its recorded digest.
class IntegrityError : public IoError {
public:
    explicit IntegrityError(const std::string& msg) : IoError(msg) {}
};

// A scan was stopped between shards; progress is in the checkpoint.
class Interrupted : public Error {
public:
    explicit Interrupted(const std::string& msg) : Error(msg) {}
};

}  // namespace paritygap
