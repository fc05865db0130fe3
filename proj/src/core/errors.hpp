#pragma once

#include <stdexcept>
#include <string>

namespace isoform {

// Error taxonomy shared by the C API and the CLI exit codes.
enum class ErrorCode : int {
    Ok = 0,
    Parse = 2,
    Invariant = 3,
    Capacity = 4,
    Internal = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline void throw_parse(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }
inline void throw_invariant(const std::string& msg) { throw Error(ErrorCode::Invariant, msg); }
inline void throw_capacity(const std::string& msg) { throw Error(ErrorCode::Capacity, msg); }
inline void throw_internal(const std::string& msg) { throw Error(ErrorCode::Internal, msg); }

} // namespace isoform
