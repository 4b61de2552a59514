#ifndef LAURIN_ERROR_HPP
#define LAURIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace laurin {

// Error taxonomy mirrors the CLI exit codes: Precondition/Unsolvable -> 1,
// Parse/Budget -> 2. Everything else is a bug and asserts.
enum class ErrorKind { Parse, Precondition, Budget, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void parse_error(const std::string& msg) {
    throw Error(ErrorKind::Parse, msg);
}
[[noreturn]] inline void precondition_error(const std::string& msg) {
    throw Error(ErrorKind::Precondition, msg);
}
[[noreturn]] inline void budget_error(const std::string& msg) {
    throw Error(ErrorKind::Budget, msg);
}
[[noreturn]] inline void internal_error(const std::string& msg) {
    throw Error(ErrorKind::Internal, msg);
}

inline void check(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) throw Error(kind, msg);
}

} // namespace laurin

#endif
