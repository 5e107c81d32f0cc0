#pragma once

#include <stdexcept>
#include <string>

namespace functorlab {

/* Error taxonomy. The CLI maps kinds to distinct exit codes, so checks can
 * distinguish "the math says no" from "the instance is too big". */
enum class ErrKind {
    Validation,      // broken invariant, bad argument, d^2 != 0, ...
    TooLarge,        // enumeration / bar-rank / linearization cap exceeded
    TruncationBound, // requested biproduct or tuple exceeds the truncation
    Parse,           // instance file does not parse or validate
    Unsupported,     // operation not defined for these arguments
};

class Error : public std::runtime_error {
  public:
    Error(ErrKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrKind kind() const { return kind_; }

  private:
    ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

inline void check(bool cond, ErrKind k, const std::string& msg) {
    if (!cond)
        fail(k, msg);
}

} // namespace functorlab
