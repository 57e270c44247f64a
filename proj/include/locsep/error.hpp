#pragma once

#include <stdexcept>
#include <string>

namespace locsep {

enum class ErrorKind {
    input,         // malformed input or unknown vertex
    precondition,  // operation called outside its domain
    cap_exceeded,  // search budget exhausted
    invariant,     // an internal assertion derived from a lemma failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const std::string& what) {
    if (!ok) throw Error(kind, what);
}

}  // namespace locsep
