#pragma once

#include <stdexcept>
#include <string>

namespace rcl {

enum class Err {
    Ok = 0,
    InvalidArgument,
    InstanceTooLarge,
    BudgetExceeded,
    PreconditionFailed,
    NoValidVertex,
    NoValidLeaf,
    ExtensionStuck,
    RetriesExhausted,
    StageFailure,
    ParseError,
    IoError,
};

struct Error : std::runtime_error {
    Err code;
    Error(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& what) { throw Error(c, what); }

inline void require(bool cond, Err c, const std::string& what) {
    if (!cond) fail(c, what);
}

}  // namespace rcl
