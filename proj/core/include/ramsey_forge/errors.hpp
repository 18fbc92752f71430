#pragma once

#include <stdexcept>
#include <string>

namespace rf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// Malformed input file; carries a 1-based line number when known.
struct ParseError : Error {
    ParseError(const std::string& msg, long line = 0)
        : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg), line(line) {}
    long line;
};

// An exhaustive procedure was asked to exceed its configured budget.
struct BudgetError : Error {
    using Error::Error;
};

// A randomized search exhausted its retry budget without reaching either
// of the operation's declared outcomes. Honest failure, not a bug.
struct SearchFailure : Error {
    SearchFailure(const std::string& msg, std::string state_json = "")
        : Error(msg), state(std::move(state_json)) {}
    std::string state;
};

// A run completed but the claimed bound was not met (CLI exit code 2).
struct GuaranteeFailure : Error {
    using Error::Error;
};

// An internal invariant that should be unconditionally true failed.
struct ContractError : Error {
    using Error::Error;
};

}  // namespace rf
