#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Constructor preconditions on orders/dimensions (n < 2, non-prime p, ...).
struct InvalidOrderError : Error {
    using Error::Error;
};

// A construction would exceed the configured maximum ring/group order.
struct SizeCapError : Error {
    using Error::Error;
};

struct NotAnIdealError : Error {
    using Error::Error;
};

struct NotASubgroupError : Error {
    using Error::Error;
};

// Cross-checks that can only fail when a table is corrupt (e.g. the three
// defining forms of the delta set disagreeing).
struct ConsistencyError : Error {
    using Error::Error;
};

// Bad command-line / registry arguments: unknown theorem id, unknown
// decomposition kind, out-of-range element index.
struct UsageError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
    int line = 0;
    int col = 0;
};

}  // namespace ringlab
