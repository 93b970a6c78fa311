#pragma once

#include <stdexcept>
#include <string>

namespace mws {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& what, long line)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
    long line;
};

struct DuplicateEdge : Error {
    using Error::Error;
};

struct NonIntegralWeight : Error {
    using Error::Error;
};

struct SizeLimitExceeded : Error {
    using Error::Error;
};

struct EnumerationLimitExceeded : Error {
    using Error::Error;
};

struct WeightBelowMinimum : Error {
    using Error::Error;
};

struct InfeasibleParams : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace mws
