#pragma once

#include <stdexcept>
#include <string>

namespace mmph {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input data: unsorted keys, duplicates, values out of range, bad files.
class DataError : public Error {
public:
    using Error::Error;
};

// rank query position past the end of the bit vector.
class RankOutOfRange : public Error {
public:
    using Error::Error;
};

// select index outside [1..popcount]; deliberately distinct from RankOutOfRange.
class SelectOutOfRange : public Error {
public:
    using Error::Error;
};

// Query violating a structure precondition (x >= u, query on empty structure).
class QueryError : public Error {
public:
    using Error::Error;
};

// An exact computation would exceed a configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Randomized construction exhausted its retry budget.
class BuildError : public Error {
public:
    using Error::Error;
};

// Corrupt or unsupported serialized container.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace mmph
