#pragma once

#include <stdexcept>
#include <string>

namespace crossfield {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (bad rows, duplicate keys, broken
// references). Messages carry "file:line" provenance where available.
struct DataError : Error {
    using Error::Error;
};

// A code or id that is not registered in the scheme / corpus.
struct LookupError : Error {
    using Error::Error;
};

// An operation invoked outside its mathematical domain (zero denominator,
// constant vector, infeasible generator parameters).
struct DomainError : Error {
    using Error::Error;
};

}  // namespace crossfield
