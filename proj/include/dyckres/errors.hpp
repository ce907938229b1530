#pragma once

#include <stdexcept>
#include <string>

namespace dyckres {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedPartition : public Error {
public:
    using Error::Error;
};

class NotDyck : public Error {
public:
    using Error::Error;
};

class OverlapError : public Error {
public:
    using Error::Error;
};

class TooManyRows : public Error {
public:
    using Error::Error;
};

class BadShape : public Error {
public:
    using Error::Error;
};

class NotACorner : public Error {
public:
    using Error::Error;
};

class BadArgs : public Error {
public:
    using Error::Error;
};

// An internal cross-check failed, e.g. a simple module came out with a
// negative multiplicity. Always a bug, never a user error.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace dyckres
