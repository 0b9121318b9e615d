#pragma once

#include <stdexcept>
#include <string>

namespace qtx {

// Error taxonomy. The C API maps each type to a status code in qtx.h.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad caller input: out-of-range value, dimension mismatch, unknown name.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Integration or optimization produced non-finite or drifting values.
class NumericalInstability : public Error {
public:
    using Error::Error;
};

// Linear system has no unique solution (multiple steady states, exact resonance).
class DegenerateSystem : public Error {
public:
    using Error::Error;
};

// API called out of sequence (e.g. stepping a finished episode).
class ProtocolViolation : public Error {
public:
    using Error::Error;
};

// Required state missing (e.g. adapting an agent that was never trained).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Config file could not be parsed; message carries the line number.
class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class CorruptFile : public Error {
public:
    using Error::Error;
};

class VersionMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace qtx
