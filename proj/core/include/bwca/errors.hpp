#ifndef BWCA_ERRORS_HPP
#define BWCA_ERRORS_HPP

#include <stdexcept>

namespace bwca {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An argument violates an operation's precondition.
struct InvalidInputError : Error {
    using Error::Error;
};

// Encoded data that cannot be decoded back.
struct CorruptStreamError : Error {
    using Error::Error;
};

// A serialized artifact (container, dictionary file, word log) breaks its layout.
struct FormatError : Error {
    using Error::Error;
};

// Inconsistent wiring, e.g. a dictionary pipeline without a dictionary.
struct ConfigError : Error {
    using Error::Error;
};

// The container was written under a different dictionary.
struct DictionaryMismatchError : Error {
    using Error::Error;
};

// A measured roundtrip failed to reproduce its input.
struct VerificationError : Error {
    using Error::Error;
};

} // namespace bwca

#endif
