#ifndef NORMTUPLE_ERRORS_HPP
#define NORMTUPLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace normtuple {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated precondition or malformed input (bad argument, mixed fields,
/// duplicate tuple elements, non-fundamental modulus where one is required).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The modulus has square-free core 1, so Q(sqrt(n)) degenerates to Q and
/// field-dependent operations refuse to run.
class DegenerateFieldError : public DomainError {
public:
    using DomainError::DomainError;
};

/// t1*t2 + n is not a perfect square: the input is not a D(n)-pair.
/// Deliberately not a DomainError; callers treat it as "property fails"
/// rather than "bad usage".
class NotAPairError : public Error {
public:
    using Error::Error;
};

/// The requested computation exceeds a configured resource guarantee
/// (e.g. a composite cofactor survives the trial-division bound). Never
/// silently degrades to a wrong answer.
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// A conclusion guaranteed by the underlying theorems failed to hold.
/// Indicates a bug in this library, never expected at runtime.
class TheoremViolationError : public Error {
public:
    using Error::Error;
};

} // namespace normtuple

#endif
