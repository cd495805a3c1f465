#pragma once

#include <stdexcept>
#include <string>

namespace nadd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (capacity JSON, rational literal, function literal).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Data that parses but breaks a structural invariant (monotonicity, μ(∅)=0, n range).
class ValidationError : public Error {
public:
    using Error::Error;
};

class MonotonicityViolation : public ValidationError {
public:
    MonotonicityViolation(unsigned smaller, unsigned larger, const std::string& what)
        : ValidationError(what), smaller_mask(smaller), larger_mask(larger) {}
    unsigned smaller_mask;
    unsigned larger_mask;
};

class NonzeroEmptySet : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NegativeValue : public ValidationError {
public:
    NegativeValue(int element, const std::string& what) : ValidationError(what), element(element) {}
    int element;
};

class DistortionNotMonotone : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A theorem hypothesis required by an operation does not hold for the inputs.
class HypothesisViolated : public Error {
public:
    using Error::Error;
};

/// Raised when f∼g fails to be transitive: A and B are null with A ∪ B not null,
/// so χ_A ∼ 0 ∼ −χ_{B∖A} while χ_A ≁ −χ_{B∖A}.
class NotTransitive : public HypothesisViolated {
public:
    NotTransitive(unsigned a, unsigned b, const std::string& what) : HypothesisViolated(what), null_a(a), null_b(b) {}
    unsigned null_a;
    unsigned null_b;
};

class BasisInsufficient : public Error {
public:
    using Error::Error;
};

class UnsupportedSet : public Error {
public:
    using Error::Error;
};

class UndecidableAtHorizon : public Error {
public:
    using Error::Error;
};

class NoFiniteBound : public Error {
public:
    using Error::Error;
};

/// An inequality the theory guarantees was observed to fail; indicates a library bug.
class InequalityViolated : public Error {
public:
    using Error::Error;
};

}  // namespace nadd
