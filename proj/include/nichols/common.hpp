#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

// Base class for all library errors. Subclasses exist where callers need to
// distinguish outcomes programmatically.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

class DenominatorVanishesAtOne : public Error {
public:
    DenominatorVanishesAtOne() : Error("denominator vanishes at t = 1") {}
};

class NotInA1 : public Error {
public:
    NotInA1() : Error("coefficient has a pole at t = 1") {}
};

class LetterOutOfRange : public InputError {
public:
    explicit LetterOutOfRange(int letter, int n_letters)
        : InputError("letter " + std::to_string(letter) + " outside 1.." + std::to_string(n_letters)) {}
};

class DegreeMismatch : public InputError {
public:
    explicit DegreeMismatch(const std::string& what) : InputError(what) {}
};

class NotSubspace : public Error {
public:
    explicit NotSubspace(const std::string& what) : Error(what) {}
};

class NonMonomialBraiding : public Error {
public:
    NonMonomialBraiding() : Error("braiding entry is not a pure power of t") {}
};

class InvalidCartan : public InputError {
public:
    explicit InvalidCartan(const std::string& what) : InputError(what) {}
};

class NotSymmetric : public Error {
public:
    NotSymmetric() : Error("braiding matrix is not symmetric") {}
};

class VerificationFailure : public Error {
public:
    explicit VerificationFailure(const std::string& what) : Error(what) {}
};

} // namespace nichols
