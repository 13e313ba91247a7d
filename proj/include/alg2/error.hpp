#pragma once

#include <stdexcept>
#include <string>

namespace alg2 {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes or algebras do not line up (mismatched middle algebra, wrong dims, ...).
class ShapeError : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class InvalidAlgebra : public Error {
public:
    using Error::Error;
};

class InvalidBimodule : public Error {
public:
    using Error::Error;
};

class NotSemisimple : public Error {
public:
    using Error::Error;
};

/// A minimal polynomial kept producing irrational roots, or a block is not a full matrix algebra over Q.
class NotSplit : public Error {
public:
    using Error::Error;
};

class NoCertificate : public Error {
public:
    using Error::Error;
};

class DualBasisNotFound : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Bad command-line input: unknown suite, unreadable path.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace alg2
