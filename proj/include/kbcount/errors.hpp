#pragma once

#include <stdexcept>
#include <string>

namespace kb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct RingMismatch : Error {
    RingMismatch() : Error("operands belong to different rings") {}
    explicit RingMismatch(const std::string& what) : Error(what) {}
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& name)
        : Error("no image given for variable '" + name + "'") {}
};

struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& what) : Error(what) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct VariableCollision : Error {
    explicit VariableCollision(const std::string& what) : Error(what) {}
};

struct PartitionInvalid : Error {
    explicit PartitionInvalid(const std::string& what) : Error(what) {}
};

struct DegenerateParameter : Error {
    explicit DegenerateParameter(const std::string& what) : Error(what) {}
};

struct GenericityFailure : Error {
    explicit GenericityFailure(const std::string& what) : Error(what) {}
};

struct NonIntegerResult : Error {
    explicit NonIntegerResult(const std::string& what) : Error(what) {}
};

struct NonconstantDroppedExponent : Error {
    explicit NonconstantDroppedExponent(const std::string& name)
        : Error("dropped variable '" + name + "' has non-constant exponent") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace kb
