#pragma once

#include <stdexcept>
#include <string>

namespace ringforge {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Structural validation failures raised by make_ring and the JSON loader.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class OrderMismatch : public Error {
public:
    OrderMismatch(int i, int j, const std::string& detail)
        : Error("structure constants violate coordinate orders at (" + std::to_string(i) + "," +
                std::to_string(j) + "): " + detail),
          i(i), j(j) {}
    int i, j;
};

class NotAssociative : public Error {
public:
    NotAssociative(int i, int j, int l)
        : Error("multiplication table is not associative: (b" + std::to_string(i) + "*b" +
                std::to_string(j) + ")*b" + std::to_string(l) + " != b" + std::to_string(i) +
                "*(b" + std::to_string(j) + "*b" + std::to_string(l) + ")"),
          i(i), j(j), l(l) {}
    int i, j, l;
};

class NoIdentity : public Error {
public:
    explicit NoIdentity(int witness_basis)
        : Error("declared identity fails on basis element b" + std::to_string(witness_basis)),
          witness(witness_basis) {}
    int witness;
};

class AmbientMismatch : public Error {
public:
    AmbientMismatch() : Error("subgroups live over different ambient rings") {}
};

class NotAnIdeal : public Error {
public:
    explicit NotAnIdeal(const std::string& witness)
        : Error("subgroup is not a two-sided ideal: " + witness) {}
};

class TooLarge : public Error {
public:
    TooLarge(const std::string& cap_name, long long size, long long cap)
        : Error("input exceeds cap '" + cap_name + "': size " + std::to_string(size) + " > " +
                std::to_string(cap)),
          cap_name(cap_name), size(size), cap(cap) {}
    std::string cap_name;
    long long size, cap;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

class NotFiniteDimensional : public Error {
public:
    using Error::Error;
};

class InvalidGroupTable : public Error {
public:
    using Error::Error;
};

class NotIdempotentModJ : public Error {
public:
    NotIdempotentModJ() : Error("element is not idempotent modulo the radical") {}
};

class ClassificationAmbiguous : public Error {
public:
    using Error::Error;
};

class NotQF : public Error {
public:
    NotQF() : Error("ring is not quasi-Frobenius") {}
};

// An internal consistency check failed; indicates a bug, not bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& name) : Error("unknown corpus name: " + name) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ringforge
