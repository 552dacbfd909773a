#pragma once

#include <stdexcept>
#include <string>

namespace lmg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NodeNotFound : public Error {
public:
    using Error::Error;
};

// Violated structural invariant at construction time: loops, duplicate
// edges, bad labels.
class GraphError : public Error {
public:
    using Error::Error;
};

class MalformedPath : public Error {
public:
    using Error::Error;
};

class InvalidQuery : public Error {
public:
    using Error::Error;
};

class EnumerationLimit : public Error {
public:
    using Error::Error;
};

// An operation's class precondition (ancestral, maximal, RCG, ...) failed.
class ClassViolation : public Error {
public:
    using Error::Error;
};

// Two graphs passed to a binary operation do not share a node set.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

// A transform was asked to run on a graph that fails the representational
// condition for the target class.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    enum class Kind { DuplicateEdge, Loop, UnknownNode, BadToken };

    ParseError(int line, Kind kind, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line), kind_(kind) {}

    int line() const { return line_; }
    Kind kind() const { return kind_; }

private:
    int line_;
    Kind kind_;
};

} // namespace lmg
