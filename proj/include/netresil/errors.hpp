#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace netresil {

/// Base class for all domain errors raised by the library.
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

class SelfLoopError : public GraphError {
public:
    explicit SelfLoopError(const std::string& label)
        : GraphError("self-loop on node " + label) {}
};

class UnknownNodeError : public GraphError {
public:
    explicit UnknownNodeError(std::uint32_t node)
        : GraphError("unknown node " + std::to_string(node)), node_(node) {}
    std::uint32_t node() const { return node_; }

private:
    std::uint32_t node_;
};

class EmptyGraphError : public GraphError {
public:
    EmptyGraphError() : GraphError("operation requires a non-empty graph") {}
};

class DisconnectedError : public GraphError {
public:
    DisconnectedError() : GraphError("graph has more than one connected component") {}
};

class NoEdgesError : public GraphError {
public:
    NoEdgesError() : GraphError("operation requires at least one edge") {}
};

class IncompleteAssignmentError : public GraphError {
public:
    IncompleteAssignmentError() : GraphError("community assignment does not cover every node") {}
};

class EmptyDendrogramError : public GraphError {
public:
    EmptyDendrogramError() : GraphError("dendrogram holds no partition snapshots") {}
};

class BadKError : public GraphError {
public:
    BadKError(std::size_t k, std::size_t n)
        : GraphError("target count " + std::to_string(k) + " out of range [1, " +
                     std::to_string(n) + "]") {}
};

class FractionTooSmallError : public GraphError {
public:
    explicit FractionTooSmallError(double fraction)
        : GraphError("fraction " + std::to_string(fraction) +
                     " removes zero nodes from this graph") {}
};

class MismatchedFractionError : public GraphError {
public:
    MismatchedFractionError() : GraphError("scenarios must use the same removal fraction") {}
};

class BadParamsError : public GraphError {
public:
    explicit BadParamsError(const std::string& what) : GraphError(what) {}
};

class MalformedLineError : public GraphError {
public:
    explicit MalformedLineError(std::size_t line_no)
        : GraphError("malformed edge-list line " + std::to_string(line_no)),
          line_no_(line_no) {}
    std::size_t line_no() const { return line_no_; }

private:
    std::size_t line_no_;
};

}  // namespace netresil
