// Copyright (c) dygraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dygraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateEdge : Error {
    DuplicateEdge(int u, int v)
        : Error("duplicate edge " + std::to_string(u) + "->" + std::to_string(v)) {}
};

struct MissingEdge : Error {
    MissingEdge(int u, int v)
        : Error("missing edge " + std::to_string(u) + "->" + std::to_string(v)) {}
};

struct WeightOutOfRange : Error {
    using Error::Error;
};

struct BadVertex : Error {
    BadVertex(int v, int n)
        : Error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")") {}
};

struct Singular : Error {
    Singular() : Error("matrix is singular") {}
};

struct RandomnessExhausted : Error {
    RandomnessExhausted() : Error("3 singular rebuilds in a row") {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct EntryOutOfRange : Error {
    using Error::Error;
};

struct BadEpsilon : Error {
    using Error::Error;
};

struct DuplicateRow : Error {
    DuplicateRow(int r) : Error("row " + std::to_string(r) + " already tracked") {}
};

struct NoMark : Error {
    NoMark() : Error("rollback without a mark") {}
};

struct CycleIntroduced : Error {
    CycleIntroduced(int u, int v)
        : Error("insertion " + std::to_string(u) + "->" + std::to_string(v) + " closes a cycle") {}
};

struct NotStronglyConnected : Error {
    NotStronglyConnected(int u, int v)
        : Error(std::to_string(u) + " and " + std::to_string(v) + " are not strongly connected") {}
};

struct UnknownComponent : Error {
    UnknownComponent(int id) : Error("unknown component " + std::to_string(id)) {}
};

struct InternalInconsistency : Error {
    using Error::Error;
};

struct EndpointMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

struct EngineMismatch : Error {
    using Error::Error;
};

struct CheckFailure : Error {
    using Error::Error;
};

}  // namespace dygraph
