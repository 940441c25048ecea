#pragma once

#include <stdexcept>
#include <string>

namespace mergm {

// The two node modes of a socio-material network.
enum class NodeLevel { Actor, Object };

// The three tie sets: A actor-actor, B object-object, X actor-object.
enum class TieLevel { A, B, X };

inline const char* to_string(TieLevel level) {
    switch (level) {
        case TieLevel::A: return "A";
        case TieLevel::B: return "B";
        case TieLevel::X: return "X";
    }
    return "?";
}

inline const char* to_string(NodeLevel level) {
    return level == NodeLevel::Actor ? "actor" : "object";
}

struct NodeId {
    NodeLevel level;
    int index;

    friend bool operator==(const NodeId&, const NodeId&) = default;
};

// A canonical dyad: first < second for one-mode levels, actor-first for X.
struct DyadRef {
    TieLevel level;
    int first;
    int second;

    friend bool operator==(const DyadRef&, const DyadRef&) = default;
};

// Canonicalizes endpoint order; X dyads are always (actor, object).
inline DyadRef make_dyad(TieLevel level, int u, int v) {
    if (level != TieLevel::X && u > v) std::swap(u, v);
    return DyadRef{level, u, v};
}

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& file, long line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
          line_number(line) {}

    long line_number;
};

}  // namespace mergm
