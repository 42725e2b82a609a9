#pragma once

#include <stdexcept>
#include <string>

namespace classint {

// Contract violations and expected failure modes, one type per condition so
// callers and tests can discriminate without string matching.

struct RankMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonLatticeExponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A coefficient was requested beyond the reliable truncation window.  Such a
// coefficient is unknown, never silently zero.
struct OutsideWindow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivergentDirection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ObstructedIntegration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentPair : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotIrreducible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RankTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotObtuse : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotListed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadParameterCount : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SideConditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptySupport : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotMonomial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidTriple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace classint
