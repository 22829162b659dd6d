#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace treefree {

// Malformed input: bad edge list, bad pattern text, bad DIMACS file.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (invalid ordering, k <= 1 with edges...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A clique with more vertices than the clique bound allows turned up.
class HypothesisFailure : public ContractViolation {
public:
    HypothesisFailure(const std::string& what, std::vector<int> clique)
        : ContractViolation(what), clique(std::move(clique))
    {
    }
    std::vector<int> clique;
};

// An oracle was asked for an instance above its configured size limit.
class OracleRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters fail a hypothesis of the step being run; the caller falls back.
class ParameterRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An invariant the construction guarantees was found broken. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace treefree
