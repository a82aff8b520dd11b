#pragma once

#include <stdexcept>
#include <string>

namespace vgc {

// A named hypothesis of an operation was violated by the caller.
struct PreconditionError : std::invalid_argument {
    std::string hypothesis;
    PreconditionError(std::string hyp, const std::string& what)
        : std::invalid_argument(what), hypothesis(std::move(hyp)) {}
};

struct DomainError : PreconditionError {
    explicit DomainError(const std::string& what) : PreconditionError("domain", what) {}
};

struct UnsupportedInput : PreconditionError {
    explicit UnsupportedInput(const std::string& what) : PreconditionError("supported-input", what) {}
};

struct PoleError : std::runtime_error {
    int order;
    PoleError(int ord, const std::string& what) : std::runtime_error(what), order(ord) {}
};

// Results disagree with themselves: non-integral Euler characteristics,
// dependence on generic parameters, wrong fixed-locus dimension...
struct ConsistencyError : std::runtime_error {
    std::string invariant;
    ConsistencyError(std::string inv, const std::string& what)
        : std::runtime_error(what), invariant(std::move(inv)) {}
};

}  // namespace vgc
