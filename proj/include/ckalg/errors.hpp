#pragma once

#include <stdexcept>
#include <string>

namespace ckalg {

/// Malformed or out-of-range caller input (bad ω string, label/family mismatch, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal invariant failed, e.g. a matrix commutator that does not decompose
/// in the generator basis. Always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace ckalg
