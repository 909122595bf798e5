#include "ckalg/cochain.hpp"

#include "ckalg/errors.hpp"

#include <string>

namespace ckalg {

void TwoCochain::check(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) {
        throw InputError("cochain index out of range");
    }
}

Rational TwoCochain::get(std::size_t i, std::size_t j) const {
    check(i, j);
    if (i == j) {
        return 0;
    }
    const bool flip = i > j;
    const auto it = entries_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == entries_.end()) {
        return 0;
    }
    return flip ? -it->second : it->second;
}

void TwoCochain::set(std::size_t i, std::size_t j, const Rational& value) {
    check(i, j);
    if (i == j) {
        if (!value.is_zero()) {
            throw InputError("diagonal cochain entries must vanish");
        }
        return;
    }
    const bool flip = i > j;
    const auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
    const Rational v = flip ? -value : value;
    if (v.is_zero()) {
        entries_.erase(key);
    } else {
        entries_[key] = v;
    }
}

void TwoCochain::add(std::size_t i, std::size_t j, const Rational& value) {
    set(i, j, get(i, j) + value);
}

SparseVector TwoCochain::to_vector() const {
    SparseVector v;
    for (const auto& [key, value] : entries_) {
        v.emplace(slot_index(key.first, key.second, dim_), value);
    }
    return v;
}

TwoCochain TwoCochain::from_vector(std::size_t dim, const SparseVector& v) {
    TwoCochain out(dim);
    for (const auto& [slot, value] : v) {
        const auto [i, j] = slot_pair(slot, dim);
        out.set(i, j, value);
    }
    return out;
}

std::size_t TwoCochain::slot_index(std::size_t i, std::size_t j, std::size_t dim) {
    if (!(i < j && j < dim)) {
        throw InputError("slot_index needs i < j < dim");
    }
    return i * (2 * dim - i - 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> TwoCochain::slot_pair(std::size_t slot, std::size_t dim) {
    std::size_t i = 0;
    std::size_t row = dim - 1;
    while (row > 0 && slot >= row) {
        slot -= row;
        ++i;
        --row;
    }
    if (row == 0) {
        throw InputError("slot " + std::to_string(slot) + " out of range");
    }
    return {i, i + 1 + slot};
}

TwoCochain& TwoCochain::operator+=(const TwoCochain& rhs) {
    if (rhs.dim_ != dim_) {
        throw InputError("cochain dimension mismatch");
    }
    for (const auto& [key, value] : rhs.entries_) {
        add(key.first, key.second, value);
    }
    return *this;
}

TwoCochain& TwoCochain::operator-=(const TwoCochain& rhs) {
    if (rhs.dim_ != dim_) {
        throw InputError("cochain dimension mismatch");
    }
    for (const auto& [key, value] : rhs.entries_) {
        add(key.first, key.second, -value);
    }
    return *this;
}

TwoCochain operator*(const Rational& s, const TwoCochain& x) {
    TwoCochain out(x.dim_);
    if (s.is_zero()) {
        return out;
    }
    for (const auto& [key, value] : x.entries_) {
        out.entries_.emplace(key, s * value);
    }
    return out;
}

OneCochain OneCochain::unit(std::size_t dim, std::size_t k, const Rational& value) {
    if (k >= dim) {
        throw InputError("one-cochain index out of range");
    }
    OneCochain mu = zero(dim);
    mu.values[k] = value;
    return mu;
}

} // namespace ckalg
