#pragma once

#include "ckalg/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace ckalg {

/// Sparse rational vector keyed by coordinate; zero entries are never stored.
using SparseVector = std::map<std::size_t, Rational>;

/// Antisymmetric array ξ_ij on an r-dimensional algebra, stored for i < j only.
class TwoCochain {
public:
    explicit TwoCochain(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    /// r(r−1)/2, the number of independent slots.
    std::size_t slot_count() const { return dim_ * (dim_ - (dim_ > 0 ? 1 : 0)) / 2; }

    /// ξ_ij with ξ_ji = −ξ_ij and ξ_ii = 0.
    Rational get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& value);
    void add(std::size_t i, std::size_t j, const Rational& value);

    const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    /// Coordinates in the lexicographic slot order (0,1), (0,2), …, (r−2,r−1).
    SparseVector to_vector() const;
    static TwoCochain from_vector(std::size_t dim, const SparseVector& v);
    static std::size_t slot_index(std::size_t i, std::size_t j, std::size_t dim);
    static std::pair<std::size_t, std::size_t> slot_pair(std::size_t slot, std::size_t dim);

    TwoCochain& operator+=(const TwoCochain& rhs);
    TwoCochain& operator-=(const TwoCochain& rhs);
    friend TwoCochain operator+(TwoCochain a, const TwoCochain& b) { return a += b; }
    friend TwoCochain operator-(TwoCochain a, const TwoCochain& b) { return a -= b; }
    friend TwoCochain operator*(const Rational& s, const TwoCochain& x);
    friend bool operator==(const TwoCochain&, const TwoCochain&) = default;

private:
    void check(std::size_t i, std::size_t j) const;

    std::size_t dim_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

/// μ_k, one value per generator; induces the generator shift X_k → X_k + μ_k Ξ.
struct OneCochain {
    std::vector<Rational> values;

    static OneCochain zero(std::size_t dim) { return {std::vector<Rational>(dim)}; }
    static OneCochain unit(std::size_t dim, std::size_t k, const Rational& value = 1);
    std::size_t dim() const { return values.size(); }
};

} // namespace ckalg
