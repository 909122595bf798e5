#pragma once

#include "ckalg/cochain.hpp"
#include "ckalg/rational.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace ckalg {

using DenseMatrix = std::vector<std::vector<Rational>>;

struct RankResult {
    std::size_t rank = 0;
    /// Pivot column of each echelon row, ascending.
    std::vector<std::size_t> pivot_columns;
    /// One vector per free column f (ascending), with entry 1 at f and 0 at the other free columns.
    std::vector<std::vector<Rational>> nullspace;
};

/// Rank and right nullspace of a dense rational matrix by Bareiss fraction-free
/// elimination. Rows are scaled to integers first; the pivot is the first
/// nonzero entry of the leftmost remaining column.
RankResult exact_rank(const DenseMatrix& rows, std::size_t cols);

/// Row space of a growing set of sparse vectors, kept in integer row-echelon form.
///
/// Each stored row is primitive (content 1) with a positive leading entry and is
/// keyed by its leading column. Inserting reduces the candidate against the
/// stored rows fraction-free, so all intermediate values stay integral.
class EchelonBasis {
public:
    using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

    explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Adds v to the spanning set. Returns true when the rank grew.
    bool insert(const SparseVector& v);
    bool contains(const SparseVector& v) const;

    std::vector<std::size_t> pivot_columns() const;
    /// Canonical reduced row echelon basis (leading 1, zeros in other pivot columns).
    std::vector<SparseVector> reduced_rows() const;
    /// Basis of {x : row·x = 0 for all rows}, one vector per free column, ascending.
    std::vector<SparseVector> nullspace() const;
    /// The unique v − s with s in the span and zeros at every pivot column.
    SparseVector normal_form(const SparseVector& v) const;

private:
    IntRow reduce(IntRow row) const;

    std::size_t cols_;
    std::map<std::size_t, IntRow> rows_;
};

/// Integer row proportional to v (denominators cleared, content removed, leading entry positive).
EchelonBasis::IntRow primitive_row(const SparseVector& v);

} // namespace ckalg
