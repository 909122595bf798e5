#pragma once

#include "ckalg/hypercomplex.hpp"
#include "ckalg/omega.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ckalg {

/// Dense square matrix over R, C or H. Every entry carries the matrix kind.
class MatrixOverK {
public:
    MatrixOverK(std::size_t dim, ScalarKind kind);

    static MatrixOverK zero(std::size_t dim, ScalarKind kind) { return {dim, kind}; }
    /// e_ab: a single 1 in row a, column b.
    static MatrixOverK elementary(std::size_t dim, std::size_t a, std::size_t b, ScalarKind kind);

    std::size_t dim() const { return dim_; }
    ScalarKind kind() const { return kind_; }

    const Hypercomplex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    /// Stores `value` re-tagged with the matrix kind.
    void set(std::size_t row, std::size_t col, const Hypercomplex& value);

    bool is_zero() const;

    /// Real coordinates, row-major over entries, then (w, x, y, z) truncated to the kind.
    std::vector<Rational> flatten() const;

    MatrixOverK conj_transpose() const;
    Hypercomplex trace() const;

    MatrixOverK& operator+=(const MatrixOverK& rhs);
    MatrixOverK& operator-=(const MatrixOverK& rhs);
    friend MatrixOverK operator+(MatrixOverK lhs, const MatrixOverK& rhs) { return lhs += rhs; }
    friend MatrixOverK operator-(MatrixOverK lhs, const MatrixOverK& rhs) { return lhs -= rhs; }
    friend MatrixOverK operator*(const MatrixOverK& lhs, const MatrixOverK& rhs);
    /// Left scalar multiplication q·X (order matters over H).
    friend MatrixOverK operator*(const Hypercomplex& q, const MatrixOverK& x);
    /// Real scalar multiple.
    friend MatrixOverK operator*(const Rational& r, const MatrixOverK& x);

    friend bool operator==(const MatrixOverK& a, const MatrixOverK& b);

private:
    void check_compatible(const MatrixOverK& other) const;

    std::size_t dim_;
    ScalarKind kind_;
    std::vector<Hypercomplex> entries_;
};

/// Diagonal CK metric diag(1, ω_01, ω_02, …, ω_0N).
class MetricMatrix {
public:
    explicit MetricMatrix(std::vector<Rational> diag);

    const std::vector<Rational>& diag() const { return diag_; }
    std::size_t dim() const { return diag_.size(); }
    /// (#positive, #negative) entries; empty when some entry vanishes.
    std::optional<std::pair<std::size_t, std::size_t>> signature() const;
    MatrixOverK as_matrix(ScalarKind kind) const;

private:
    std::vector<Rational> diag_;
};

MetricMatrix build_metric(const OmegaVector& omega);

/// X† g + g X == 0, exactly.
bool is_metric_antihermitian(const MatrixOverK& x, const MetricMatrix& g);
bool is_traceless(const MatrixOverK& x);
MatrixOverK mat_commutator(const MatrixOverK& x, const MatrixOverK& y);

/// Solves X = Σ c_k basis_k for real rational c_k. The basis is fixed at
/// construction so repeated decompositions share one elimination.
class BasisDecomposer {
public:
    explicit BasisDecomposer(const std::vector<MatrixOverK>& basis);

    /// Coefficients, or nullopt when X is outside the real span.
    std::optional<std::vector<Rational>> decompose(const MatrixOverK& x) const;
    std::size_t size() const { return basis_size_; }

private:
    std::size_t basis_size_ = 0;
    std::size_t coords_ = 0;
    std::size_t dim_ = 0;
    ScalarKind kind_ = ScalarKind::real;
    // Row-reduction transform T (coords × coords) and pivot layout of T·A,
    // where the columns of A are the flattened basis matrices.
    std::vector<std::vector<Rational>> transform_;
    std::vector<std::size_t> pivot_row_of_column_;
    std::size_t rank_ = 0;
};

/// One-shot form of BasisDecomposer. Throws InternalError when X is not in the span
/// and InputError when the basis is linearly dependent.
std::vector<Rational> decompose_in_basis(const MatrixOverK& x, const std::vector<MatrixOverK>& basis);

} // namespace ckalg
