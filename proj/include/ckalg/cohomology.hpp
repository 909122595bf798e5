#pragma once

#include "ckalg/cochain.hpp"
#include "ckalg/lie_algebra.hpp"
#include "ckalg/linalg.hpp"

#include <cstddef>
#include <vector>

namespace ckalg {

/// Homogeneous linear system over the slots ξ_ij (i < j); one row per triple i < j < l.
struct LinearSystem {
    std::size_t unknowns = 0;
    std::vector<SparseVector> rows;
};

/// Jacobi conditions on ξ for a central extension of `algebra`:
/// Σ_k C_ij^k ξ_kl + C_jl^k ξ_ki + C_li^k ξ_kj = 0 for every i < j < l.
LinearSystem cocycle_equations(const LieAlgebra& algebra);

/// δμ with (δμ)_ij = Σ_k C_ij^k μ_k.
TwoCochain coboundary(const OneCochain& mu, const LieAlgebra& algebra);

/// Direct evaluation of the cocycle conditions on one cochain.
bool is_cocycle(const TwoCochain& xi, const LieAlgebra& algebra);

struct CohomologyResult {
    std::size_t dim_z2 = 0;
    std::size_t dim_b2 = 0;
    std::size_t dim_h2 = 0;
    /// Reduced row echelon bases in slot coordinates.
    std::vector<TwoCochain> z2_basis;
    std::vector<TwoCochain> b2_basis;
    /// One cocycle per H² dimension, each in normal form modulo B².
    std::vector<TwoCochain> h2_representatives;
};

/// Caches the coboundary space of one algebra for repeated triviality tests.
class CohomologySolver {
public:
    explicit CohomologySolver(LieAlgebra algebra);

    const LieAlgebra& algebra() const { return algebra_; }
    std::size_t dim_b2() const { return coboundaries_.rank(); }

    /// Whether the cocycle xi lies in B². Throws InputError for a non-cocycle.
    bool is_trivial(const TwoCochain& xi) const;
    /// Whether xi lies in B², without the cocycle check.
    bool in_coboundary_span(const TwoCochain& xi) const;
    /// Rank of span(B² ∪ cochains) − dim B².
    std::size_t rank_modulo_coboundaries(const std::vector<TwoCochain>& cochains) const;

    CohomologyResult compute() const;

private:
    LieAlgebra algebra_;
    EchelonBasis coboundaries_;
};

std::vector<TwoCochain> cocycle_space(const LieAlgebra& algebra);
std::vector<TwoCochain> coboundary_space(const LieAlgebra& algebra);
CohomologyResult h2(const LieAlgebra& algebra);
bool is_trivial(const TwoCochain& xi, const LieAlgebra& algebra);

} // namespace ckalg
