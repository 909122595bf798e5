#pragma once

#include "ckalg/cochain.hpp"
#include "ckalg/generators.hpp"
#include "ckalg/omega.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace ckalg {

struct Term {
    std::size_t index;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Σ coeff·X_index, sorted by index, no zero coefficients.
using LinearCombination = std::vector<Term>;

/// Label-level linear combination, as produced by the closed-form bracket tables.
using LabelCombination = std::vector<std::pair<GeneratorLabel, Rational>>;

/// ε_αβγ on {1,2,3} with ε₁₂₃ = 1.
int epsilon(int alpha, int beta, int gamma);
/// The index γ ∉ {α, β} for α ≠ β.
int third_index(int alpha, int beta);

/// Finite-dimensional real Lie algebra with exact structure constants C_ij^k.
///
/// Only brackets with i < j are stored; [X_j, X_i] is read as −[X_i, X_j].
class LieAlgebra {
public:
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, LinearCombination>;

    LieAlgebra(Family family, OmegaVector omega, std::vector<GeneratorLabel> basis);

    Family family() const { return family_; }
    const OmegaVector& omega() const { return omega_; }
    const std::vector<GeneratorLabel>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    std::optional<std::size_t> index_of(const GeneratorLabel& label) const;
    /// Throws InputError when the label is not in the basis.
    std::size_t require_index(const GeneratorLabel& label) const;

    /// Replaces [X_i, X_j]; an empty combination removes the entry.
    void set_bracket(std::size_t i, std::size_t j, LinearCombination value);
    LinearCombination bracket(std::size_t i, std::size_t j) const;
    Rational constant(std::size_t i, std::size_t j, std::size_t k) const;
    /// Nonzero brackets, keyed by (i, j) with i < j.
    const BracketTable& constants() const { return constants_; }

    /// Same algebra in the basis (X_order[0], X_order[1], …).
    LieAlgebra permuted(const std::vector<std::size_t>& order) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.basis_ == b.basis_ && a.constants_ == b.constants_;
    }

private:
    Family family_;
    OmegaVector omega_;
    std::vector<GeneratorLabel> basis_;
    std::map<GeneratorLabel, std::size_t> index_;
    BracketTable constants_;
};

/// [x, y] from the closed-form commutation tables of the family.
LabelCombination closed_form_bracket(Family family, const OmegaVector& omega, const GeneratorLabel& x,
                                     const GeneratorLabel& y);

/// Closed-form builders.
LieAlgebra build_so(const OmegaVector& omega);
LieAlgebra build_su(const OmegaVector& omega);
LieAlgebra build_u(const OmegaVector& omega);
LieAlgebra build_sq(const OmegaVector& omega);
LieAlgebra build_algebra(Family family, const OmegaVector& omega);

/// Structure constants read off the matrix generators by commutation and
/// decomposition. Throws InternalError if the matrices fail to close.
LieAlgebra from_matrices(Family family, const OmegaVector& omega);

/// Central extension of `base` by Ξ with [X_i, X_j] = Σ C_ij^k X_k + ξ_ij Ξ.
/// Ξ is coordinate base.dim() and commutes with everything.
class ExtendedAlgebra {
public:
    ExtendedAlgebra(LieAlgebra base, TwoCochain xi);

    const LieAlgebra& base() const { return base_; }
    const TwoCochain& xi() const { return xi_; }
    std::size_t dim() const { return base_.dim() + 1; }
    std::size_t central_index() const { return base_.dim(); }
    LinearCombination bracket(std::size_t i, std::size_t j) const;

private:
    LieAlgebra base_;
    TwoCochain xi_;
};

ExtendedAlgebra build_extended(const LieAlgebra& base, const TwoCochain& xi);

bool verify_jacobi(const LieAlgebra& algebra);
bool verify_jacobi(const ExtendedAlgebra& algebra);

} // namespace ckalg
