#pragma once

#include "ckalg/rational.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ckalg {

/// The N contraction coefficients ω = (ω_1, …, ω_N), N ≥ 1.
///
/// Entries are arbitrary rationals; `canonical_signs` gives the {−1, 0, +1}
/// pattern that classifies the algebra up to rescaling.
class OmegaVector {
public:
    explicit OmegaVector(std::vector<Rational> coeffs);

    /// Comma-separated rationals, e.g. "1,0,-1/2".
    static OmegaVector parse(std::string_view text);

    /// N, the number of coefficients. The matrices are (N+1)×(N+1).
    std::size_t size() const { return coeffs_.size(); }

    /// ω_a for 1 ≤ a ≤ N.
    const Rational& at(std::size_t a) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    std::vector<int> canonical_signs() const;
    /// Indices a (1-based) with ω_a = 0.
    std::set<std::size_t> zero_set() const;
    std::size_t zero_count() const { return zero_set().size(); }

    /// "1,0,-1/2"
    std::string to_string() const;

    friend bool operator==(const OmegaVector&, const OmegaVector&) = default;
    friend auto operator<=>(const OmegaVector& a, const OmegaVector& b) { return a.coeffs_ <=> b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

/// ω_ab = ω_{a+1}···ω_b for 0 ≤ a ≤ b ≤ N, with ω_aa = 1.
Rational omega_product(const OmegaVector& omega, std::size_t a, std::size_t b);

/// Inönü–Wigner contraction: ω with the listed (1-based) entries set to 0.
OmegaVector contract(const OmegaVector& omega, const std::set<std::size_t>& zero_set);

/// All 3^n vectors over {−1, 0, +1}, in lexicographic order.
std::vector<OmegaVector> sign_patterns(std::size_t n);

} // namespace ckalg
