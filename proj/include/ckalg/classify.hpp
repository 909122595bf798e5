#pragma once

#include "ckalg/cochain.hpp"
#include "ckalg/cohomology.hpp"
#include "ckalg/generators.hpp"
#include "ckalg/omega.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ckalg {

/// Type II: a pseudoextension, nontrivial only after suitable contractions.
/// Type III: constrained; nontrivial whenever it may be nonzero.
enum class CoefficientType { II, III };
std::string to_string(CoefficientType type);

/// Named extension coefficient, e.g. alphaF[2,3], alphaL[0,1], beta[1,3], alpha[2], gamma[1].
struct CoefficientName {
    enum class Kind { alpha_f, alpha_l, beta, alpha, gamma };
    Kind kind = Kind::alpha;
    std::size_t i = 0;
    std::size_t j = 0;

    std::string to_string() const;
    /// Throws InputError for malformed names.
    static CoefficientName parse(std::string_view text);
    friend bool operator==(const CoefficientName&, const CoefficientName&) = default;
};

struct CatalogEntry {
    CoefficientName id;
    std::string name;
    CoefficientType type = CoefficientType::II;
    bool active = false;
    std::string constraint_note;
};

struct ExtensionCoefficientCatalog {
    Family family = Family::so;
    OmegaVector omega{std::vector<Rational>{Rational(1)}};
    std::vector<CatalogEntry> entries;

    /// Predicted dim H²: the number of active entries.
    std::size_t count() const;
    std::vector<std::string> active_names() const;
};

struct ZeroPattern {
    std::size_t n = 0;
    std::set<std::size_t> zero_set;
};
ZeroPattern zero_pattern(const OmegaVector& omega);

ExtensionCoefficientCatalog predict_so(const OmegaVector& omega);
ExtensionCoefficientCatalog predict_su(const OmegaVector& omega);
ExtensionCoefficientCatalog predict_u(const OmegaVector& omega);
ExtensionCoefficientCatalog predict_sq(const OmegaVector& omega);
ExtensionCoefficientCatalog predict(Family family, const OmegaVector& omega);

/// The factors ω_x or ω_xω_y that must annihilate beta[b+1,d+1] in so_ω, each given
/// as its list of ω indices. Factors touching ω_0 or ω_{N+1} are left out.
std::vector<std::vector<std::size_t>> beta_constraint_factors(std::size_t n, std::size_t b, std::size_t d);

/// The cochain carrying a unit value of the named coefficient at exactly the
/// bracket slots the closed-form extended brackets assign to it, with their ω factors.
/// Coordinates follow the canonical basis of build_algebra(family, omega).
TwoCochain paper_cocycle(Family family, const OmegaVector& omega, std::string_view name);

/// The named coefficient with its constraint applied: a type II pair member comes
/// with its partner scaled to satisfy ω_{p+2}·alphaF = ω_p·alphaL. nullopt when the
/// constraints force the coefficient to vanish.
std::optional<TwoCochain> admissible_cochain(Family family, const OmegaVector& omega, std::string_view name);

/// The generator shift μ that removes a trivial type II coefficient: the
/// admissible cochain equals coboundary(μ). nullopt when the coefficient is
/// nontrivial, forced to zero, or of type III.
std::optional<OneCochain> removal_shift(Family family, const OmegaVector& omega, std::string_view name);

struct CoefficientVerdict {
    std::string name;
    CoefficientType type = CoefficientType::II;
    bool active = false;
    /// "nontrivial", "trivial", "forced_zero", "not_cocycle" (the constrained cochain
    /// fails the cocycle equations) or "not_forced" (claimed forced zero, yet a cocycle).
    std::string verdict;
    bool ok = false;
};

struct CrosscheckReport {
    Family family = Family::so;
    OmegaVector omega{std::vector<Rational>{Rational(1)}};
    std::size_t predicted = 0;
    CohomologyResult cohomology;
    std::vector<CoefficientVerdict> verdicts;
    /// Whether the active cochains are independent modulo B².
    bool active_independent = false;
    bool match = false;
};

/// Predictor against solver: counts, per-coefficient triviality, and the match flag.
CrosscheckReport crosscheck(Family family, const OmegaVector& omega);
/// Same, reusing an existing solver for the algebra build_algebra(family, omega).
CrosscheckReport crosscheck(const CohomologySolver& solver, const CohomologyResult& result);

} // namespace ckalg
