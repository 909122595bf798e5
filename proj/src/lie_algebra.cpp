#include "ckalg/lie_algebra.hpp"

#include "ckalg/errors.hpp"
#include "ckalg/matrix.hpp"

#include <algorithm>

namespace ckalg {

int epsilon(int alpha, int beta, int gamma) {
    const auto in_range = [](int v) { return v >= 1 && v <= 3; };
    if (!in_range(alpha) || !in_range(beta) || !in_range(gamma)) {
        throw InputError("epsilon indices must be in 1..3");
    }
    if (alpha == beta || beta == gamma || alpha == gamma) {
        return 0;
    }
    // Even permutations of (1,2,3) are its cyclic shifts.
    return ((beta - alpha + 3) % 3 == 1) ? 1 : -1;
}

int third_index(int alpha, int beta) {
    if (alpha == beta) {
        throw InputError("third_index needs distinct indices");
    }
    return 6 - alpha - beta;
}

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra::LieAlgebra(Family family, OmegaVector omega, std::vector<GeneratorLabel> basis)
    : family_(family), omega_(std::move(omega)), basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (!index_.emplace(basis_[i], i).second) {
            throw InputError("duplicate basis label " + basis_[i].to_string());
        }
    }
}

std::optional<std::size_t> LieAlgebra::index_of(const GeneratorLabel& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t LieAlgebra::require_index(const GeneratorLabel& label) const {
    if (auto i = index_of(label)) {
        return *i;
    }
    throw InputError("label " + label.to_string() + " is not in the basis");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, LinearCombination value) {
    if (i >= dim() || j >= dim() || i == j) {
        throw InputError("set_bracket needs distinct in-range indices");
    }
    if (i > j) {
        std::swap(i, j);
        for (auto& t : value) {
            t.coeff = -t.coeff;
        }
    }
    std::sort(value.begin(), value.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    std::erase_if(value, [](const Term& t) { return t.coeff.is_zero(); });
    if (value.empty()) {
        constants_.erase({i, j});
    } else {
        constants_[{i, j}] = std::move(value);
    }
}

LinearCombination LieAlgebra::bracket(std::size_t i, std::size_t j) const {
    if (i == j) {
        return {};
    }
    const bool flip = i > j;
    const auto it = constants_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == constants_.end()) {
        return {};
    }
    LinearCombination out = it->second;
    if (flip) {
        for (auto& t : out) {
            t.coeff = -t.coeff;
        }
    }
    return out;
}

Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& t : bracket(i, j)) {
        if (t.index == k) {
            return t.coeff;
        }
    }
    return 0;
}

LieAlgebra LieAlgebra::permuted(const std::vector<std::size_t>& order) const {
    if (order.size() != dim()) {
        throw InputError("permutation length differs from the dimension");
    }
    std::vector<std::size_t> new_index(dim(), dim());
    std::vector<GeneratorLabel> labels;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (order[pos] >= dim() || new_index[order[pos]] != dim()) {
            throw InputError("not a permutation");
        }
        new_index[order[pos]] = pos;
        labels.push_back(basis_[order[pos]]);
    }
    LieAlgebra out(family_, omega_, std::move(labels));
    for (const auto& [key, value] : constants_) {
        LinearCombination mapped;
        for (const auto& t : value) {
            mapped.push_back({new_index[t.index], t.coeff});
        }
        out.set_bracket(new_index[key.first], new_index[key.second], std::move(mapped));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form bracket tables

namespace {

// How two index pairs (p1,p2), (q1,q2) with p1<p2, q1<q2 overlap. Patterns are
// named after the tables: with a<b<c, "ab_ac" is [X_ab, Y_ac], and so on.
enum class Incidence { same, ab_ac, ab_bc, ac_bc, disjoint, reversed };

struct PairRelation {
    Incidence kind;
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
};

PairRelation relate(std::size_t p1, std::size_t p2, std::size_t q1, std::size_t q2) {
    if (p1 == q1 && p2 == q2) return {Incidence::same, p1, p2};
    if (p1 == q1 && p2 < q2) return {Incidence::ab_ac, p1, p2, q2};
    if (p2 == q1) return {Incidence::ab_bc, p1, p2, q2};
    if (p2 == q2 && p1 < q1) return {Incidence::ac_bc, p1, q1, p2};
    if (p1 != q1 && p1 != q2 && p2 != q1 && p2 != q2) return {Incidence::disjoint};
    return {Incidence::reversed};
}

int delta(std::size_t x, std::size_t y) { return x == y ? 1 : 0; }

bool is_pair_type(GeneratorType t) {
    return t == GeneratorType::J || t == GeneratorType::M || t == GeneratorType::Mq;
}

class BracketTables {
public:
    BracketTables(Family family, const OmegaVector& omega) : family_(family), omega_(omega) {}

    LabelCombination bracket(const GeneratorLabel& x, const GeneratorLabel& y) const {
        if (auto direct = ordered(x, y)) {
            return *direct;
        }
        auto swapped = ordered(y, x);
        if (!swapped) {
            throw InternalError("no bracket rule for [" + x.to_string() + ", " + y.to_string() + "]");
        }
        for (auto& term : *swapped) {
            term.second = -term.second;
        }
        return *swapped;
    }

private:
    Rational w(std::size_t a, std::size_t b) const { return omega_product(omega_, a, b); }

    // M_ab in su/u, M^α_ab in sq.
    GeneratorLabel m(int alpha, std::size_t a, std::size_t b) const {
        return family_ == Family::sq ? GeneratorLabel::Mq(alpha, a, b) : GeneratorLabel::M(a, b);
    }

    // nullopt means the table lists this bracket in the opposite order.
    std::optional<LabelCombination> ordered(const GeneratorLabel& x, const GeneratorLabel& y) const {
        using T = GeneratorType;
        if (x.type == T::I || y.type == T::I) {
            return LabelCombination{};
        }
        if (is_pair_type(x.type) && is_pair_type(y.type)) {
            return pair_pair(x, y);
        }
        if (is_pair_type(x.type) && y.type == T::B) {
            // [J_ab, B_l] = D M_ab,  [M_ab, B_l] = −D J_ab
            const std::size_t l = y.a;
            const int d = delta(x.a, l - 1) - delta(x.b, l - 1) + delta(x.b, l) - delta(x.a, l);
            if (x.type == T::J) {
                return LabelCombination{{GeneratorLabel::M(x.a, x.b), Rational(d)}};
            }
            return LabelCombination{{GeneratorLabel::J(x.a, x.b), Rational(-d)}};
        }
        if (x.type == T::B && y.type == T::B) {
            return LabelCombination{};
        }
        if (is_pair_type(x.type) && y.type == T::E) {
            const std::size_t d = y.a;
            if (x.type == T::J) {
                // [J_ab, E^α_d] = (δ_ad − δ_bd) M^α_ab
                return LabelCombination{{GeneratorLabel::Mq(y.alpha, x.a, x.b), Rational(delta(x.a, d) - delta(x.b, d))}};
            }
            if (x.alpha == y.alpha) {
                // [M^α_ab, E^α_d] = −(δ_ad − δ_bd) J_ab
                return LabelCombination{{GeneratorLabel::J(x.a, x.b), Rational(delta(x.b, d) - delta(x.a, d))}};
            }
            // [M^α_ab, E^β_d] = (δ_ad + δ_bd) ε_αβγ M^γ_ab
            const int gamma = third_index(x.alpha, y.alpha);
            const int coeff = (delta(x.a, d) + delta(x.b, d)) * epsilon(x.alpha, y.alpha, gamma);
            return LabelCombination{{GeneratorLabel::Mq(gamma, x.a, x.b), Rational(coeff)}};
        }
        if (x.type == T::E && y.type == T::E) {
            if (x.alpha == y.alpha || x.a != y.a) {
                return LabelCombination{};
            }
            // [E^α_a, E^β_a] = 2 ε_αβγ E^γ_a
            const int gamma = third_index(x.alpha, y.alpha);
            return LabelCombination{{GeneratorLabel::E(gamma, x.a), Rational(2 * epsilon(x.alpha, y.alpha, gamma))}};
        }
        return std::nullopt;
    }

    std::optional<LabelCombination> pair_pair(const GeneratorLabel& x, const GeneratorLabel& y) const {
        using T = GeneratorType;
        const auto rel = relate(x.a, x.b, y.a, y.b);
        if (rel.kind == Incidence::disjoint) {
            return LabelCombination{};
        }
        if (rel.kind == Incidence::reversed) {
            return std::nullopt;
        }
        const auto [kind, a, b, c] = rel;
        const bool xj = x.type == T::J;
        const bool yj = y.type == T::J;

        if (xj && yj) {
            switch (kind) {
            case Incidence::same: return LabelCombination{};
            case Incidence::ab_ac: return LabelCombination{{GeneratorLabel::J(b, c), w(a, b)}};
            case Incidence::ab_bc: return LabelCombination{{GeneratorLabel::J(a, c), Rational(-1)}};
            case Incidence::ac_bc: return LabelCombination{{GeneratorLabel::J(a, b), w(b, c)}};
            default: break;
            }
        }
        if (!xj && !yj && x.alpha == y.alpha) {
            switch (kind) {
            case Incidence::same: return LabelCombination{};
            case Incidence::ab_ac: return LabelCombination{{GeneratorLabel::J(b, c), w(a, b)}};
            case Incidence::ab_bc: return LabelCombination{{GeneratorLabel::J(a, c), Rational(1)}};
            case Incidence::ac_bc: return LabelCombination{{GeneratorLabel::J(a, b), w(b, c)}};
            default: break;
            }
        }
        if (!xj && !yj) {
            // Distinct quaternionic units.
            const int gamma = third_index(x.alpha, y.alpha);
            const Rational eps = epsilon(x.alpha, y.alpha, gamma);
            switch (kind) {
            case Incidence::same:
                return LabelCombination{{GeneratorLabel::E(gamma, a), 2 * w(a, b) * eps},
                                        {GeneratorLabel::E(gamma, b), 2 * w(a, b) * eps}};
            case Incidence::ab_ac: return LabelCombination{{GeneratorLabel::Mq(gamma, b, c), w(a, b) * eps}};
            case Incidence::ab_bc: return LabelCombination{{GeneratorLabel::Mq(gamma, a, c), eps}};
            case Incidence::ac_bc: return LabelCombination{{GeneratorLabel::Mq(gamma, a, b), w(b, c) * eps}};
            default: break;
            }
        }
        if (xj && !yj) {
            const int alpha = y.alpha;
            switch (kind) {
            case Incidence::same: {
                LabelCombination out;
                if (family_ == Family::sq) {
                    // 2ω_ab (E^α_b − E^α_a)
                    out.push_back({GeneratorLabel::E(alpha, b), 2 * w(a, b)});
                    out.push_back({GeneratorLabel::E(alpha, a), -2 * w(a, b)});
                } else {
                    // −2ω_ab Σ_{s=a+1}^{b} B_s
                    for (std::size_t s = a + 1; s <= b; ++s) {
                        out.push_back({GeneratorLabel::B(s), -2 * w(a, b)});
                    }
                }
                return out;
            }
            case Incidence::ab_ac: return LabelCombination{{m(alpha, b, c), w(a, b)}};
            case Incidence::ab_bc: return LabelCombination{{m(alpha, a, c), Rational(-1)}};
            case Incidence::ac_bc: return LabelCombination{{m(alpha, a, b), -w(b, c)}};
            default: break;
            }
        }
        if (!xj && yj) {
            const int alpha = x.alpha;
            switch (kind) {
            case Incidence::same: return std::nullopt;
            case Incidence::ab_ac: return LabelCombination{{m(alpha, b, c), -w(a, b)}};
            case Incidence::ab_bc: return LabelCombination{{m(alpha, a, c), Rational(-1)}};
            case Incidence::ac_bc: return LabelCombination{{m(alpha, a, b), w(b, c)}};
            default: break;
            }
        }
        throw InternalError("unhandled pair bracket");
    }

    Family family_;
    const OmegaVector& omega_;
};

LinearCombination to_indices(const LieAlgebra& algebra, const LabelCombination& labels) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [label, coeff] : labels) {
        if (coeff.is_zero()) {
            continue;
        }
        acc[algebra.require_index(label)] += coeff;
    }
    LinearCombination out;
    for (const auto& [index, coeff] : acc) {
        if (!coeff.is_zero()) {
            out.push_back({index, coeff});
        }
    }
    return out;
}

} // namespace

LabelCombination closed_form_bracket(Family family, const OmegaVector& omega, const GeneratorLabel& x,
                                     const GeneratorLabel& y) {
    const std::size_t n = omega.size();
    if (!label_valid(family, x, n) || !label_valid(family, y, n)) {
        throw InputError("bracket labels do not belong to " + to_string(family));
    }
    return BracketTables(family, omega).bracket(x, y);
}

LieAlgebra build_algebra(Family family, const OmegaVector& omega) {
    LieAlgebra algebra(family, omega, basis_labels(family, omega.size()));
    const BracketTables tables(family, omega);
    const auto& basis = algebra.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            algebra.set_bracket(i, j, to_indices(algebra, tables.bracket(basis[i], basis[j])));
        }
    }
    return algebra;
}

LieAlgebra build_so(const OmegaVector& omega) { return build_algebra(Family::so, omega); }
LieAlgebra build_su(const OmegaVector& omega) { return build_algebra(Family::su, omega); }
LieAlgebra build_u(const OmegaVector& omega) { return build_algebra(Family::u, omega); }
LieAlgebra build_sq(const OmegaVector& omega) { return build_algebra(Family::sq, omega); }

LieAlgebra from_matrices(Family family, const OmegaVector& omega) {
    LieAlgebra algebra(family, omega, basis_labels(family, omega.size()));
    std::vector<MatrixOverK> generators;
    for (const auto& label : algebra.basis()) {
        generators.push_back(build_generator(family, label, omega));
    }
    const BasisDecomposer decomposer(generators);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            const auto coeffs = decomposer.decompose(mat_commutator(generators[i], generators[j]));
            if (!coeffs) {
                throw InternalError("[" + algebra.basis()[i].to_string() + ", " + algebra.basis()[j].to_string() +
                                    "] leaves the span of the generators");
            }
            LinearCombination lc;
            for (std::size_t k = 0; k < coeffs->size(); ++k) {
                if (!(*coeffs)[k].is_zero()) {
                    lc.push_back({k, (*coeffs)[k]});
                }
            }
            algebra.set_bracket(i, j, std::move(lc));
        }
    }
    return algebra;
}

// ---------------------------------------------------------------------------
// Extensions and Jacobi

ExtendedAlgebra::ExtendedAlgebra(LieAlgebra base, TwoCochain xi) : base_(std::move(base)), xi_(std::move(xi)) {
    if (xi_.dim() != base_.dim()) {
        throw InputError("cochain dimension " + std::to_string(xi_.dim()) + " differs from algebra dimension " +
                         std::to_string(base_.dim()));
    }
}

LinearCombination ExtendedAlgebra::bracket(std::size_t i, std::size_t j) const {
    const std::size_t r = base_.dim();
    if (i >= r || j >= r) {
        return {}; // Ξ is central
    }
    auto out = base_.bracket(i, j);
    const auto c = xi_.get(i, j);
    if (!c.is_zero()) {
        out.push_back({r, c});
    }
    return out;
}

ExtendedAlgebra build_extended(const LieAlgebra& base, const TwoCochain& xi) { return {base, xi}; }

namespace {

template <class Algebra>
bool jacobi_holds(const Algebra& algebra) {
    const std::size_t r = algebra.dim();
    std::map<std::size_t, Rational> acc;
    // [[X_p, X_q], X_s] accumulated into acc.
    auto add_nested = [&](std::size_t p, std::size_t q, std::size_t s) {
        for (const auto& outer : algebra.bracket(p, q)) {
            for (const auto& inner : algebra.bracket(outer.index, s)) {
                acc[inner.index] += outer.coeff * inner.coeff;
            }
        }
    };
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            for (std::size_t l = j + 1; l < r; ++l) {
                acc.clear();
                add_nested(i, j, l);
                add_nested(j, l, i);
                add_nested(l, i, j);
                for (const auto& [k, v] : acc) {
                    if (!v.is_zero()) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace

bool verify_jacobi(const LieAlgebra& algebra) { return jacobi_holds(algebra); }
bool verify_jacobi(const ExtendedAlgebra& algebra) { return jacobi_holds(algebra); }

} // namespace ckalg
