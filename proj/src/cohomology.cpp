#include "ckalg/cohomology.hpp"

#include "ckalg/errors.hpp"

namespace ckalg {

namespace {

// Adds c·ξ_kx to a row in slot coordinates, reading ξ_kx = −ξ_xk when k > x.
void add_slot(SparseVector& row, std::size_t k, std::size_t x, const Rational& c, std::size_t dim) {
    if (k == x || c.is_zero()) {
        return;
    }
    const std::size_t slot = k < x ? TwoCochain::slot_index(k, x, dim) : TwoCochain::slot_index(x, k, dim);
    auto& value = row[slot];
    value += k < x ? c : -c;
    if (value.is_zero()) {
        row.erase(slot);
    }
}

std::vector<TwoCochain> to_cochains(std::size_t dim, const std::vector<SparseVector>& vectors) {
    std::vector<TwoCochain> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) {
        out.push_back(TwoCochain::from_vector(dim, v));
    }
    return out;
}

EchelonBasis coboundary_basis(const LieAlgebra& algebra) {
    const std::size_t r = algebra.dim();
    EchelonBasis basis(r * (r - 1) / 2);
    for (std::size_t k = 0; k < r; ++k) {
        basis.insert(coboundary(OneCochain::unit(r, k), algebra).to_vector());
    }
    return basis;
}

} // namespace

LinearSystem cocycle_equations(const LieAlgebra& algebra) {
    const std::size_t r = algebra.dim();
    LinearSystem system;
    system.unknowns = r * (r - (r > 0 ? 1 : 0)) / 2;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            const auto cij = algebra.bracket(i, j);
            for (std::size_t l = j + 1; l < r; ++l) {
                SparseVector row;
                for (const auto& t : cij) {
                    add_slot(row, t.index, l, t.coeff, r);
                }
                for (const auto& t : algebra.bracket(j, l)) {
                    add_slot(row, t.index, i, t.coeff, r);
                }
                for (const auto& t : algebra.bracket(l, i)) {
                    add_slot(row, t.index, j, t.coeff, r);
                }
                system.rows.push_back(std::move(row));
            }
        }
    }
    return system;
}

TwoCochain coboundary(const OneCochain& mu, const LieAlgebra& algebra) {
    if (mu.dim() != algebra.dim()) {
        throw InputError("one-cochain dimension differs from algebra dimension");
    }
    TwoCochain out(algebra.dim());
    for (const auto& [key, lc] : algebra.constants()) {
        Rational v = 0;
        for (const auto& t : lc) {
            v += t.coeff * mu.values[t.index];
        }
        out.set(key.first, key.second, v);
    }
    return out;
}

bool is_cocycle(const TwoCochain& xi, const LieAlgebra& algebra) {
    const std::size_t r = algebra.dim();
    if (xi.dim() != r) {
        throw InputError("cochain dimension differs from algebra dimension");
    }
    auto term = [&](std::size_t p, std::size_t q, std::size_t s) {
        Rational sum = 0;
        for (const auto& t : algebra.bracket(p, q)) {
            sum += t.coeff * xi.get(t.index, s);
        }
        return sum;
    };
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            for (std::size_t l = j + 1; l < r; ++l) {
                if (!(term(i, j, l) + term(j, l, i) + term(l, i, j)).is_zero()) {
                    return false;
                }
            }
        }
    }
    return true;
}

CohomologySolver::CohomologySolver(LieAlgebra algebra)
    : algebra_(std::move(algebra)), coboundaries_(coboundary_basis(algebra_)) {}

bool CohomologySolver::in_coboundary_span(const TwoCochain& xi) const {
    if (xi.dim() != algebra_.dim()) {
        throw InputError("cochain dimension differs from algebra dimension");
    }
    return coboundaries_.contains(xi.to_vector());
}

bool CohomologySolver::is_trivial(const TwoCochain& xi) const {
    if (!is_cocycle(xi, algebra_)) {
        throw InputError("cochain is not a two-cocycle, so it defines no central extension");
    }
    return in_coboundary_span(xi);
}

std::size_t CohomologySolver::rank_modulo_coboundaries(const std::vector<TwoCochain>& cochains) const {
    EchelonBasis span = coboundaries_;
    std::size_t added = 0;
    for (const auto& c : cochains) {
        added += span.insert(c.to_vector()) ? 1 : 0;
    }
    return added;
}

CohomologyResult CohomologySolver::compute() const {
    const std::size_t r = algebra_.dim();
    const auto system = cocycle_equations(algebra_);

    EchelonBasis equations(system.unknowns);
    for (const auto& row : system.rows) {
        equations.insert(row);
    }
    EchelonBasis cocycles(system.unknowns);
    for (const auto& v : equations.nullspace()) {
        cocycles.insert(v);
    }
    const auto z2_rows = cocycles.reduced_rows();

    CohomologyResult result;
    result.dim_z2 = z2_rows.size();
    result.dim_b2 = coboundaries_.rank();
    if (result.dim_b2 > result.dim_z2) {
        throw InternalError("coboundary space larger than cocycle space");
    }
    result.dim_h2 = result.dim_z2 - result.dim_b2;
    result.z2_basis = to_cochains(r, z2_rows);
    result.b2_basis = to_cochains(r, coboundaries_.reduced_rows());

    EchelonBasis span = coboundaries_;
    for (const auto& z : z2_rows) {
        if (span.insert(z)) {
            result.h2_representatives.push_back(TwoCochain::from_vector(r, coboundaries_.normal_form(z)));
        }
    }
    if (result.h2_representatives.size() != result.dim_h2) {
        throw InternalError("coboundaries are not contained in the cocycle space");
    }
    return result;
}

std::vector<TwoCochain> cocycle_space(const LieAlgebra& algebra) {
    return CohomologySolver(algebra).compute().z2_basis;
}

std::vector<TwoCochain> coboundary_space(const LieAlgebra& algebra) {
    return to_cochains(algebra.dim(), coboundary_basis(algebra).reduced_rows());
}

CohomologyResult h2(const LieAlgebra& algebra) { return CohomologySolver(algebra).compute(); }

bool is_trivial(const TwoCochain& xi, const LieAlgebra& algebra) { return CohomologySolver(algebra).is_trivial(xi); }

} // namespace ckalg
