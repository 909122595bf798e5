#include "ckalg/matrix.hpp"

#include "ckalg/errors.hpp"

#include <algorithm>

namespace ckalg {

MatrixOverK::MatrixOverK(std::size_t dim, ScalarKind kind)
    : dim_(dim), kind_(kind), entries_(dim * dim, Hypercomplex(kind, 0)) {
    if (dim == 0) {
        throw InputError("matrix dimension must be positive");
    }
}

MatrixOverK MatrixOverK::elementary(std::size_t dim, std::size_t a, std::size_t b, ScalarKind kind) {
    if (a >= dim || b >= dim) {
        throw InputError("elementary matrix index out of range");
    }
    MatrixOverK m(dim, kind);
    m.set(a, b, Hypercomplex::real(1));
    return m;
}

void MatrixOverK::set(std::size_t row, std::size_t col, const Hypercomplex& value) {
    if (value.kind() > kind_) {
        throw InputError("cannot store a " + to_string(value.kind()) + " entry in a " + to_string(kind_) + " matrix");
    }
    entries_.at(row * dim_ + col) = value.as_kind(kind_);
}

bool MatrixOverK::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Hypercomplex& h) { return h.is_zero(); });
}

std::vector<Rational> MatrixOverK::flatten() const {
    const std::size_t parts = component_count(kind_);
    std::vector<Rational> out;
    out.reserve(entries_.size() * parts);
    for (const auto& e : entries_) {
        for (std::size_t p = 0; p < parts; ++p) {
            out.push_back(e.component(p));
        }
    }
    return out;
}

MatrixOverK MatrixOverK::conj_transpose() const {
    MatrixOverK out(dim_, kind_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out.entries_[c * dim_ + r] = hyper_conj((*this)(r, c));
        }
    }
    return out;
}

Hypercomplex MatrixOverK::trace() const {
    Hypercomplex sum(kind_, 0);
    for (std::size_t a = 0; a < dim_; ++a) {
        sum += (*this)(a, a);
    }
    return sum;
}

void MatrixOverK::check_compatible(const MatrixOverK& other) const {
    if (dim_ != other.dim_ || kind_ != other.kind_) {
        throw InputError("matrix dimension or kind mismatch");
    }
}

MatrixOverK& MatrixOverK::operator+=(const MatrixOverK& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += rhs.entries_[i];
    }
    return *this;
}

MatrixOverK& MatrixOverK::operator-=(const MatrixOverK& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= rhs.entries_[i];
    }
    return *this;
}

MatrixOverK operator*(const MatrixOverK& lhs, const MatrixOverK& rhs) {
    lhs.check_compatible(rhs);
    const std::size_t n = lhs.dim_;
    MatrixOverK out(n, lhs.kind_);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto& a = lhs(r, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                const auto& b = rhs(k, c);
                if (!b.is_zero()) {
                    out.entries_[r * n + c] += a * b;
                }
            }
        }
    }
    return out;
}

MatrixOverK operator*(const Hypercomplex& q, const MatrixOverK& x) {
    MatrixOverK out(x.dim_, std::max(x.kind_, q.kind()));
    for (std::size_t i = 0; i < x.entries_.size(); ++i) {
        out.entries_[i] = q * x.entries_[i];
    }
    return out;
}

MatrixOverK operator*(const Rational& r, const MatrixOverK& x) {
    return Hypercomplex(x.kind_, r) * x;
}

bool operator==(const MatrixOverK& a, const MatrixOverK& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

MetricMatrix::MetricMatrix(std::vector<Rational> diag) : diag_(std::move(diag)) {
    if (diag_.empty() || diag_.front() != Rational(1)) {
        throw InputError("metric diagonal must start with 1");
    }
}

std::optional<std::pair<std::size_t, std::size_t>> MetricMatrix::signature() const {
    std::size_t p = 0;
    std::size_t q = 0;
    for (const auto& d : diag_) {
        if (d.is_zero()) {
            return std::nullopt;
        }
        (d.sign() > 0 ? p : q) += 1;
    }
    return std::make_pair(p, q);
}

MatrixOverK MetricMatrix::as_matrix(ScalarKind kind) const {
    MatrixOverK m(diag_.size(), kind);
    for (std::size_t a = 0; a < diag_.size(); ++a) {
        m.set(a, a, Hypercomplex::real(diag_[a]));
    }
    return m;
}

MetricMatrix build_metric(const OmegaVector& omega) {
    std::vector<Rational> diag;
    for (std::size_t b = 0; b <= omega.size(); ++b) {
        diag.push_back(omega_product(omega, 0, b));
    }
    return MetricMatrix(std::move(diag));
}

bool is_metric_antihermitian(const MatrixOverK& x, const MetricMatrix& g) {
    if (x.dim() != g.dim()) {
        throw InputError("metric and matrix dimensions differ");
    }
    const auto gm = g.as_matrix(x.kind());
    return (x.conj_transpose() * gm + gm * x).is_zero();
}

bool is_traceless(const MatrixOverK& x) { return x.trace().is_zero(); }

MatrixOverK mat_commutator(const MatrixOverK& x, const MatrixOverK& y) { return x * y - y * x; }

BasisDecomposer::BasisDecomposer(const std::vector<MatrixOverK>& basis) : basis_size_(basis.size()) {
    if (basis.empty()) {
        throw InputError("empty basis");
    }
    dim_ = basis.front().dim();
    kind_ = basis.front().kind();
    coords_ = dim_ * dim_ * component_count(kind_);

    // Augmented [A | I], A has one column per basis element.
    const std::size_t width = basis_size_ + coords_;
    std::vector<std::vector<Rational>> rows(coords_, std::vector<Rational>(width));
    for (std::size_t k = 0; k < basis_size_; ++k) {
        if (basis[k].dim() != dim_ || basis[k].kind() != kind_) {
            throw InputError("basis matrices differ in dimension or kind");
        }
        const auto flat = basis[k].flatten();
        for (std::size_t r = 0; r < coords_; ++r) {
            rows[r][k] = flat[r];
        }
    }
    for (std::size_t r = 0; r < coords_; ++r) {
        rows[r][basis_size_ + r] = 1;
    }

    pivot_row_of_column_.assign(basis_size_, coords_);
    std::size_t next = 0;
    for (std::size_t col = 0; col < basis_size_ && next < coords_; ++col) {
        std::size_t pick = next;
        while (pick < coords_ && rows[pick][col].is_zero()) {
            ++pick;
        }
        if (pick == coords_) {
            continue;
        }
        std::swap(rows[pick], rows[next]);
        const Rational inv = Rational(1) / rows[next][col];
        for (auto& v : rows[next]) {
            v *= inv;
        }
        for (std::size_t r = 0; r < coords_; ++r) {
            if (r == next || rows[r][col].is_zero()) {
                continue;
            }
            const Rational factor = rows[r][col];
            for (std::size_t c = 0; c < width; ++c) {
                if (!rows[next][c].is_zero()) {
                    rows[r][c] -= factor * rows[next][c];
                }
            }
        }
        pivot_row_of_column_[col] = next++;
    }
    rank_ = next;
    if (rank_ != basis_size_) {
        throw InputError("basis matrices are linearly dependent over R");
    }
    transform_.resize(coords_);
    for (std::size_t r = 0; r < coords_; ++r) {
        transform_[r].assign(rows[r].begin() + static_cast<std::ptrdiff_t>(basis_size_), rows[r].end());
    }
}

std::optional<std::vector<Rational>> BasisDecomposer::decompose(const MatrixOverK& x) const {
    if (x.dim() != dim_ || x.kind() != kind_) {
        throw InputError("matrix does not match the basis dimension or kind");
    }
    const auto flat = x.flatten();
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < coords_; ++c) {
        if (!flat[c].is_zero()) {
            support.push_back(c);
        }
    }
    std::vector<Rational> y(coords_);
    for (std::size_t r = 0; r < coords_; ++r) {
        for (auto c : support) {
            if (!transform_[r][c].is_zero()) {
                y[r] += transform_[r][c] * flat[c];
            }
        }
    }
    for (std::size_t r = rank_; r < coords_; ++r) {
        if (!y[r].is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<Rational> coeffs(basis_size_);
    for (std::size_t k = 0; k < basis_size_; ++k) {
        coeffs[k] = y[pivot_row_of_column_[k]];
    }
    return coeffs;
}

std::vector<Rational> decompose_in_basis(const MatrixOverK& x, const std::vector<MatrixOverK>& basis) {
    auto coeffs = BasisDecomposer(basis).decompose(x);
    if (!coeffs) {
        throw InternalError("matrix is not in the span of the basis");
    }
    return *coeffs;
}

} // namespace ckalg
