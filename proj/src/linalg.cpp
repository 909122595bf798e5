#include "ckalg/linalg.hpp"

#include "ckalg/errors.hpp"

#include <algorithm>

namespace ckalg {

namespace {

using IntRow = EchelonBasis::IntRow;

void make_primitive(IntRow& row) {
    if (row.empty()) {
        return;
    }
    mpz_class g = 0;
    for (const auto& [col, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    if (row.front().second < 0) {
        g = -g;
    }
    if (g != 1) {
        for (auto& [col, v] : row) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
    }
}

// s·x − t·y, dropping zeros.
IntRow combine(const IntRow& x, const mpz_class& s, const IntRow& y, const mpz_class& t) {
    IntRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    mpz_class v;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, s * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -t * y[j].second);
            ++j;
        } else {
            v = s * x[i].second - t * y[j].second;
            if (v != 0) {
                out.emplace_back(x[i].first, v);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVector row_to_rational(const IntRow& row, const mpz_class& divisor) {
    SparseVector v;
    for (const auto& [col, value] : row) {
        v.emplace(col, Rational::normalize(value, divisor));
    }
    return v;
}

} // namespace

IntRow primitive_row(const SparseVector& v) {
    mpz_class lcm = 1;
    for (const auto& [col, value] : v) {
        if (!value.is_zero()) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), value.denominator().get_mpz_t());
        }
    }
    IntRow row;
    for (const auto& [col, value] : v) {
        if (!value.is_zero()) {
            row.emplace_back(col, value.numerator() * (lcm / value.denominator()));
        }
    }
    make_primitive(row);
    return row;
}

RankResult exact_rank(const DenseMatrix& rows, std::size_t cols) {
    std::vector<std::vector<mpz_class>> a;
    a.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != cols) {
            throw InputError("ragged matrix row");
        }
        mpz_class lcm = 1;
        for (const auto& v : row) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
        }
        std::vector<mpz_class> ints(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            ints[c] = row[c].numerator() * (lcm / row[c].denominator());
        }
        a.push_back(std::move(ints));
    }

    RankResult result;
    const std::size_t m = a.size();
    std::size_t k = 0;
    mpz_class prev = 1;
    mpz_class t;
    for (std::size_t c = 0; c < cols && k < m; ++c) {
        std::size_t pick = k;
        while (pick < m && a[pick][c] == 0) {
            ++pick;
        }
        if (pick == m) {
            continue;
        }
        std::swap(a[pick], a[k]);
        const mpz_class pivot = a[k][c];
        for (std::size_t i = k + 1; i < m; ++i) {
            const mpz_class lead = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = pivot * a[i][j] - lead * a[k][j];
                if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
                    throw InternalError("Bareiss step produced an inexact division");
                }
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = pivot;
        result.pivot_columns.push_back(c);
        ++k;
    }
    result.rank = k;

    std::vector<bool> is_pivot(cols, false);
    for (auto c : result.pivot_columns) {
        is_pivot[c] = true;
    }
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Rational> x(cols);
        x[f] = 1;
        for (std::size_t r = result.rank; r-- > 0;) {
            const std::size_t p = result.pivot_columns[r];
            Rational sum = 0;
            for (std::size_t j = p + 1; j < cols; ++j) {
                if (a[r][j] != 0 && !x[j].is_zero()) {
                    sum += Rational(a[r][j]) * x[j];
                }
            }
            x[p] = -sum / Rational(a[r][p]);
        }
        result.nullspace.push_back(std::move(x));
    }
    return result;
}

IntRow EchelonBasis::reduce(IntRow row) const {
    std::size_t guard = 0;
    while (!row.empty()) {
        const auto it = rows_.find(row.front().first);
        if (it == rows_.end()) {
            break;
        }
        const auto& pivot_row = it->second;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), pivot_row.front().second.get_mpz_t(), row.front().second.get_mpz_t());
        const mpz_class s = pivot_row.front().second / g;
        const mpz_class t = row.front().second / g;
        row = combine(row, s, pivot_row, t);
        make_primitive(row);
        if (++guard > cols_ + 1) {
            throw InternalError("echelon reduction failed to terminate");
        }
    }
    return row;
}

bool EchelonBasis::insert(const SparseVector& v) {
    auto row = reduce(primitive_row(v));
    if (row.empty()) {
        return false;
    }
    if (row.back().first >= cols_) {
        throw InputError("vector coordinate exceeds the column count");
    }
    make_primitive(row);
    const auto lead = row.front().first;
    rows_.emplace(lead, std::move(row));
    return true;
}

bool EchelonBasis::contains(const SparseVector& v) const { return reduce(primitive_row(v)).empty(); }

std::vector<std::size_t> EchelonBasis::pivot_columns() const {
    std::vector<std::size_t> out;
    for (const auto& [col, row] : rows_) {
        out.push_back(col);
    }
    return out;
}

std::vector<SparseVector> EchelonBasis::reduced_rows() const {
    // Back-substitute from the last pivot so that higher rows are already reduced.
    std::map<std::size_t, SparseVector> reduced;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        const auto& [lead, row] = *it;
        SparseVector v = row_to_rational(row, row.front().second);
        for (const auto& [col, r] : reduced) {
            const auto hit = v.find(col);
            if (hit == v.end()) {
                continue;
            }
            const Rational factor = hit->second;
            for (const auto& [c, value] : r) {
                auto& slot = v[c];
                slot -= factor * value;
                if (slot.is_zero()) {
                    v.erase(c);
                }
            }
        }
        reduced.emplace(lead, std::move(v));
    }
    std::vector<SparseVector> out;
    for (auto& [lead, v] : reduced) {
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SparseVector> EchelonBasis::nullspace() const {
    const auto rref = reduced_rows();
    const auto pivots = pivot_columns();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    // Column f of the RREF, gathered per free column.
    std::map<std::size_t, SparseVector> by_free;
    for (std::size_t r = 0; r < rref.size(); ++r) {
        for (const auto& [col, value] : rref[r]) {
            if (!is_pivot[col]) {
                by_free[col].emplace(pivots[r], -value);
            }
        }
    }
    std::vector<SparseVector> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        SparseVector v = by_free[f];
        v.emplace(f, Rational(1));
        out.push_back(std::move(v));
    }
    return out;
}

SparseVector EchelonBasis::normal_form(const SparseVector& v) const {
    SparseVector out;
    for (const auto& [c, value] : v) {
        if (!value.is_zero()) {
            out.emplace(c, value);
        }
    }
    // Ascending sweep: eliminating column c only touches columns > c.
    for (auto it = out.begin(); it != out.end();) {
        const auto pivot = rows_.find(it->first);
        if (pivot == rows_.end()) {
            ++it;
            continue;
        }
        const auto& row = pivot->second;
        const Rational factor = it->second / Rational(row.front().second);
        const std::size_t col = it->first;
        for (const auto& [c, value] : row) {
            auto& slot = out[c];
            slot -= factor * Rational(value);
        }
        for (auto jt = out.begin(); jt != out.end();) {
            jt = jt->second.is_zero() ? out.erase(jt) : std::next(jt);
        }
        it = out.upper_bound(col);
    }
    return out;
}

} // namespace ckalg
