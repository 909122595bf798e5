#include "ckalg/hypercomplex.hpp"

#include "ckalg/errors.hpp"

#include <algorithm>

namespace ckalg {

namespace {

ScalarKind wider(ScalarKind a, ScalarKind b) { return std::max(a, b); }

void check_kind(ScalarKind kind, const std::array<Rational, 4>& c) {
    const std::size_t used = component_count(kind);
    for (std::size_t i = used; i < 4; ++i) {
        if (!c[i].is_zero()) {
            throw InputError("component " + std::to_string(i) + " is nonzero for a " + to_string(kind) + " scalar");
        }
    }
}

} // namespace

std::string to_string(ScalarKind kind) {
    switch (kind) {
    case ScalarKind::real: return "real";
    case ScalarKind::complex: return "complex";
    case ScalarKind::quaternion: return "quaternion";
    }
    return "?";
}

Hypercomplex::Hypercomplex(ScalarKind kind, Rational w, Rational x, Rational y, Rational z)
    : kind_(kind), c_{std::move(w), std::move(x), std::move(y), std::move(z)} {
    check_kind(kind_, c_);
}

Hypercomplex Hypercomplex::unit(int alpha) {
    switch (alpha) {
    case 1: return complex(0, 1);
    case 2: return quaternion(0, 0, 1, 0);
    case 3: return quaternion(0, 0, 0, 1);
    default: throw InputError("quaternionic unit index must be 1, 2 or 3, got " + std::to_string(alpha));
    }
}

bool Hypercomplex::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

Hypercomplex Hypercomplex::as_kind(ScalarKind kind) const {
    return Hypercomplex(kind, c_[0], c_[1], c_[2], c_[3]);
}

Rational Hypercomplex::norm2() const {
    return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

Hypercomplex Hypercomplex::operator-() const {
    return Hypercomplex(kind_, -c_[0], -c_[1], -c_[2], -c_[3]);
}

Hypercomplex operator+(const Hypercomplex& a, const Hypercomplex& b) {
    return Hypercomplex(wider(a.kind_, b.kind_), a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2],
                        a.c_[3] + b.c_[3]);
}

Hypercomplex operator-(const Hypercomplex& a, const Hypercomplex& b) {
    return Hypercomplex(wider(a.kind_, b.kind_), a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2],
                        a.c_[3] - b.c_[3]);
}

// Hamilton product with i₁i₂ = i₃, i₂i₃ = i₁, i₃i₁ = i₂, i_α² = −1.
Hypercomplex operator*(const Hypercomplex& a, const Hypercomplex& b) {
    const auto& [a0, a1, a2, a3] = a.c_;
    const auto& [b0, b1, b2, b3] = b.c_;
    return Hypercomplex(wider(a.kind_, b.kind_),
                        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0);
}

std::string Hypercomplex::to_string() const {
    static constexpr const char* units[] = {"", "i1", "i2", "i3"};
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) {
            continue;
        }
        std::string coeff = c_[i].to_string();
        if (i > 0 && (coeff == "1" || coeff == "-1")) {
            coeff.pop_back();
        }
        if (!out.empty() && coeff.front() != '-') {
            out += '+';
        }
        out += coeff + units[i];
    }
    return out.empty() ? "0" : out;
}

Hypercomplex hyper_mul(const Hypercomplex& a, const Hypercomplex& b) { return a * b; }

Hypercomplex hyper_conj(const Hypercomplex& a) {
    return Hypercomplex(a.kind(), a.w(), -a.x(), -a.y(), -a.z());
}

} // namespace ckalg
