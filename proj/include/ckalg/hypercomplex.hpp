#pragma once

#include "ckalg/rational.hpp"

#include <array>
#include <cstddef>
#include <ostream>
#include <string>

namespace ckalg {

/// Scalar field of a matrix entry. Ordered so that the wider algebra compares greater.
enum class ScalarKind { real = 0, complex = 1, quaternion = 2 };

/// Number of real components used by a kind (1, 2 or 4).
constexpr std::size_t component_count(ScalarKind kind) {
    switch (kind) {
    case ScalarKind::real: return 1;
    case ScalarKind::complex: return 2;
    case ScalarKind::quaternion: return 4;
    }
    return 4;
}

std::string to_string(ScalarKind kind);

/// Exact element of R ⊂ C ⊂ H, stored as w + x·i₁ + y·i₂ + z·i₃.
///
/// The kind tag records which sub-algebra the value lives in; components outside
/// that sub-algebra are always zero. Binary operations produce the wider kind.
class Hypercomplex {
public:
    Hypercomplex() = default;
    Hypercomplex(ScalarKind kind, Rational w, Rational x = 0, Rational y = 0, Rational z = 0);

    static Hypercomplex real(Rational w) { return {ScalarKind::real, std::move(w)}; }
    static Hypercomplex complex(Rational w, Rational x) { return {ScalarKind::complex, std::move(w), std::move(x)}; }
    static Hypercomplex quaternion(Rational w, Rational x, Rational y, Rational z) {
        return {ScalarKind::quaternion, std::move(w), std::move(x), std::move(y), std::move(z)};
    }
    /// Quaternionic unit i_α, α ∈ {1,2,3}. i₁ is tagged complex, i₂ and i₃ quaternion.
    static Hypercomplex unit(int alpha);

    ScalarKind kind() const { return kind_; }
    const Rational& w() const { return c_[0]; }
    const Rational& x() const { return c_[1]; }
    const Rational& y() const { return c_[2]; }
    const Rational& z() const { return c_[3]; }
    const Rational& component(std::size_t i) const { return c_.at(i); }

    bool is_zero() const;
    /// Same value re-tagged with a wider kind. Throws InputError if narrowing would drop components.
    Hypercomplex as_kind(ScalarKind kind) const;

    /// w² + x² + y² + z², which equals a·conj(a).
    Rational norm2() const;

    Hypercomplex operator-() const;
    friend Hypercomplex operator+(const Hypercomplex& a, const Hypercomplex& b);
    friend Hypercomplex operator-(const Hypercomplex& a, const Hypercomplex& b);
    friend Hypercomplex operator*(const Hypercomplex& a, const Hypercomplex& b);
    Hypercomplex& operator+=(const Hypercomplex& b) { return *this = *this + b; }
    Hypercomplex& operator-=(const Hypercomplex& b) { return *this = *this - b; }

    /// Value equality; kinds are not compared.
    friend bool operator==(const Hypercomplex& a, const Hypercomplex& b) { return a.c_ == b.c_; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Hypercomplex& h) { return os << h.to_string(); }

private:
    ScalarKind kind_ = ScalarKind::real;
    std::array<Rational, 4> c_{};
};

Hypercomplex hyper_mul(const Hypercomplex& a, const Hypercomplex& b);
Hypercomplex hyper_conj(const Hypercomplex& a);

} // namespace ckalg
