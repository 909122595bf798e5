#pragma once

#include "ckalg/matrix.hpp"
#include "ckalg/omega.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ckalg {

/// The four CK families: so_ω(N+1), su_ω(N+1), u_ω(N+1), sq_ω(N+1).
enum class Family { so, su, u, sq };

std::string to_string(Family family);
/// "so", "su", "u" or "sq". Throws InputError otherwise.
Family parse_family(std::string_view text);
/// R for so, C for su/u, H for sq.
ScalarKind scalar_kind(Family family);

enum class GeneratorType { J, M, B, I, Mq, E };

/// A basis generator. Fields not used by the type stay zero:
/// J(a,b), M(a,b), Mq(α,a,b) with a < b; B(l) with 1 ≤ l ≤ N; E(α,a); I.
struct GeneratorLabel {
    GeneratorType type = GeneratorType::J;
    int alpha = 0;
    std::size_t a = 0;
    std::size_t b = 0;

    static GeneratorLabel J(std::size_t a, std::size_t b) { return {GeneratorType::J, 0, a, b}; }
    static GeneratorLabel M(std::size_t a, std::size_t b) { return {GeneratorType::M, 0, a, b}; }
    static GeneratorLabel B(std::size_t l) { return {GeneratorType::B, 0, l, 0}; }
    static GeneratorLabel I() { return {GeneratorType::I, 0, 0, 0}; }
    static GeneratorLabel Mq(int alpha, std::size_t a, std::size_t b) { return {GeneratorType::Mq, alpha, a, b}; }
    static GeneratorLabel E(int alpha, std::size_t a) { return {GeneratorType::E, alpha, a, 0}; }

    /// "J[0,1]", "M[0,1]", "B[1]", "I", "M^2[0,1]", "E^3[0]".
    std::string to_string() const;

    friend auto operator<=>(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// Canonical basis order. so, su, u: J by (a,b); M by (a,b); B(1..N); I. sq: J; Mq by (α,a,b); E by (α,a).
std::vector<GeneratorLabel> basis_labels(Family family, std::size_t n);

/// Dimension of the family's algebra for a given N.
std::size_t family_dimension(Family family, std::size_t n);

/// Whether `label` belongs to the family's basis for this N.
bool label_valid(Family family, const GeneratorLabel& label, std::size_t n);

/// The antihermitian matrix generator for `label`. Throws InputError when the label
/// does not belong to the family.
MatrixOverK build_generator(Family family, const GeneratorLabel& label, const OmegaVector& omega);

} // namespace ckalg
