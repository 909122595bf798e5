#include "ckalg/generators.hpp"

#include "ckalg/errors.hpp"

#include <algorithm>

namespace ckalg {

std::string to_string(Family family) {
    switch (family) {
    case Family::so: return "so";
    case Family::su: return "su";
    case Family::u: return "u";
    case Family::sq: return "sq";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    if (text == "so") return Family::so;
    if (text == "su") return Family::su;
    if (text == "u") return Family::u;
    if (text == "sq") return Family::sq;
    throw InputError("unknown family '" + std::string(text) + "' (expected so, su, u or sq)");
}

ScalarKind scalar_kind(Family family) {
    switch (family) {
    case Family::so: return ScalarKind::real;
    case Family::su:
    case Family::u: return ScalarKind::complex;
    case Family::sq: return ScalarKind::quaternion;
    }
    return ScalarKind::quaternion;
}

std::string GeneratorLabel::to_string() const {
    const auto pair = "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    switch (type) {
    case GeneratorType::J: return "J" + pair;
    case GeneratorType::M: return "M" + pair;
    case GeneratorType::B: return "B[" + std::to_string(a) + "]";
    case GeneratorType::I: return "I";
    case GeneratorType::Mq: return "M^" + std::to_string(alpha) + pair;
    case GeneratorType::E: return "E^" + std::to_string(alpha) + "[" + std::to_string(a) + "]";
    }
    return "?";
}

std::vector<GeneratorLabel> basis_labels(Family family, std::size_t n) {
    if (n == 0) {
        throw InputError("N must be at least 1");
    }
    std::vector<GeneratorLabel> labels;
    auto pairs = [&](auto make) {
        for (std::size_t a = 0; a <= n; ++a) {
            for (std::size_t b = a + 1; b <= n; ++b) {
                labels.push_back(make(a, b));
            }
        }
    };
    pairs([](std::size_t a, std::size_t b) { return GeneratorLabel::J(a, b); });
    switch (family) {
    case Family::so:
        break;
    case Family::su:
    case Family::u:
        pairs([](std::size_t a, std::size_t b) { return GeneratorLabel::M(a, b); });
        for (std::size_t l = 1; l <= n; ++l) {
            labels.push_back(GeneratorLabel::B(l));
        }
        if (family == Family::u) {
            labels.push_back(GeneratorLabel::I());
        }
        break;
    case Family::sq:
        for (int alpha = 1; alpha <= 3; ++alpha) {
            pairs([alpha](std::size_t a, std::size_t b) { return GeneratorLabel::Mq(alpha, a, b); });
        }
        for (int alpha = 1; alpha <= 3; ++alpha) {
            for (std::size_t a = 0; a <= n; ++a) {
                labels.push_back(GeneratorLabel::E(alpha, a));
            }
        }
        break;
    }
    return labels;
}

std::size_t family_dimension(Family family, std::size_t n) {
    const std::size_t m = n + 1;
    switch (family) {
    case Family::so: return n * (n + 1) / 2;
    case Family::su: return m * m - 1;
    case Family::u: return m * m;
    case Family::sq: return 2 * m * m + m;
    }
    return 0;
}

bool label_valid(Family family, const GeneratorLabel& label, std::size_t n) {
    const bool pair_ok = label.a < label.b && label.b <= n;
    const bool alpha_ok = label.alpha >= 1 && label.alpha <= 3;
    switch (label.type) {
    case GeneratorType::J:
        return pair_ok && label.alpha == 0;
    case GeneratorType::M:
        return (family == Family::su || family == Family::u) && pair_ok && label.alpha == 0;
    case GeneratorType::B:
        return (family == Family::su || family == Family::u) && label.a >= 1 && label.a <= n && label.b == 0;
    case GeneratorType::I:
        return family == Family::u && label.a == 0 && label.b == 0;
    case GeneratorType::Mq:
        return family == Family::sq && pair_ok && alpha_ok;
    case GeneratorType::E:
        return family == Family::sq && alpha_ok && label.a <= n && label.b == 0;
    }
    return false;
}

MatrixOverK build_generator(Family family, const GeneratorLabel& label, const OmegaVector& omega) {
    const std::size_t n = omega.size();
    if (!label_valid(family, label, n)) {
        throw InputError("generator " + label.to_string() + " does not belong to " + to_string(family) +
                         " with N=" + std::to_string(n));
    }
    const std::size_t dim = n + 1;
    const ScalarKind kind = scalar_kind(family);
    auto e = [&](std::size_t r, std::size_t c) { return MatrixOverK::elementary(dim, r, c, kind); };
    const Hypercomplex i1 = Hypercomplex::unit(1);

    switch (label.type) {
    case GeneratorType::J: {
        // −ω_ab e_ab + e_ba
        const auto w = omega_product(omega, label.a, label.b);
        return (-w) * e(label.a, label.b) + e(label.b, label.a);
    }
    case GeneratorType::M: {
        const auto w = omega_product(omega, label.a, label.b);
        return i1 * (w * e(label.a, label.b) + e(label.b, label.a));
    }
    case GeneratorType::B:
        return i1 * (e(label.a - 1, label.a - 1) - e(label.a, label.a));
    case GeneratorType::I: {
        auto sum = MatrixOverK::zero(dim, kind);
        for (std::size_t a = 0; a < dim; ++a) {
            sum += e(a, a);
        }
        return i1 * sum;
    }
    case GeneratorType::Mq: {
        const auto w = omega_product(omega, label.a, label.b);
        return Hypercomplex::unit(label.alpha) * (w * e(label.a, label.b) + e(label.b, label.a));
    }
    case GeneratorType::E:
        return Hypercomplex::unit(label.alpha) * e(label.a, label.a);
    }
    throw InternalError("unhandled generator type");
}

} // namespace ckalg
