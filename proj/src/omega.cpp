#include "ckalg/omega.hpp"

#include "ckalg/errors.hpp"

namespace ckalg {

OmegaVector::OmegaVector(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw InputError("omega must have at least one coefficient");
    }
}

OmegaVector OmegaVector::parse(std::string_view text) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        coeffs.push_back(Rational::parse(token));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return OmegaVector(std::move(coeffs));
}

const Rational& OmegaVector::at(std::size_t a) const {
    if (a < 1 || a > coeffs_.size()) {
        throw InputError("omega index " + std::to_string(a) + " outside 1.." + std::to_string(coeffs_.size()));
    }
    return coeffs_[a - 1];
}

std::vector<int> OmegaVector::canonical_signs() const {
    std::vector<int> signs;
    signs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        signs.push_back(c.sign());
    }
    return signs;
}

std::set<std::size_t> OmegaVector::zero_set() const {
    std::set<std::size_t> zeros;
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a].is_zero()) {
            zeros.insert(a + 1);
        }
    }
    return zeros;
}

std::string OmegaVector::to_string() const {
    std::string out;
    for (const auto& c : coeffs_) {
        if (!out.empty()) {
            out += ',';
        }
        out += c.to_string();
    }
    return out;
}

Rational omega_product(const OmegaVector& omega, std::size_t a, std::size_t b) {
    if (a > b || b > omega.size()) {
        throw InputError("omega_product needs 0 <= a <= b <= N, got a=" + std::to_string(a) +
                         " b=" + std::to_string(b) + " N=" + std::to_string(omega.size()));
    }
    Rational product = 1;
    for (std::size_t s = a + 1; s <= b; ++s) {
        product *= omega.at(s);
    }
    return product;
}

OmegaVector contract(const OmegaVector& omega, const std::set<std::size_t>& zero_set) {
    auto coeffs = omega.coeffs();
    for (auto a : zero_set) {
        if (a < 1 || a > coeffs.size()) {
            throw InputError("contraction index " + std::to_string(a) + " outside 1.." + std::to_string(coeffs.size()));
        }
        coeffs[a - 1] = 0;
    }
    return OmegaVector(std::move(coeffs));
}

std::vector<OmegaVector> sign_patterns(std::size_t n) {
    if (n == 0) {
        throw InputError("sign_patterns needs n >= 1");
    }
    std::vector<OmegaVector> out;
    std::vector<int> digits(n, 0);
    while (true) {
        std::vector<Rational> coeffs;
        for (int d : digits) {
            coeffs.emplace_back(d - 1);
        }
        out.emplace_back(std::move(coeffs));
        std::size_t pos = n;
        while (pos > 0 && digits[pos - 1] == 2) {
            digits[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++digits[pos - 1];
    }
    return out;
}

} // namespace ckalg
