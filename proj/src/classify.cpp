#include "ckalg/classify.hpp"

#include "ckalg/errors.hpp"
#include "ckalg/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ckalg {

std::string to_string(CoefficientType type) { return type == CoefficientType::II ? "II" : "III"; }

std::string CoefficientName::to_string() const {
    const auto two = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
    const auto one = "[" + std::to_string(i) + "]";
    switch (kind) {
    case Kind::alpha_f: return "alphaF" + two;
    case Kind::alpha_l: return "alphaL" + two;
    case Kind::beta: return "beta" + two;
    case Kind::alpha: return "alpha" + one;
    case Kind::gamma: return "gamma" + one;
    }
    return "?";
}

CoefficientName CoefficientName::parse(std::string_view text) {
    const auto open = text.find('[');
    if (open == std::string_view::npos || text.empty() || text.back() != ']') {
        throw InputError("malformed coefficient name '" + std::string(text) + "'");
    }
    const auto head = text.substr(0, open);
    const auto body = text.substr(open + 1, text.size() - open - 2);
    std::vector<std::size_t> idx;
    std::size_t start = 0;
    while (true) {
        const auto comma = body.find(',', start);
        const auto tok = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (tok.empty() || tok.size() > 6) {
            throw InputError("malformed coefficient index in '" + std::string(text) + "'");
        }
        std::size_t v = 0;
        for (char ch : tok) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw InputError("malformed coefficient index in '" + std::string(text) + "'");
            }
            v = v * 10 + static_cast<std::size_t>(ch - '0');
        }
        idx.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    CoefficientName out;
    if (head == "alphaF" || head == "alphaL" || head == "beta") {
        if (idx.size() != 2) {
            throw InputError("'" + std::string(head) + "' takes two indices");
        }
        out.kind = head == "alphaF" ? Kind::alpha_f : (head == "alphaL" ? Kind::alpha_l : Kind::beta);
        out.i = idx[0];
        out.j = idx[1];
        if (out.kind != Kind::beta && out.j != out.i + 1) {
            throw InputError("'" + std::string(head) + "' needs consecutive indices p,p+1");
        }
        if (out.kind == Kind::beta && out.j <= out.i) {
            throw InputError("'beta' needs increasing indices");
        }
    } else if (head == "alpha" || head == "gamma") {
        if (idx.size() != 1) {
            throw InputError("'" + std::string(head) + "' takes one index");
        }
        out.kind = head == "alpha" ? Kind::alpha : Kind::gamma;
        out.i = idx[0];
    } else {
        throw InputError("unknown coefficient '" + std::string(text) + "'");
    }
    return out;
}

std::size_t ExtensionCoefficientCatalog::count() const {
    std::size_t n = 0;
    for (const auto& e : entries) {
        n += e.active ? 1 : 0;
    }
    return n;
}

std::vector<std::string> ExtensionCoefficientCatalog::active_names() const {
    std::vector<std::string> out;
    for (const auto& e : entries) {
        if (e.active) {
            out.push_back(e.name);
        }
    }
    return out;
}

ZeroPattern zero_pattern(const OmegaVector& omega) {
    ZeroPattern z;
    z.zero_set = omega.zero_set();
    z.n = z.zero_set.size();
    return z;
}

namespace {

using Kind = CoefficientName::Kind;

std::string w_name(std::size_t a) { return "omega_" + std::to_string(a); }

bool is_zero_at(const OmegaVector& omega, std::size_t a) { return omega.at(a).is_zero(); }

void add_entry(ExtensionCoefficientCatalog& cat, CoefficientName id, CoefficientType type, bool active,
               std::string note) {
    cat.entries.push_back({id, id.to_string(), type, active, std::move(note)});
}

bool beta_so_active(const OmegaVector& omega, std::size_t b, std::size_t d) {
    for (const auto& factor : beta_constraint_factors(omega.size(), b, d)) {
        Rational product = 1;
        for (auto a : factor) {
            product *= omega.at(a);
        }
        if (!product.is_zero()) {
            return false;
        }
    }
    return true;
}

// Resolves a name against the family and N; throws InputError when it is not in the catalog.
CoefficientName checked_name(Family family, std::size_t n, std::string_view text) {
    const auto id = CoefficientName::parse(text);
    bool ok = false;
    switch (family) {
    case Family::so:
        switch (id.kind) {
        case Kind::alpha_f: ok = id.j == id.i + 1 && id.i >= 1 && id.i + 1 <= n; break;
        case Kind::alpha_l: ok = id.j == id.i + 1 && id.i + 2 <= n; break;
        case Kind::beta: ok = id.i >= 1 && id.j >= id.i + 2 && id.j <= n; break;
        default: break;
        }
        break;
    case Family::su:
    case Family::u:
        switch (id.kind) {
        case Kind::alpha: ok = id.i >= 1 && id.i <= n; break;
        case Kind::beta: ok = id.i >= 1 && id.i < id.j && id.j <= n; break;
        case Kind::gamma: ok = family == Family::u && id.i >= 1 && id.i <= n; break;
        default: break;
        }
        break;
    case Family::sq:
        break;
    }
    if (!ok) {
        throw InputError("'" + std::string(text) + "' is not an extension coefficient of " + to_string(family) +
                         " with N=" + std::to_string(n));
    }
    return id;
}

std::map<GeneratorLabel, std::size_t> label_index(Family family, std::size_t n) {
    std::map<GeneratorLabel, std::size_t> out;
    const auto labels = basis_labels(family, n);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out.emplace(labels[i], i);
    }
    return out;
}

TwoCochain raw_cochain(Family family, const OmegaVector& omega, const CoefficientName& id) {
    const std::size_t n = omega.size();
    const auto index = label_index(family, n);
    TwoCochain xi(index.size());
    auto put = [&](const GeneratorLabel& x, const GeneratorLabel& y, const Rational& v) {
        xi.add(index.at(x), index.at(y), v);
    };
    auto w = [&](std::size_t a, std::size_t b) { return omega_product(omega, a, b); };
    using L = GeneratorLabel;

    switch (id.kind) {
    case Kind::alpha_f: {
        // [J_ap, J_a,p+1] ∋ ω_{a,p−1} alphaF[p,p+1] Ξ
        const std::size_t p = id.i;
        for (std::size_t a = 0; a < p; ++a) {
            put(L::J(a, p), L::J(a, p + 1), w(a, p - 1));
        }
        break;
    }
    case Kind::alpha_l: {
        // [J_pc, J_p+1,c] ∋ ω_{p+2,c} alphaL[p,p+1] Ξ
        const std::size_t p = id.i;
        for (std::size_t c = p + 2; c <= n; ++c) {
            put(L::J(p, c), L::J(p + 1, c), w(p + 2, c));
        }
        break;
    }
    case Kind::beta:
        if (family == Family::so) {
            const std::size_t b = id.i - 1;
            const std::size_t d = id.j - 1;
            put(L::J(b, b + 1), L::J(d, d + 1), 1);
            if (d == b + 2) {
                put(L::J(b, b + 2), L::J(b + 1, b + 3), -omega.at(b + 2));
            }
        } else {
            put(L::B(id.i), L::B(id.j), 1);
        }
        break;
    case Kind::alpha: {
        // [J_ab, M_ab] ∋ Σ_{s=a+1}^{b} ω_{a,s−1} ω_{sb} alpha[s] Ξ
        const std::size_t s = id.i;
        for (std::size_t a = 0; a < s; ++a) {
            for (std::size_t b = s; b <= n; ++b) {
                put(L::J(a, b), L::M(a, b), w(a, s - 1) * w(s, b));
            }
        }
        break;
    }
    case Kind::gamma:
        put(L::B(id.i), L::I(), 1);
        break;
    }
    return xi;
}

} // namespace

std::vector<std::vector<std::size_t>> beta_constraint_factors(std::size_t n, std::size_t b, std::size_t d) {
    if (!(d >= b + 2 && d + 1 <= n)) {
        throw InputError("beta[" + std::to_string(b + 1) + "," + std::to_string(d + 1) + "] does not exist for N=" +
                         std::to_string(n));
    }
    std::vector<std::vector<std::size_t>> candidates;
    if (d == b + 2) {
        candidates = {{b}, {b + 1, b + 2}, {b + 2, b + 3}, {b + 4}};
    } else {
        candidates = {{b}, {b + 2}, {d}, {d + 2}};
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& f : candidates) {
        bool present = true;
        for (auto a : f) {
            present = present && a >= 1 && a <= n;
        }
        if (present) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

ExtensionCoefficientCatalog predict_so(const OmegaVector& omega) {
    const std::size_t n = omega.size();
    ExtensionCoefficientCatalog cat{Family::so, omega, {}};
    if (n < 2) {
        return cat;
    }
    // alphaL[p,p+1] needs ω_{p+2} = 0; the paired ones (p ≥ 1) also need ω_p = 0.
    auto l_active = [&](std::size_t p) { return is_zero_at(omega, p + 2) && (p == 0 || is_zero_at(omega, p)); };
    // alphaF[p,p+1] needs ω_p = 0; the paired ones (p ≤ N−2) also need ω_{p+2} = 0.
    auto f_active = [&](std::size_t p) { return is_zero_at(omega, p) && (p == n - 1 || is_zero_at(omega, p + 2)); };

    add_entry(cat, {Kind::alpha_l, 0, 1}, CoefficientType::II, l_active(0), "nontrivial iff " + w_name(2) + " = 0");
    for (std::size_t p = 1; p + 2 <= n; ++p) {
        const auto pair_note = w_name(p + 2) + "*alphaF[" + std::to_string(p) + "," + std::to_string(p + 1) +
                               "] = " + w_name(p) + "*alphaL[" + std::to_string(p) + "," + std::to_string(p + 1) +
                               "]; nontrivial iff " + w_name(p) + " = " + w_name(p + 2) + " = 0";
        add_entry(cat, {Kind::alpha_f, p, p + 1}, CoefficientType::II, f_active(p), pair_note);
        add_entry(cat, {Kind::alpha_l, p, p + 1}, CoefficientType::II, l_active(p), pair_note);
    }
    add_entry(cat, {Kind::alpha_f, n - 1, n}, CoefficientType::II, f_active(n - 1),
              "nontrivial iff " + w_name(n - 1) + " = 0");

    for (std::size_t b = 0; b + 3 <= n; ++b) {
        for (std::size_t d = b + 2; d + 1 <= n; ++d) {
            std::string note = "vanishes unless";
            bool first = true;
            for (const auto& factor : beta_constraint_factors(n, b, d)) {
                note += first ? " " : ", ";
                first = false;
                for (std::size_t k = 0; k < factor.size(); ++k) {
                    note += (k ? "*" : "") + w_name(factor[k]);
                }
                note += " = 0";
            }
            if (first) {
                note = "unconstrained";
            }
            add_entry(cat, {Kind::beta, b + 1, d + 1}, CoefficientType::III, beta_so_active(omega, b, d), note);
        }
    }
    return cat;
}

ExtensionCoefficientCatalog predict_su(const OmegaVector& omega) {
    const std::size_t n = omega.size();
    ExtensionCoefficientCatalog cat{Family::su, omega, {}};
    for (std::size_t k = 1; k <= n; ++k) {
        add_entry(cat, {Kind::alpha, k, 0}, CoefficientType::II, is_zero_at(omega, k),
                  "nontrivial iff " + w_name(k) + " = 0");
    }
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t l = k + 1; l <= n; ++l) {
            add_entry(cat, {Kind::beta, k, l}, CoefficientType::III, is_zero_at(omega, k) && is_zero_at(omega, l),
                      "vanishes unless " + w_name(k) + " = " + w_name(l) + " = 0");
        }
    }
    return cat;
}

ExtensionCoefficientCatalog predict_u(const OmegaVector& omega) {
    auto cat = predict_su(omega);
    cat.family = Family::u;
    for (std::size_t k = 1; k <= omega.size(); ++k) {
        add_entry(cat, {Kind::gamma, k, 0}, CoefficientType::III, is_zero_at(omega, k),
                  "vanishes unless " + w_name(k) + " = 0");
    }
    return cat;
}

ExtensionCoefficientCatalog predict_sq(const OmegaVector& omega) { return {Family::sq, omega, {}}; }

ExtensionCoefficientCatalog predict(Family family, const OmegaVector& omega) {
    switch (family) {
    case Family::so: return predict_so(omega);
    case Family::su: return predict_su(omega);
    case Family::u: return predict_u(omega);
    case Family::sq: return predict_sq(omega);
    }
    throw InternalError("unknown family");
}

TwoCochain paper_cocycle(Family family, const OmegaVector& omega, std::string_view name) {
    return raw_cochain(family, omega, checked_name(family, omega.size(), name));
}

std::optional<TwoCochain> admissible_cochain(Family family, const OmegaVector& omega, std::string_view name) {
    const std::size_t n = omega.size();
    const auto id = checked_name(family, n, name);
    const auto raw = raw_cochain(family, omega, id);
    if (family == Family::so && (id.kind == Kind::alpha_f || id.kind == Kind::alpha_l)) {
        const std::size_t p = id.i;
        const bool paired = p >= 1 && p + 2 <= n;
        if (!paired) {
            return raw;
        }
        const auto& wp = omega.at(p);
        const auto& wp2 = omega.at(p + 2);
        if (!wp.is_zero() && !wp2.is_zero()) {
            // alphaF = ω_p, alphaL = ω_{p+2} satisfies ω_{p+2} alphaF = ω_p alphaL.
            return wp * raw_cochain(family, omega, {Kind::alpha_f, p, p + 1}) +
                   wp2 * raw_cochain(family, omega, {Kind::alpha_l, p, p + 1});
        }
        const bool forced = id.kind == Kind::alpha_f ? (wp.is_zero() && !wp2.is_zero())
                                                     : (!wp.is_zero() && wp2.is_zero());
        if (forced) {
            return std::nullopt;
        }
        return raw;
    }
    if (id.kind == Kind::alpha) {
        return raw;
    }
    // Type III: present only when its constraints hold.
    for (const auto& entry : predict(family, omega).entries) {
        if (entry.id == id) {
            return entry.active ? std::optional<TwoCochain>(raw) : std::nullopt;
        }
    }
    throw InternalError("coefficient missing from its own catalog");
}

std::optional<OneCochain> removal_shift(Family family, const OmegaVector& omega, std::string_view name) {
    const std::size_t n = omega.size();
    const auto id = checked_name(family, n, name);
    const auto labels = basis_labels(family, n);
    auto unit_at = [&](const GeneratorLabel& label, const Rational& value) {
        const auto pos = std::find(labels.begin(), labels.end(), label) - labels.begin();
        return OneCochain::unit(labels.size(), static_cast<std::size_t>(pos), value);
    };
    if (family == Family::so && (id.kind == Kind::alpha_f || id.kind == Kind::alpha_l)) {
        const std::size_t p = id.i;
        const bool paired = p >= 1 && p + 2 <= n;
        const Rational wp = p >= 1 ? omega.at(p) : Rational(0);
        const Rational wp2 = p + 2 <= n ? omega.at(p + 2) : Rational(0);
        if (!admissible_cochain(family, omega, name)) {
            return std::nullopt;
        }
        // J_{p,p+1} → J_{p,p+1} + (alphaF/ω_p) Ξ = J_{p,p+1} + (alphaL/ω_{p+2}) Ξ
        if (paired && !wp.is_zero() && !wp2.is_zero()) {
            return unit_at(GeneratorLabel::J(p, p + 1), 1); // alphaF = ω_p
        }
        if (id.kind == Kind::alpha_f && !wp.is_zero()) {
            return unit_at(GeneratorLabel::J(p, p + 1), Rational(1) / wp);
        }
        if (id.kind == Kind::alpha_l && !wp2.is_zero()) {
            return unit_at(GeneratorLabel::J(p, p + 1), Rational(1) / wp2);
        }
        return std::nullopt;
    }
    if (id.kind == Kind::alpha && !omega.at(id.i).is_zero()) {
        // [J_ab, M_ab] carries −2ω_ab B_s, and ω_ab = ω_{a,s−1} ω_s ω_{sb}.
        return unit_at(GeneratorLabel::B(id.i), Rational(-1) / (2 * omega.at(id.i)));
    }
    return std::nullopt;
}

CrosscheckReport crosscheck(const CohomologySolver& solver, const CohomologyResult& result) {
    const auto& algebra = solver.algebra();
    CrosscheckReport report;
    report.family = algebra.family();
    report.omega = algebra.omega();
    report.cohomology = result;
    const auto catalog = predict(report.family, report.omega);
    report.predicted = catalog.count();

    bool all_ok = true;
    std::vector<TwoCochain> active_cochains;
    for (const auto& entry : catalog.entries) {
        CoefficientVerdict v{entry.name, entry.type, entry.active, "", false};
        const auto cochain = admissible_cochain(report.family, report.omega, entry.name);
        if (!cochain) {
            const bool raw_cocycle = is_cocycle(paper_cocycle(report.family, report.omega, entry.name), algebra);
            v.verdict = raw_cocycle ? "not_forced" : "forced_zero";
            v.ok = !entry.active && !raw_cocycle;
        } else if (!is_cocycle(*cochain, algebra)) {
            v.verdict = "not_cocycle";
        } else {
            const bool trivial = solver.in_coboundary_span(*cochain);
            v.verdict = trivial ? "trivial" : "nontrivial";
            v.ok = entry.active != trivial;
            if (entry.active) {
                active_cochains.push_back(*cochain);
            }
        }
        all_ok = all_ok && v.ok;
        report.verdicts.push_back(std::move(v));
    }
    report.active_independent = solver.rank_modulo_coboundaries(active_cochains) == report.predicted;
    report.match = all_ok && report.predicted == result.dim_h2;
    return report;
}

CrosscheckReport crosscheck(Family family, const OmegaVector& omega) {
    const CohomologySolver solver(build_algebra(family, omega));
    return crosscheck(solver, solver.compute());
}

} // namespace ckalg
