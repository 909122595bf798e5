// Acceptance suite: one PASS/FAIL line per criterion. Exit status 0 iff all pass.
// Run with --stretch to include the sq N = 3 sweep in criterion 7.

#include "ckalg/classify.hpp"
#include "ckalg/cli.hpp"
#include "ckalg/cohomology.hpp"
#include "ckalg/lie_algebra.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

using namespace ckalg;

namespace {

// Pinned tolerances. Every dimension and cochain comparison is exact (zero tolerance).
constexpr double whitehead_budget_s = 60.0;
constexpr double sweep_budget_s = 300.0;

const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Collects the first few failures of a criterion.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            if (failures_++ < 5) {
                notes_ += (notes_.empty() ? "" : "; ") + what;
            }
        }
    }
    Outcome outcome(const std::string& summary) const {
        std::ostringstream s;
        s << summary << ", " << checks_ << " checks";
        if (failures_ > 0) {
            s << ", " << failures_ << " failed: " << notes_;
        }
        return {failures_ == 0, s.str()};
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string notes_;
};

std::string label(Family f, const OmegaVector& w) { return to_string(f) + "(" + w.to_string() + ")"; }

/// Sign patterns whose zero set is exactly `zeros` (1-based).
std::vector<OmegaVector> patterns_with_zero_set(std::size_t n, const std::set<std::size_t>& zeros) {
    std::vector<OmegaVector> out;
    for (const auto& w : sign_patterns(n)) {
        if (w.zero_set() == zeros) {
            out.push_back(w);
        }
    }
    return out;
}

std::size_t dim_h2(Family f, const OmegaVector& w) { return h2(build_algebra(f, w)).dim_h2; }

Outcome c1_whitehead() {
    Tally t;
    std::size_t cases = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        for (const auto& w : patterns_with_zero_set(n, {})) {
            ++cases;
            t.check(dim_h2(Family::so, w) == 0, label(Family::so, w));
        }
    }
    return t.outcome(std::to_string(cases) + " so(p,q) signatures N=2..5 give dim H2 = 0");
}

Outcome c2_poincare() {
    Tally t;
    std::string dims;
    for (std::size_t n = 2; n <= 5; ++n) {
        const std::size_t expected = n == 2 ? 1 : 0;
        for (const auto& w : patterns_with_zero_set(n, {1})) {
            t.check(dim_h2(Family::so, w) == expected, label(Family::so, w));
        }
        dims += (dims.empty() ? "" : ",") + std::to_string(expected);
    }
    return t.outcome("omega_1 = 0 line, dims by N=2..5: " + dims);
}

Outcome c3_galilei() {
    Tally t;
    const std::size_t expected[] = {0, 0, 2, 3, 1, 1};
    for (std::size_t n = 2; n <= 5; ++n) {
        for (const auto& w : patterns_with_zero_set(n, {1, 2})) {
            t.check(dim_h2(Family::so, w) == expected[n], label(Family::so, w));
        }
    }
    return t.outcome("omega_1 = omega_2 = 0 table 2,3,1,1 for N=2..5");
}

Outcome c4_flag() {
    Tally t;
    std::string dims;
    for (std::size_t n = 2; n <= 5; ++n) {
        const OmegaVector w{std::vector<Rational>(n)};
        const std::size_t expected = 2 * (n - 1) + (n - 1) * (n - 2) / 2;
        t.check(dim_h2(Family::so, w) == expected, label(Family::so, w));
        dims += (dims.empty() ? "" : ",") + std::to_string(expected);
    }
    return t.outcome("all omega = 0, dims by N=2..5: " + dims);
}

Outcome sweep_against(Family f, std::size_t n_max, const std::function<std::size_t(std::size_t)>& formula,
                      const std::string& what) {
    Tally t;
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (const auto& row : cli::sweep(f, n, jobs)) {
            ++cases;
            const std::string name = label(f, row.omega);
            t.check(row.match, name + " predictor/solver mismatch");
            t.check(row.dim_h2 == row.predicted, name + " count");
            if (formula) {
                t.check(row.dim_h2 == formula(row.n_zeros), name + " formula");
            }
        }
    }
    return t.outcome(std::to_string(cases) + " " + what);
}

Outcome c5_orthogonal_sweep() { return sweep_against(Family::so, 5, nullptr, "so cases N=1..5, solver = predictor"); }

Outcome c6_unitary() {
    auto a = sweep_against(Family::su, 3, [](std::size_t z) { return z * (z + 1) / 2; },
                           "su cases N=1..3 at n(n+1)/2");
    auto b = sweep_against(Family::u, 3, [](std::size_t z) { return z * (z + 3) / 2; },
                           "u cases N=1..3 at n(n+3)/2");
    return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Outcome c7_quaternionic(bool stretch) {
    return sweep_against(Family::sq, stretch ? 3 : 2, [](std::size_t) { return std::size_t{0}; },
                         stretch ? "sq cases N=1..3 at 0" : "sq cases N=1..2 at 0");
}

struct SweepCase {
    Family family;
    std::size_t n_max;
};

std::vector<SweepCase> sweep_cases(bool stretch) {
    return {{Family::so, 5}, {Family::su, 3}, {Family::u, 3}, {Family::sq, stretch ? std::size_t{3} : 2}};
}

Outcome c8_matrix_equivalence(bool stretch) {
    Tally t;
    std::size_t cases = 0;
    for (const auto& sc : sweep_cases(stretch)) {
        for (std::size_t n = 1; n <= sc.n_max; ++n) {
            for (const auto& w : sign_patterns(n)) {
                ++cases;
                t.check(from_matrices(sc.family, w) == build_algebra(sc.family, w), label(sc.family, w));
            }
        }
    }
    return t.outcome(std::to_string(cases) + " algebras, matrix commutators = closed-form constants");
}

/// The β conditions exactly as printed: the listed ω factors must annihilate β,
/// skipping any factor that involves ω_0 or ω_{N+1}.
bool beta_conditions_hold(const OmegaVector& w, std::size_t b, std::size_t d) {
    const std::size_t n = w.size();
    std::vector<std::vector<std::size_t>> factors;
    if (d == b + 2) {
        factors = {{b}, {b + 1, b + 2}, {b + 2, b + 3}, {b + 4}};
    } else {
        factors = {{b}, {b + 2}, {d}, {d + 2}};
    }
    for (const auto& f : factors) {
        bool present = true;
        Rational value = 1;
        for (auto x : f) {
            present = present && x >= 1 && x <= n;
            if (present) {
                value *= w.at(x);
            }
        }
        if (present && !value.is_zero()) {
            return false;
        }
    }
    return true;
}

bool oracle_cocycle(const LieAlgebra& L, const TwoCochain& xi) {
    const oracle::Cochain f = [&](std::size_t a, std::size_t b) { return xi.get(a, b); };
    for (std::size_t i = 0; i < L.dim(); ++i) {
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            for (std::size_t l = j + 1; l < L.dim(); ++l) {
                if (!oracle::jacobi_residual(L, f, i, j, l).is_zero()) {
                    return false;
                }
            }
        }
    }
    return true;
}

Outcome c9_beta_constraints() {
    Tally t;
    std::size_t satisfied = 0;
    std::size_t violated = 0;
    for (std::size_t n = 3; n <= 5; ++n) {
        for (const auto& w : sign_patterns(n)) {
            const auto L = build_so(w);
            for (std::size_t b = 0; b + 3 <= n; ++b) {
                for (std::size_t d = b + 2; d + 1 <= n; ++d) {
                    const std::string name = "beta[" + std::to_string(b + 1) + "," + std::to_string(d + 1) + "]";
                    const auto xi = paper_cocycle(Family::so, w, name);
                    const bool expected = beta_conditions_hold(w, b, d);
                    (expected ? satisfied : violated)++;
                    const bool got = oracle_cocycle(L, xi);
                    t.check(got == expected, label(Family::so, w) + " " + name);
                    t.check(is_cocycle(xi, L) == got, label(Family::so, w) + " " + name + " library");
                }
            }
        }
    }
    return t.outcome(std::to_string(satisfied) + " (b,d,omega) with conditions met are cocycles, " +
                     std::to_string(violated) + " violating are not");
}

/// Cochain carrying alphaF[p,p+1] = f and alphaL[p,p+1] = l as printed in the extended brackets:
/// [J_xp, J_x,p+1] gets ω_{x,p−1} f and [J_pc, J_p+1,c] gets ω_{p+2,c} l.
TwoCochain alpha_pair_cochain(const LieAlgebra& L, std::size_t p, const Rational& f, const Rational& l) {
    const auto& w = L.omega();
    const std::size_t n = w.size();
    TwoCochain xi(L.dim());
    if (!f.is_zero()) {
        for (std::size_t x = 0; x < p; ++x) {
            xi.add(L.require_index(GeneratorLabel::J(x, p)), L.require_index(GeneratorLabel::J(x, p + 1)),
                   omega_product(w, x, p - 1) * f);
        }
    }
    if (!l.is_zero()) {
        for (std::size_t c = p + 2; c <= n; ++c) {
            xi.add(L.require_index(GeneratorLabel::J(p, c)), L.require_index(GeneratorLabel::J(p + 1, c)),
                   omega_product(w, p + 2, c) * l);
        }
    }
    return xi;
}

Outcome c10_pseudoextension_removal() {
    Tally t;
    std::size_t pairs = 0;
    for (std::size_t n = 3; n <= 5; ++n) {
        for (const auto& signs : sign_patterns(n)) {
            // Both the canonical signs and a rescaled copy with non-unit entries.
            std::vector<Rational> scaled;
            for (std::size_t a = 1; a <= n; ++a) {
                scaled.push_back(signs.at(a) * Rational::normalize(a + 2, a + 1));
            }
            for (const auto& w : {signs, OmegaVector(scaled)}) {
                const auto L = build_so(w);
                for (std::size_t a = 0; a + 3 <= n; ++a) {
                    const std::size_t p = a + 1;
                    if (w.at(a + 1).is_zero() || w.at(a + 3).is_zero()) {
                        continue;
                    }
                    ++pairs;
                    // Any alphaF; alphaL is then fixed by ω_{a+3} alphaF = ω_{a+1} alphaL.
                    const Rational f = Rational::normalize(5, 3);
                    const Rational l = w.at(a + 3) * f / w.at(a + 1);
                    const auto xi = alpha_pair_cochain(L, p, f, l);
                    const auto mu =
                        OneCochain::unit(L.dim(), L.require_index(GeneratorLabel::J(p, p + 1)), f / w.at(a + 1));
                    const auto mu_l =
                        OneCochain::unit(L.dim(), L.require_index(GeneratorLabel::J(p, p + 1)), l / w.at(a + 3));
                    const std::string name = label(Family::so, w) + " pair " + std::to_string(p);
                    t.check(!xi.is_zero(), name + " nonzero");
                    t.check(coboundary(mu, L) == xi, name + " shift by alphaF/omega");
                    t.check(coboundary(mu_l, L) == xi, name + " shift by alphaL/omega");
                    const auto shift =
                        removal_shift(Family::so, w, "alphaF[" + std::to_string(p) + "," + std::to_string(p + 1) + "]");
                    t.check(shift.has_value() && coboundary(*shift, L) ==
                                                     *admissible_cochain(Family::so, w,
                                                                         "alphaF[" + std::to_string(p) + "," +
                                                                             std::to_string(p + 1) + "]"),
                            name + " library shift");
                }
            }
        }
    }
    return t.outcome(std::to_string(pairs) + " type II pairs with omega_{a+1}, omega_{a+3} != 0 equal an explicit coboundary");
}

Outcome c11_properties(bool stretch) {
    Tally t;
    std::size_t cases = 0;
    std::mt19937 rng(20261019);
    for (const auto& sc : sweep_cases(stretch)) {
        for (std::size_t n = 1; n <= sc.n_max; ++n) {
            std::map<OmegaVector, std::size_t> dims;
            for (const auto& w : sign_patterns(n)) {
                ++cases;
                const auto name = label(sc.family, w);
                const auto L = build_algebra(sc.family, w);
                t.check(verify_jacobi(L), name + " jacobi");
                const auto r = h2(L);
                for (const auto& b : r.b2_basis) {
                    t.check(is_cocycle(b, L), name + " B2 in Z2");
                }
                t.check(r.dim_h2 == r.dim_z2 - r.dim_b2, name + " dim identity");
                t.check(r.b2_basis.size() == r.dim_b2 && r.z2_basis.size() == r.dim_z2, name + " basis sizes");

                std::vector<std::size_t> order(L.dim());
                std::iota(order.begin(), order.end(), 0);
                std::shuffle(order.begin(), order.end(), rng);
                const auto P = L.permuted(order);
                t.check(verify_jacobi(P), name + " permuted jacobi");
                const auto rp = h2(P);
                t.check(rp.dim_z2 == r.dim_z2 && rp.dim_b2 == r.dim_b2 && rp.dim_h2 == r.dim_h2,
                        name + " permutation invariance");
                dims[w] = r.dim_h2;
            }
            // Contracting one more coefficient never lowers dim H².
            for (const auto& [w, d] : dims) {
                for (std::size_t a = 1; a <= n; ++a) {
                    if (!w.at(a).is_zero()) {
                        t.check(dims.at(contract(w, {a})) >= d, label(sc.family, w) + " monotone in a=" + std::to_string(a));
                    }
                }
            }
        }
    }
    return t.outcome(std::to_string(cases) + " algebras");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    bool stretch = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--stretch") == 0) {
            stretch = true;
        } else {
            std::cerr << "usage: acceptance [--stretch]\n";
            return 2;
        }
    }

    struct Criterion {
        int id;
        std::string title;
        double budget_s; // 0: no time limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Whitehead baseline", whitehead_budget_s, c1_whitehead},
        {2, "Euclidean/Poincare line", 0, c2_poincare},
        {3, "Galilei table", 0, c3_galilei},
        {4, "Flag algebra", 0, c4_flag},
        {5, "Full orthogonal sweep", sweep_budget_s, c5_orthogonal_sweep},
        {6, "Unitary formulas", sweep_budget_s, c6_unitary},
        {7, "Quaternionic triviality", sweep_budget_s, [&] { return c7_quaternionic(stretch); }},
        {8, "Matrix/closed-form equivalence", 0, [&] { return c8_matrix_equivalence(stretch); }},
        {9, "Cocycle-constraint equivalence", 0, c9_beta_constraints},
        {10, "Pseudoextension removal", 0, c10_pseudoextension_removal},
        {11, "Property suite", 0, [&] { return c11_properties(stretch); }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = seconds_since(start);
        if (c.budget_s > 0 && elapsed > c.budget_s) {
            o.pass = false;
            o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
        }
        all = all && o.pass;
        std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(),
                    elapsed);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
