#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ckalg/classify.hpp"
#include "ckalg/cohomology.hpp"
#include "ckalg/errors.hpp"
#include "oracle.hpp"

using namespace ckalg;

namespace {

OmegaVector om(const char* text) { return OmegaVector::parse(text); }

using Names = std::vector<std::string>;

Names sorted(Names v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("coefficient names") {
    for (const char* s : {"alphaF[2,3]", "alphaL[0,1]", "beta[1,3]", "alpha[2]", "gamma[1]"}) {
        CHECK(CoefficientName::parse(s).to_string() == s);
    }
    for (const char* s : {"", "alphaF[2,4]", "beta[1]", "alpha[x]", "delta[1]", "alpha[1"}) {
        CAPTURE(s);
        CHECK_THROWS_AS(CoefficientName::parse(s), InputError);
    }
}

TEST_CASE("orthogonal predictor") {
    CHECK(predict_so(om("1,1,1,1")).count() == 0);
    CHECK(sorted(predict_so(om("0,0,1")).active_names()) == sorted({"alphaL[0,1]", "alphaF[2,3]", "beta[1,3]"}));
    CHECK(predict_so(om("0,0,0,0")).count() == 9);
    CHECK(predict_so(om("0,0,1,1,1")).active_names() == Names{"alphaL[0,1]"});
    CHECK(predict_so(om("0,1")).active_names() == Names{"alphaF[1,2]"});
    CHECK(predict_so(om("1")).count() == 0);
    CHECK(predict_so(om("0")).count() == 0);

    // Galilei table: ω₁ = ω₂ = 0, the rest nonzero.
    CHECK(predict_so(om("0,0")).count() == 2);
    CHECK(predict_so(om("0,0,1")).count() == 3);
    CHECK(predict_so(om("0,0,-1,1")).count() == 1);
    CHECK(predict_so(om("0,0,1,-1,1")).count() == 1);

    for (std::size_t n = 2; n <= 5; ++n) {
        const auto all_zero = OmegaVector(std::vector<Rational>(n));
        CHECK(predict_so(all_zero).count() == 2 * (n - 1) + (n - 1) * (n - 2) / 2);
    }

    const auto cat = predict_so(om("1,0,1"));
    for (const auto& e : cat.entries) {
        const bool is_beta = e.id.kind == CoefficientName::Kind::beta;
        CHECK(e.type == (is_beta ? CoefficientType::III : CoefficientType::II));
        CHECK(e.name == e.id.to_string());
    }
}

TEST_CASE("beta constraint factors") {
    // Every factor touching ω_0 or ω_{N+1} is dropped.
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t b = 0; b + 2 <= n; ++b) {
            for (std::size_t d = b + 2; d < n; ++d) {
                for (const auto& f : beta_constraint_factors(n, b, d)) {
                    CHECK_FALSE(f.empty());
                    for (auto x : f) {
                        CHECK(x >= 1);
                        CHECK(x <= n);
                    }
                }
            }
        }
    }
}

TEST_CASE("unitary and quaternionic predictors") {
    CHECK(predict_su(om("1,1,1")).count() == 0);
    CHECK(predict_su(om("0,1,1")).active_names() == Names{"alpha[1]"});
    CHECK(sorted(predict_su(om("0,0,1")).active_names()) == sorted({"alpha[1]", "alpha[2]", "beta[1,2]"}));
    CHECK(predict_u(om("1,1")).count() == 0);
    CHECK(sorted(predict_u(om("0,-1")).active_names()) == sorted({"alpha[1]", "gamma[1]"}));
    CHECK(predict_u(om("0,0,0")).count() == 9);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& w : sign_patterns(n)) {
            const std::size_t z = w.zero_count();
            CHECK(predict_su(w).count() == z * (z + 1) / 2);
            CHECK(predict_u(w).count() == z * (z + 3) / 2);
            CHECK(predict_sq(w).count() == 0);
        }
    }
    CHECK(predict_sq(om("-1,1")).count() == 0);
    CHECK(predict_sq(om("0,0,0")).count() == 0);
    CHECK(predict(Family::u, om("0")).family == Family::u);
}

TEST_CASE("cochains attached to coefficients") {
    const auto w = om("0,1");
    const auto L = build_so(w);
    const auto f = paper_cocycle(Family::so, w, "alphaF[1,2]");
    CHECK(f.get(L.require_index(GeneratorLabel::J(0, 1)), L.require_index(GeneratorLabel::J(0, 2))) == Rational(1));
    CHECK(is_cocycle(f, L));
    CHECK_FALSE(is_trivial(f, L));

    const auto su = build_su(om("0"));
    const auto a1 = paper_cocycle(Family::su, om("0"), "alpha[1]");
    CHECK(a1.get(su.require_index(GeneratorLabel::J(0, 1)), su.require_index(GeneratorLabel::M(0, 1))) ==
          Rational(1));
    CHECK(a1.entries().size() == 1);
    CHECK_FALSE(is_trivial(a1, su));

    CHECK_THROWS_AS(paper_cocycle(Family::so, w, "alpha[1]"), InputError);
    CHECK_THROWS_AS(paper_cocycle(Family::so, w, "beta[1,3]"), InputError);
}

TEST_CASE("pseudoextensions of simple algebras are removable") {
    const auto w = om("1,1,1");
    const auto L = build_so(w);
    for (const auto& e : predict_so(w).entries) {
        if (e.type != CoefficientType::II) {
            continue;
        }
        const auto xi = admissible_cochain(Family::so, w, e.name);
        REQUIRE(xi.has_value());
        CHECK(is_cocycle(*xi, L));
        CHECK(is_trivial(*xi, L));
        const auto mu = removal_shift(Family::so, w, e.name);
        REQUIRE(mu.has_value());
        CHECK(coboundary(*mu, L) == *xi);
    }
    const auto s = om("1,-1");
    const auto su = build_su(s);
    for (const char* name : {"alpha[1]", "alpha[2]"}) {
        const auto mu = removal_shift(Family::su, s, name);
        REQUIRE(mu.has_value());
        CHECK(coboundary(*mu, su) == *admissible_cochain(Family::su, s, name));
    }
    CHECK_FALSE(removal_shift(Family::so, om("0,1"), "alphaF[1,2]").has_value());
}

TEST_CASE("crosscheck reports") {
    const auto a = crosscheck(Family::so, om("0,1"));
    CHECK(a.match);
    CHECK(a.cohomology.dim_h2 == 1);
    CHECK(a.active_independent);
    const auto b = crosscheck(Family::su, om("0,0"));
    CHECK(b.match);
    CHECK(b.cohomology.dim_h2 == 3);
    const auto c = crosscheck(Family::sq, om("0,0"));
    CHECK(c.match);
    CHECK(c.cohomology.dim_h2 == 0);
    for (const auto& v : crosscheck(Family::so, om("0,0,1")).verdicts) {
        CAPTURE(v.name);
        CHECK(v.ok);
        if (v.active) {
            CHECK(v.verdict == "nontrivial");
        } else {
            CHECK((v.verdict == "trivial" || v.verdict == "forced_zero"));
        }
    }
}

TEST_CASE("predictor agrees with the solver on small sweeps") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& w : sign_patterns(n)) {
            for (auto f : {Family::so, Family::su, Family::u}) {
                CAPTURE(w.to_string());
                const auto r = crosscheck(f, w);
                CHECK(r.match);
                CHECK(r.predicted == r.cohomology.dim_h2);
                if (n <= 2 || f == Family::so) {
                    const auto L = build_algebra(f, w);
                    CHECK(r.predicted == oracle::dim_z2(L) - oracle::dim_b2(L));
                }
            }
        }
    }
}

TEST_CASE("further contraction never lowers the count") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& w : sign_patterns(n)) {
            for (std::size_t a = 1; a <= n; ++a) {
                if (w.at(a).is_zero()) {
                    continue;
                }
                const auto c = contract(w, {a});
                for (auto f : {Family::so, Family::su, Family::u, Family::sq}) {
                    CAPTURE(w.to_string());
                    CHECK(predict(f, c).count() >= predict(f, w).count());
                }
            }
        }
    }
}

TEST_CASE("zero patterns") {
    const auto z = zero_pattern(om("0,2,0"));
    CHECK(z.n == 2);
    CHECK(z.zero_set == std::set<std::size_t>{1, 3});
}
