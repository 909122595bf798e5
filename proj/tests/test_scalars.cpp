#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ckalg/errors.hpp"
#include "ckalg/hypercomplex.hpp"
#include "ckalg/rational.hpp"
#include "oracle.hpp"

#include <random>
#include <sstream>

using namespace ckalg;

namespace {

Hypercomplex random_quaternion(std::mt19937& rng) {
    return Hypercomplex::quaternion(oracle::random_rational(rng), oracle::random_rational(rng),
                                    oracle::random_rational(rng), oracle::random_rational(rng));
}

} // namespace

TEST_CASE("rational normalisation") {
    const auto half = Rational::normalize(2, 4);
    CHECK(half.numerator() == 1);
    CHECK(half.denominator() == 2);

    const auto zero = Rational::normalize(0, 5);
    CHECK(zero.numerator() == 0);
    CHECK(zero.denominator() == 1);
    CHECK(zero.is_zero());

    const auto neg = Rational::normalize(3, -6);
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 2);
    CHECK(neg.to_string() == "-1/2");

    CHECK_THROWS_AS(Rational::normalize(1, 0), InputError);
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/9") == Rational::normalize(-1, 3));
    CHECK(Rational::parse("+2/4").to_string() == "1/2");
    CHECK(Rational::parse("6/3").to_string() == "2");
    CHECK(Rational::parse("0/7").to_string() == "0");
    for (const char* bad : {"", "x", "1/0", "1/", "/2", "1/-2", "1.5", "--1", "1 2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), InputError);
    }
    std::ostringstream os;
    os << Rational::normalize(5, -10);
    CHECK(os.str() == "-1/2");
}

TEST_CASE("rational arithmetic and ordering") {
    const Rational a = Rational::parse("1/3");
    const Rational b = Rational::parse("1/6");
    CHECK(a + b == Rational::parse("1/2"));
    CHECK(a - b == b);
    CHECK(a * b == Rational::parse("1/18"));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational::parse("-1/3"));
    CHECK(b < a);
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK(Rational(4).is_integer());
    CHECK_THROWS_AS(a / Rational(0), InputError);
}

TEST_CASE("quaternion unit relations") {
    const auto i1 = Hypercomplex::unit(1);
    const auto i2 = Hypercomplex::unit(2);
    const auto i3 = Hypercomplex::unit(3);
    CHECK(i1 * i2 == i3);
    CHECK(i2 * i3 == i1);
    CHECK(i3 * i1 == i2);
    CHECK(i2 * i1 == -i3);
    CHECK(i1 * i1 == Hypercomplex::real(-1));
    CHECK(i2 * i2 == Hypercomplex::real(-1));
    CHECK(i3 * i3 == Hypercomplex::real(-1));
    CHECK(hyper_mul(Hypercomplex::complex(1, 1), Hypercomplex::complex(1, -1)) == Hypercomplex::real(2));
    CHECK_THROWS_AS(Hypercomplex::unit(0), InputError);
    CHECK_THROWS_AS(Hypercomplex::unit(4), InputError);
}

TEST_CASE("conjugation") {
    CHECK(hyper_conj(Hypercomplex::complex(1, 1)) == Hypercomplex::complex(1, -1));
    CHECK(hyper_conj(Hypercomplex::real(3)) == Hypercomplex::real(3));
    CHECK(hyper_conj(Hypercomplex::quaternion(0, 0, 1, 1)) == Hypercomplex::quaternion(0, 0, -1, -1));
    CHECK(hyper_conj(Hypercomplex::complex(1, 1)).kind() == ScalarKind::complex);
}

TEST_CASE("kind tags") {
    CHECK_THROWS_AS(Hypercomplex(ScalarKind::real, 1, 1), InputError);
    CHECK_THROWS_AS(Hypercomplex(ScalarKind::complex, 1, 1, 1), InputError);
    CHECK((Hypercomplex::real(1) * Hypercomplex::unit(1)).kind() == ScalarKind::complex);
    CHECK((Hypercomplex::unit(1) + Hypercomplex::unit(2)).kind() == ScalarKind::quaternion);
    CHECK(Hypercomplex::real(2).as_kind(ScalarKind::quaternion).kind() == ScalarKind::quaternion);
    CHECK_THROWS_AS(Hypercomplex::unit(2).as_kind(ScalarKind::complex), InputError);
    CHECK(Hypercomplex::complex(2, 0).as_kind(ScalarKind::real) == Hypercomplex::real(2));
    CHECK(component_count(ScalarKind::complex) == 2);
    CHECK(to_string(ScalarKind::quaternion) == "quaternion");
}

TEST_CASE("quaternion algebra properties on random samples") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_quaternion(rng);
        const auto b = random_quaternion(rng);
        const auto c = random_quaternion(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(hyper_conj(a * b) == hyper_conj(b) * hyper_conj(a));
        CHECK(hyper_conj(hyper_conj(a)) == a);
        CHECK((a * b).norm2() == a.norm2() * b.norm2());
        CHECK(a * hyper_conj(a) == Hypercomplex::real(a.norm2()));
    }
}
