#include "ckalg/rational.hpp"

#include "ckalg/errors.hpp"

#include <cctype>

namespace ckalg {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) {
        return false;
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) {
        throw InputError("not an integer: '" + std::string(s) + "'");
    }
    if (s[0] == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(const mpq_class& value) : value_(value) {
    value_.canonicalize();
}

Rational Rational::normalize(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw InputError("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text[0] == '-' || den_text[0] == '+') {
        throw InputError("bad denominator in '" + std::string(text) + "'");
    }
    return normalize(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw InputError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

} // namespace ckalg
