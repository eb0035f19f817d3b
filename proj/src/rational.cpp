#include "crepant/rational.hpp"

#include <ostream>

#include "crepant/errors.hpp"

namespace crepant {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw ValidationError("not a rational literal: '" + std::string(text) + "'");
    }
    mpq_class q(to_mpz(num));
    if (slash != std::string_view::npos) {
        const auto den = text.substr(slash + 1);
        if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
            throw ValidationError("not a rational literal: '" + std::string(text) + "'");
        }
        mpz_class d = to_mpz(den);
        if (d == 0) throw DivisionByZero();
        q = mpq_class(q.get_num(), d);
    }
    return Rational(q);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace crepant
