#include "thetadiv/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace thetadiv {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) {
    // mpq_class has no int64 constructor on every platform; go through mpz.
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
    v_ = mpq_class(z);
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    mpz_class n, d;
    mpz_set_si(n.get_mpz_t(), static_cast<long>(num));
    mpz_set_si(d.get_mpz_t(), static_cast<long>(den));
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(text)));
    mpz_class num = parse_integer(text.substr(0, slash));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    mpz_class den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw std::domain_error("zero to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace thetadiv
