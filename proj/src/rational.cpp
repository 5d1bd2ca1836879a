#include "symcurve/rational.hpp"

#include <cctype>

namespace symcurve {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0)
        throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string num_str(num);
    if (num_str[0] == '+')
        num_str.erase(0, 1);
    mpz_class p(num_str, 10);
    mpz_class q{std::string(den), 10};
    if (q == 0)
        throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
    mpq_class v(p, q);
    v.canonicalize();
    return Rational(std::move(v));
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

std::string Rational::to_string() const {
    if (is_integer())
        return numerator_string();
    return numerator_string() + "/" + denominator_string();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("division by zero rational");
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& x) {
    Rational r;
    r.value_ = -x.value_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(c));
}

}  // namespace symcurve
