#include "poisson/rational.hpp"

#include <cctype>
#include <ostream>

#include "poisson/errors.hpp"

namespace poisson {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ParseError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("malformed rational '" + text + "'");
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw ParseError("malformed rational '" + text + "'");
    if (sgn(v.get_den()) == 0) throw ParseError("rational with zero denominator: '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace poisson
