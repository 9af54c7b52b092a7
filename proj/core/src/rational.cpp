#include "fourstate/rational.hpp"

#include <cctype>
#include <sstream>

namespace fourstate {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t pos = 0;
    if (s[pos] == '-') ++pos;
    std::size_t num_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == num_start) throw ParseError("malformed rational literal: '" + s + "'");
    std::string num = s.substr(0, pos);
    std::string den = "1";
    if (pos < s.size()) {
        if (s[pos] != '/') throw ParseError("malformed rational literal: '" + s + "'");
        ++pos;
        std::size_t den_start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_start || pos != s.size())
            throw ParseError("malformed rational literal: '" + s + "'");
        den = s.substr(den_start);
    }
    BigInt d(den);
    if (sgn(d) == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(BigInt(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << '/' << r.get_den();
    return os.str();
}

std::string to_decimal_string(const Rational& r, int digits) {
    if (digits < 0) digits = 0;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt scaled_num = r.get_num() * scale;
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), r.get_den().get_mpz_t());
    bool neg = sgn(q) < 0;
    BigInt absq = abs(q);
    std::string s = absq.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = neg ? "-" : "";
    out += s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    return out;
}

double to_double(const Rational& r) { return r.get_d(); }

Rational rational_floor(const Rational& r) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return Rational(f);
}

QVec3 vec3_add(const QVec3& a, const QVec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
QVec3 vec3_sub(const QVec3& a, const QVec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
QVec3 vec3_scale(const Rational& s, const QVec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
bool vec3_is_zero(const QVec3& a) { return is_zero(a[0]) && is_zero(a[1]) && is_zero(a[2]); }

std::string vec3_to_string(const QVec3& a) {
    return "(" + to_string(a[0]) + ", " + to_string(a[1]) + ", " + to_string(a[2]) + ")";
}
std::string vec2_to_string(const QVec2& a) {
    return "(" + to_string(a[0]) + ", " + to_string(a[1]) + ")";
}

} // namespace fourstate
