#include "kstab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace kstab {

Rational::Rational(long long n) {
    // mpz_import reads an unsigned magnitude
    unsigned long long mag = n < 0 ? -static_cast<unsigned long long>(n)
                                   : static_cast<unsigned long long>(n);
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(mag), 0, 0, &mag);
    if (n < 0) z = -z;
    v_ = mpq_class(z);
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    mpq_set_num(v_.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(v_.get_mpq_t(), den.get_mpz_t());
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    const auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("not an exact rational: \"" + s + "\"");
    };
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw bad();
    std::size_t num_end = i;
    mpz_class den = 1;
    if (i < s.size()) {
        if (s[i] != '/') throw bad();
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) throw bad();
        den = mpz_class(s.substr(den_begin), 10);
        if (den == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
    }
    mpz_class num(s.substr(num_begin, num_end - num_begin), 10);
    if (s[0] == '-') num = -num;
    return Rational(num, den);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero");
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational Rational::pow(unsigned e) const {
    Rational r;
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_set_num(r.v_.get_mpq_t(), n.get_mpz_t());
    mpq_set_den(r.v_.get_mpq_t(), d.get_mpz_t());
    // num/den already coprime, so no canonicalization is needed; do it
    // anyway so the invariant never depends on that argument
    r.v_.canonicalize();
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

mpz_class pow10(unsigned long e) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, e);
    return t;
}

} // namespace

std::string Rational::decimal(int significant_digits) const {
    if (significant_digits < 1)
        throw std::invalid_argument("decimal() needs at least one digit");
    if (is_zero()) return "0";
    const std::size_t sig = static_cast<std::size_t>(significant_digits);

    mpz_class p = ::abs(v_.get_num());
    mpz_class q = v_.get_den();
    const long pd = static_cast<long>(p.get_str().size());
    const long qd = static_cast<long>(q.get_str().size());
    // scale so the floor quotient carries at least sig+1 digits
    long scale = static_cast<long>(sig) + qd - pd + 2;
    if (scale < 0) scale = 0;
    mpz_class quo = (p * pow10(static_cast<unsigned long>(scale))) / q;
    std::string digits = quo.get_str();
    long exponent = static_cast<long>(digits.size()) - 1 - scale;

    std::string keep = digits.substr(0, sig);
    if (digits.size() > sig && digits[sig] >= '5') {
        // round half away from zero
        std::size_t i = keep.size();
        while (i > 0) {
            --i;
            if (keep[i] != '9') {
                ++keep[i];
                break;
            }
            keep[i] = '0';
            if (i == 0) {
                keep.insert(keep.begin(), '1');
                keep.pop_back();
                ++exponent;
            }
        }
    }

    std::string out;
    if (sign() < 0) out += '-';
    if (exponent >= -4 && exponent <= 14) {
        if (exponent >= 0) {
            const std::size_t int_digits = static_cast<std::size_t>(exponent) + 1;
            if (int_digits >= keep.size()) {
                out += keep;
                out += std::string(int_digits - keep.size(), '0');
            } else {
                out += keep.substr(0, int_digits);
                out += '.';
                out += keep.substr(int_digits);
            }
        } else {
            out += "0.";
            out += std::string(static_cast<std::size_t>(-exponent) - 1, '0');
            out += keep;
        }
    } else {
        out += keep.substr(0, 1);
        out += '.';
        out += keep.substr(1);
        out += 'e';
        out += exponent < 0 ? '-' : '+';
        out += std::to_string(exponent < 0 ? -exponent : exponent);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace kstab
