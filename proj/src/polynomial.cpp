#include "kstab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace kstab {

namespace {
const Rational kZero;
} // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    normalize();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
    if (degree < 0) throw std::invalid_argument("monomial with negative degree");
    std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
    cs.back() = coeff;
    return Polynomial(std::move(cs));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Polynomial::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> cs(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        cs[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = -coeffs_[i];
    return Polynomial(std::move(cs));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(cs));
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
    std::vector<Rational> cs(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] = a.coeffs_[i] * s;
    return Polynomial(std::move(cs));
}

Polynomial operator/(const Polynomial& a, const Rational& s) {
    if (s.is_zero()) throw division_by_zero("polynomial divided by zero scalar");
    return a * s.inverse();
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero polynomial");
    Polynomial rem = a;
    const int db = *b.degree();
    if (a.is_zero() || *a.degree() < db) return {Polynomial(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(*a.degree() - db) + 1);
    while (!rem.is_zero() && *rem.degree() >= db) {
        const int shift = *rem.degree() - db;
        const Rational factor = rem.leading() / b.leading();
        q[static_cast<std::size_t>(shift)] += factor;
        rem -= monomial(shift, factor) * b;
    }
    return {Polynomial(std::move(q)), rem};
}

std::string Polynomial::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = a == Rational(1);
        if (i == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace kstab
