#ifndef KSTAB_POLYNOMIAL_HPP
#define KSTAB_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

// Dense univariate polynomial over Rational. coeff(i) is the coefficient
// of x^i. Trailing zero coefficients are normalized away; the zero
// polynomial has an empty coefficient list and degree() == nullopt.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(int degree, const Rational& coeff);

    // nullopt is the degree of the zero polynomial
    std::optional<int> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const; // requires a nonzero polynomial

    Rational evaluate(const Rational& x) const;
    Polynomial derivative() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Rational& s);
    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }
    friend Polynomial operator/(const Polynomial& a, const Rational& s);

    // Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // "4*k^2 - 1" style rendering in descending powers
    std::string str(const std::string& var = "k") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

} // namespace kstab

#endif
