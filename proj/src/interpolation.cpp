#include "kstab/interpolation.hpp"

#include <stdexcept>
#include <string>

namespace kstab {

SampleSeries::SampleSeries(std::vector<SamplePoint> points) {
    for (auto& p : points) push(p.k, std::move(p.value));
}

void SampleSeries::push(std::int64_t k, Rational value) {
    if (k < 1) throw std::invalid_argument("sample position must be positive");
    if (!points_.empty() && k <= points_.back().k)
        throw std::invalid_argument("sample positions must be strictly increasing");
    points_.push_back({k, std::move(value)});
}

Polynomial interpolate(const SampleSeries& samples, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    const std::size_t need = static_cast<std::size_t>(max_degree) + 1;
    if (samples.size() < need) {
        throw insufficient_samples("interpolate: need " + std::to_string(need) +
                                   " samples for degree " + std::to_string(max_degree) +
                                   ", got " + std::to_string(samples.size()));
    }

    const std::size_t n = samples.size();
    std::vector<Rational> x(n), dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = Rational(samples[i].k);
        dd[i] = samples[i].value;
    }
    // dd[i] becomes the divided difference over samples 0..i
    for (std::size_t order = 1; order < n; ++order) {
        for (std::size_t i = n; i-- > order;) {
            dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - order]);
        }
    }
    // every Newton coefficient past max_degree must vanish, which is
    // exactly the statement that the extra samples lie on the fit
    for (std::size_t i = need; i < n; ++i) {
        if (!dd[i].is_zero()) {
            throw inconsistent_samples(
                "interpolate: sample at k=" + std::to_string(samples[i].k) +
                " deviates from the degree-" + std::to_string(max_degree) + " fit");
        }
    }

    Polynomial p = Polynomial::constant(dd[need - 1]);
    for (std::size_t i = need - 1; i-- > 0;) {
        p = p * Polynomial{-x[i], Rational(1)} + Polynomial::constant(dd[i]);
    }
    return p;
}

Rational asymptotic_quotient_coefficient(const Polynomial& numer, const Polynomial& denom,
                                         int order) {
    if (denom.is_zero()) throw division_by_zero("asymptotic quotient with zero denominator");
    if (numer.is_zero()) return Rational(0);
    const int top = *numer.degree() - *denom.degree();
    if (order > top) {
        throw order_out_of_range("asymptotic order " + std::to_string(order) +
                                 " exceeds degree difference " + std::to_string(top));
    }
    // shift numer by x^s so every quotient exponent stays nonnegative
    const int shift = order < 0 ? -order : 0;
    Polynomial rem = shift > 0 ? Polynomial::monomial(shift, Rational(1)) * numer : numer;
    const int dd = *denom.degree();
    Rational e;
    for (int j = top + shift; j >= order + shift; --j) {
        e = rem.coeff(j + dd) / denom.leading();
        rem -= Polynomial::monomial(j, e) * denom;
    }
    return e;
}

} // namespace kstab
