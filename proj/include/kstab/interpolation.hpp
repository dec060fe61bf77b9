#ifndef KSTAB_INTERPOLATION_HPP
#define KSTAB_INTERPOLATION_HPP

#include <cstdint>
#include <vector>

#include "kstab/polynomial.hpp"
#include "kstab/rational.hpp"

namespace kstab {

struct SamplePoint {
    std::int64_t k = 0;
    Rational value;
};

// Exact samples of a sequence at strictly increasing positive positions.
class SampleSeries {
public:
    SampleSeries() = default;
    explicit SampleSeries(std::vector<SamplePoint> points);

    void push(std::int64_t k, Rational value);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const SamplePoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<SamplePoint>& points() const { return points_; }

private:
    std::vector<SamplePoint> points_;
};

// Unique polynomial of degree <= max_degree through the first
// max_degree + 1 samples, via Newton divided differences. Every further
// sample must lie exactly on it; a deviation throws inconsistent_samples,
// which usually means the sampling window starts too early or the degree
// bound is wrong.
Polynomial interpolate(const SampleSeries& samples, int max_degree);

// Coefficient of k^order in the expansion of numer/denom in descending
// powers of k, computed by exact long division. order may be negative.
// Throws order_out_of_range when order exceeds deg(numer) - deg(denom).
Rational asymptotic_quotient_coefficient(const Polynomial& numer, const Polynomial& denom,
                                         int order);

} // namespace kstab

#endif
