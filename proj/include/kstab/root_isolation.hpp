#ifndef KSTAB_ROOT_ISOLATION_HPP
#define KSTAB_ROOT_ISOLATION_HPP

#include <vector>

#include "kstab/polynomial.hpp"
#include "kstab/rational.hpp"

namespace kstab {

// lo == hi marks an exact rational root; otherwise the interval is open
// and contains exactly one distinct real root of the isolated polynomial.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
};

// p with repeated factors removed, made monic.
Polynomial square_free_part(const Polynomial& p);

// Sturm chain p, p', then negated euclidean remainders.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

// Sign variations of the chain evaluated at x, zeros skipped.
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

// One interval per distinct real root of p in (lo, hi], sorted and
// pairwise disjoint. Rational roots detected along the way come back as
// degenerate [r, r] intervals; the rest are open sign-change intervals.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo,
                                             const Rational& hi);

} // namespace kstab

#endif
