#include "kstab/ruled_surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kstab {

void RuledSurfaceConfig::validate() const {
    if (genus < 2) throw invalid_config("genus must be at least 2");
    if (degree < 1) throw invalid_config("degree must be at least 1");
    if (!(m > Rational(0))) throw invalid_config("polarisation parameter requires m > 0");
    if (!(Rational(0) < c && c < m))
        throw invalid_config("blow-up parameter requires 0 < c < m, got c = " + c.str() +
                             ", m = " + m.str());
}

WeightSystem build_weight_system(const RuledSurfaceConfig& cfg) {
    cfg.validate();
    const mpz_class stride_z = lcm(cfg.m.den(), cfg.c.den());
    if (!stride_z.fits_slong_p() || stride_z.get_si() > 1000000)
        throw invalid_config("parameter denominators too large");
    const std::int64_t stride = stride_z.get_si();

    // multiplicities k + l*d + 1 - g are valid once k + l*d > 2g - 2,
    // which for d >= 1 holds at every l as soon as k >= 2g - 1
    const std::int64_t lower = 2 * static_cast<std::int64_t>(cfg.genus) - 1;
    const std::int64_t k_min = ((lower + stride - 1) / stride) * stride;

    WeightSystem ws;
    ws.dimension = 2;
    ws.torus_rank = 1;
    ws.stride = stride;
    ws.k_min = k_min;
    ws.blocks_at = [cfg](std::int64_t k) {
        const auto exact_multiple = [k](const Rational& r) {
            const mpz_class scaled = r.num() * k;
            if (scaled % r.den() != 0)
                throw inadmissible_k("k=" + std::to_string(k) +
                                     " does not clear the parameter denominators");
            const mpz_class v = scaled / r.den();
            if (!v.fits_slong_p()) throw invalid_config("weight range too large");
            return static_cast<std::int64_t>(v.get_si());
        };
        const std::int64_t mk = exact_multiple(cfg.m);
        const std::int64_t ck = exact_multiple(cfg.c);
        std::vector<WeightBlock> blocks;
        blocks.reserve(static_cast<std::size_t>(mk + 1));
        for (std::int64_t l = 0; l <= mk; ++l) {
            WeightBlock b;
            b.multiplicity = k + l * cfg.degree + 1 - cfg.genus;
            b.alpha_weight = -(std::max<std::int64_t>(ck - l, 0));
            b.torus_weights = {l};
            blocks.push_back(std::move(b));
        }
        return blocks;
    };
    return ws;
}

namespace {

void require_genus2_degree1(const RuledSurfaceConfig& cfg) {
    if (cfg.genus != 2 || cfg.degree != 1) {
        throw unsupported_parameters("closed forms exist only for genus 2, degree 1; got genus " +
                                     std::to_string(cfg.genus) + ", degree " +
                                     std::to_string(cfg.degree));
    }
}

} // namespace

ExpansionLeads closed_form_expansions(const Rational& m, const Rational& c) {
    ExpansionLeads e;
    e.dim_k2 = (m * m + Rational(2) * m) / Rational(2);
    e.dim_k1 = (Rational(2) - m) / Rational(2);
    e.alpha_k3 = -(c.pow(3) + Rational(3) * c * c) / Rational(6);
    e.alpha_k2 = (c * c - c) / Rational(2);
    e.beta_k3 = (Rational(2) * m.pow(3) + Rational(3) * m * m) / Rational(6);
    e.beta_k2 = m / Rational(2);
    e.alpha_beta_k4 = -(c.pow(4) + Rational(2) * c.pow(3)) / Rational(12);
    e.beta_beta_k4 = (Rational(3) * m.pow(4) + Rational(4) * m.pow(3)) / Rational(12);
    return e;
}

ExpansionLeads closed_form_expansions(const RuledSurfaceConfig& cfg) {
    require_genus2_degree1(cfg);
    return closed_form_expansions(cfg.m, cfg.c);
}

Rational closed_form_relative_futaki(const Rational& m, const Rational& c) {
    if (!(Rational(0) < c && c < m))
        throw invalid_config("closed form requires 0 < c < m");
    const Rational prefactor =
        c * (m - c) * (m + Rational(2)) / (Rational(4) * (m * m + Rational(6) * m + Rational(6)));
    return prefactor * stability_quadratic(m).evaluate(c);
}

Rational closed_form_relative_futaki(const RuledSurfaceConfig& cfg) {
    require_genus2_degree1(cfg);
    return closed_form_relative_futaki(cfg.m, cfg.c);
}

std::array<Polynomial, 3> stability_quadratic_coeffs() {
    // (2m+2)c^2 - (m^2-4m-6)c + (m^2+6m+6), coefficients in m
    return {Polynomial{Rational(6), Rational(6), Rational(1)},
            Polynomial{Rational(6), Rational(4), Rational(-1)},
            Polynomial{Rational(2), Rational(2)}};
}

Polynomial stability_quadratic(const Rational& m) {
    if (!(m > Rational(0))) throw invalid_config("stability quadratic requires m > 0");
    const auto coeffs = stability_quadratic_coeffs();
    return Polynomial{coeffs[0].evaluate(m), coeffs[1].evaluate(m), coeffs[2].evaluate(m)};
}

Polynomial stability_discriminant() {
    const auto q = stability_quadratic_coeffs();
    return q[1] * q[1] - Rational(4) * q[0] * q[2];
}

std::string to_string(StabilityVerdict::Kind kind) {
    switch (kind) {
        case StabilityVerdict::Kind::strictly_destabilized: return "strictly_destabilized";
        case StabilityVerdict::Kind::boundary_destabilized: return "boundary_destabilized";
        case StabilityVerdict::Kind::no_witness_found: return "no_witness_found";
    }
    return "unknown";
}

namespace {

StabilityVerdict classified_witness(const Rational& m, const Rational& c) {
    StabilityVerdict v;
    v.witness_c = c;
    v.value = closed_form_relative_futaki(m, c);
    v.kind = v.value->is_zero() ? StabilityVerdict::Kind::boundary_destabilized
                                : StabilityVerdict::Kind::strictly_destabilized;
    return v;
}

// Shrink a sign-change interval for q until it is narrower than eps.
RootInterval refine(const Polynomial& q, RootInterval iv, const Rational& eps) {
    if (iv.exact()) return iv;
    while (iv.hi - iv.lo > eps) {
        const Rational mid = (iv.lo + iv.hi) / Rational(2);
        const int sm = q.evaluate(mid).sign();
        if (sm == 0) return {mid, mid};
        if (q.evaluate(iv.lo).sign() * sm < 0) {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    return iv;
}

// Move the endpoints past interior integers so the interval sits inside
// one unit interval; an integer root becomes a degenerate interval.
RootInterval snap_to_unit_interval(const Polynomial& q, RootInterval iv) {
    while (!iv.exact()) {
        mpz_class floor_lo;
        mpz_fdiv_q(floor_lo.get_mpz_t(), iv.lo.num().get_mpz_t(), iv.lo.den().get_mpz_t());
        const Rational n(floor_lo + 1);
        if (!(n < iv.hi)) break;
        const int s = q.evaluate(n).sign();
        if (s == 0) return {n, n};
        if (q.evaluate(iv.lo).sign() * s < 0) {
            iv.hi = n;
        } else {
            iv.lo = n;
        }
    }
    return iv;
}

} // namespace

StabilityVerdict find_destabilizer(const Rational& m, std::int64_t denominator_bound) {
    if (!(m > Rational(0))) throw invalid_config("find_destabilizer requires m > 0");
    if (denominator_bound < 1) throw std::invalid_argument("denominator bound must be positive");

    const Polynomial quad = stability_quadratic(m);
    const std::vector<RootInterval> roots = isolate_real_roots(quad, Rational(0), m);
    if (roots.empty()) {
        // positive at c = 0 and no root up to m: positive on all of (0, m)
        StabilityVerdict v;
        v.kind = StabilityVerdict::Kind::no_witness_found;
        return v;
    }

    for (std::int64_t den = 1; den <= denominator_bound; ++den) {
        for (std::int64_t num = 1; Rational(num, den) < m; ++num) {
            if (std::gcd(num, den) != 1) continue;
            const Rational c(num, den);
            if (quad.evaluate(c) <= Rational(0)) return classified_witness(m, c);
        }
    }

    // No witness with a small denominator. A degenerate root is a rational
    // boundary witness regardless of its denominator; otherwise the
    // quadratic is negative strictly between two isolated roots and any
    // rational in the gap witnesses that.
    for (const RootInterval& r : roots) {
        if (r.exact() && Rational(0) < r.lo && r.lo < m) return classified_witness(m, r.lo);
    }
    if (roots.size() >= 2) {
        RootInterval a = roots[0];
        RootInterval b = roots[1];
        while (!(a.hi < b.lo)) {
            const Rational width = ((b.hi - a.lo) / Rational(4));
            a = refine(quad, a, width);
            b = refine(quad, b, width);
        }
        const Rational c = (a.hi + b.lo) / Rational(2);
        if (quad.evaluate(c) < Rational(0)) return classified_witness(m, c);
    }
    StabilityVerdict v;
    v.kind = StabilityVerdict::Kind::no_witness_found;
    return v;
}

std::pair<Rational, Rational> critical_parameter(const Rational& precision) {
    if (!(precision > Rational(0))) throw std::invalid_argument("precision must be positive");

    const Polynomial disc = stability_discriminant();
    // Cauchy bound on the positive roots of the discriminant
    Rational bound(1);
    for (int i = 0; i < *disc.degree(); ++i) {
        const Rational t = (disc.coeff(i) / disc.leading()).abs();
        if (t > bound) bound = t;
    }
    bound += Rational(1);

    std::vector<RootInterval> roots = isolate_real_roots(disc, Rational(0), bound);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        RootInterval iv = refine(disc, snap_to_unit_interval(disc, roots[i]), precision);
        // test point just above the candidate, but below the next root
        Rational probe = iv.hi;
        if (iv.exact()) {
            Rational step = precision;
            if (i + 1 < roots.size()) {
                const Rational gap = (roots[i + 1].lo - iv.hi) / Rational(2);
                if (gap < step) step = gap;
            }
            probe = iv.hi + step;
        }
        const Polynomial quad = stability_quadratic(probe);
        if (!isolate_real_roots(quad, Rational(0), probe).empty()) {
            return {iv.lo, iv.hi};
        }
    }
    throw error("no instability threshold located below m = " + bound.str());
}

TfEquivalenceReport tf_equivalence_check(const Rational& m) {
    if (!(m > Rational(0))) throw invalid_config("tf_equivalence_check requires m > 0");
    TfEquivalenceReport rep;
    rep.m = m;
    rep.tf_polarisation = m + Rational(1);
    rep.quadratic = stability_quadratic(m);
    rep.destabilizing_roots = isolate_real_roots(rep.quadratic, Rational(0), m);
    rep.metric_exists = rep.destabilizing_roots.empty();
    rep.variable_change = "k = m + 1, gamma = a*(1 + c)";
    return rep;
}

} // namespace kstab
