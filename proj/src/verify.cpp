#include "kstab/verify.hpp"

#include <stdexcept>

#include "kstab/invariants.hpp"

namespace kstab {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
}

std::int64_t SplitMix64::range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

RuledSurfaceConfig random_surface_config(SplitMix64& rng, std::int64_t max_denominator) {
    for (;;) {
        const std::int64_t dm = rng.range(1, max_denominator);
        const std::int64_t nm = rng.range(1, 4 * dm); // m in (0, 4]
        const Rational m(nm, dm);
        const std::int64_t dc = rng.range(1, max_denominator);
        // c = nc/dc < m means nc < nm*dc/dm
        const std::int64_t nc_max = (nm * dc - 1) / dm;
        if (nc_max < 1) continue;
        const Rational c(rng.range(1, nc_max), dc);
        RuledSurfaceConfig cfg;
        cfg.genus = 2;
        cfg.degree = 1;
        cfg.m = m;
        cfg.c = c;
        return cfg;
    }
}

namespace {

struct Recorder {
    std::vector<PropertyResult>& results;
    std::size_t index;
    void check(bool ok, const std::string& params) {
        PropertyResult& r = results[index];
        ++r.trials;
        if (!ok) {
            ++r.failures;
            if (r.first_failure.empty()) r.first_failure = params;
        }
    }
};

} // namespace

std::vector<PropertyResult> run_property_suite(int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");

    std::vector<PropertyResult> results{
        {"pipeline_matches_closed_form", 0, 0, ""},
        {"expansions_match_closed_form", 0, 0, ""},
        {"lift_shift_invariance", 0, 0, ""},
        {"cauchy_schwarz", 0, 0, ""},
        {"torus_relative_futaki_zero", 0, 0, ""},
        {"holdout_residuals", 0, 0, ""},
        {"sign_coherence", 0, 0, ""},
        {"extremal_proportionality", 0, 0, ""},
        {"projection_identity", 0, 0, ""},
    };

    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const RuledSurfaceConfig cfg = random_surface_config(rng);
        const std::string params = "m=" + cfg.m.str() + " c=" + cfg.c.str();
        const WeightSystem ws = build_weight_system(cfg);
        const HilbertData hd = fit_hilbert_data(ws);
        const std::vector<int> torus{1};

        const Rational rel = relative_futaki(hd, 0, torus);
        Recorder{results, 0}.check(rel == closed_form_relative_futaki(cfg), params);

        ExpansionLeads fitted;
        fitted.dim_k2 = hd.dim.coeff(2);
        fitted.dim_k1 = hd.dim.coeff(1);
        fitted.alpha_k3 = hd.weight[0].coeff(3);
        fitted.alpha_k2 = hd.weight[0].coeff(2);
        fitted.beta_k3 = hd.weight[1].coeff(3);
        fitted.beta_k2 = hd.weight[1].coeff(2);
        fitted.alpha_beta_k4 = hd.pair_trace[0][1].coeff(4);
        fitted.beta_beta_k4 = hd.pair_trace[1][1].coeff(4);
        Recorder{results, 1}.check(fitted == closed_form_expansions(cfg), params);

        {
            const std::int64_t lambda = rng.range(-3, 3);
            const int action = static_cast<int>(rng.range(0, 1));
            const HilbertData hd2 = fit_hilbert_data(shift_action(ws, action, lambda));
            bool ok = true;
            for (int i = 0; i < hd.action_count() && ok; ++i) {
                ok = futaki_invariant(hd, i) == futaki_invariant(hd2, i);
                for (int j = i; j < hd.action_count() && ok; ++j) {
                    ok = inner_product(hd, i, j) == inner_product(hd2, i, j);
                }
            }
            Recorder{results, 2}.check(
                ok, params + " lambda=" + std::to_string(lambda) +
                        " action=" + std::to_string(action));
        }

        {
            bool ok = true;
            for (int i = 0; i < hd.action_count() && ok; ++i) {
                for (int j = 0; j < hd.action_count() && ok; ++j) {
                    const Rational ij = inner_product(hd, i, j);
                    ok = ij * ij <= inner_product(hd, i, i) * inner_product(hd, j, j);
                }
            }
            Recorder{results, 3}.check(ok, params);
        }

        Recorder{results, 4}.check(relative_futaki(hd, 1, torus).is_zero(), params);

        {
            // two admissible k beyond the fitting window
            bool ok = true;
            const std::int64_t first_holdout =
                ws.k_min + static_cast<std::int64_t>(hd.dimension + 5) * ws.stride;
            for (std::int64_t k = first_holdout; ok && k <= first_holdout + ws.stride;
                 k += ws.stride) {
                const TraceTable tt = tabulate(ws, k);
                const Rational kk(k);
                ok = hd.dim.evaluate(kk) == tt.dim;
                for (int i = 0; i < hd.action_count() && ok; ++i) {
                    ok = hd.weight[static_cast<std::size_t>(i)].evaluate(kk) ==
                         tt.trace[static_cast<std::size_t>(i)];
                    for (int j = i; j < hd.action_count() && ok; ++j) {
                        ok = hd.pair_trace[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                 .evaluate(kk) ==
                             tt.pair_trace[static_cast<std::size_t>(i)]
                                          [static_cast<std::size_t>(j)];
                    }
                }
            }
            Recorder{results, 5}.check(ok, params);
        }

        Recorder{results, 6}.check(
            rel.sign() == stability_quadratic(cfg.m).evaluate(cfg.c).sign(), params);

        {
            const Rational bb = inner_product(hd, 1, 1);
            const std::vector<Rational> chi =
                extremal_coefficients({{bb}}, {futaki_invariant(hd, 1)});
            Recorder{results, 7}.check(chi.size() == 1 &&
                                           chi[0] == futaki_invariant(hd, 1) / bb,
                                       params);
        }

        {
            const std::vector<Rational> t = orthogonal_projection(hd, 0, torus);
            Rational via_projection = futaki_invariant(hd, 0);
            for (std::size_t j = 0; j < torus.size(); ++j) {
                via_projection -= t[j] * futaki_invariant(hd, torus[j]);
            }
            Recorder{results, 8}.check(via_projection == rel, params);
        }
    }
    return results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    for (const PropertyResult& r : results) {
        if (r.failures != 0) return false;
    }
    return true;
}

} // namespace kstab
