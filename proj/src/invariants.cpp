#include "kstab/invariants.hpp"

#include <stdexcept>
#include <string>

namespace kstab {

TraceTable tabulate(const WeightSystem& ws, std::int64_t k) {
    if (!ws.admissible(k)) {
        throw inadmissible_k("k=" + std::to_string(k) + " is not admissible (stride " +
                             std::to_string(ws.stride) + ", k_min " + std::to_string(ws.k_min) +
                             ")");
    }
    const int a = ws.action_count();
    mpz_class dim = 0;
    std::vector<mpz_class> trace(static_cast<std::size_t>(a));
    std::vector<std::vector<mpz_class>> pair(static_cast<std::size_t>(a),
                                             std::vector<mpz_class>(static_cast<std::size_t>(a)));
    std::vector<mpz_class> w(static_cast<std::size_t>(a));
    for (const WeightBlock& block : ws.blocks_at(k)) {
        if (block.multiplicity < 1) throw error("block with nonpositive multiplicity");
        const mpz_class mult(static_cast<long>(block.multiplicity));
        dim += mult;
        for (int i = 0; i < a; ++i) {
            w[static_cast<std::size_t>(i)] = static_cast<long>(action_weight(block, i));
        }
        for (int i = 0; i < a; ++i) {
            const mpz_class mw = mult * w[static_cast<std::size_t>(i)];
            trace[static_cast<std::size_t>(i)] += mw;
            for (int j = i; j < a; ++j) {
                pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    mw * w[static_cast<std::size_t>(j)];
            }
        }
    }
    TraceTable t;
    t.dim = Rational(dim);
    t.trace.reserve(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) t.trace.emplace_back(Rational(trace[static_cast<std::size_t>(i)]));
    t.pair_trace.assign(static_cast<std::size_t>(a),
                        std::vector<Rational>(static_cast<std::size_t>(a)));
    for (int i = 0; i < a; ++i) {
        for (int j = i; j < a; ++j) {
            Rational v(pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            t.pair_trace[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            t.pair_trace[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    }
    return t;
}

HilbertData fit_hilbert_data(const WeightSystem& ws, int extra_points) {
    if (extra_points < 0) throw std::invalid_argument("extra_points must be nonnegative");
    const int n = ws.dimension;
    const int a = ws.action_count();
    const int total = (n + 2) + 1 + extra_points;

    std::vector<std::int64_t> ks(static_cast<std::size_t>(total));
    std::vector<TraceTable> tables;
    tables.reserve(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) {
        ks[static_cast<std::size_t>(i)] = ws.k_min + static_cast<std::int64_t>(i) * ws.stride;
        tables.push_back(tabulate(ws, ks[static_cast<std::size_t>(i)]));
    }

    auto series = [&](int count, auto&& value_of) {
        SampleSeries s;
        for (int i = 0; i < count; ++i) {
            s.push(ks[static_cast<std::size_t>(i)], value_of(tables[static_cast<std::size_t>(i)]));
        }
        return s;
    };

    HilbertData hd;
    hd.dimension = n;
    hd.dim = interpolate(series(n + 1 + extra_points, [](const TraceTable& t) { return t.dim; }),
                         n);
    hd.weight.resize(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) {
        hd.weight[static_cast<std::size_t>(i)] = interpolate(
            series(n + 2 + extra_points,
                   [i](const TraceTable& t) { return t.trace[static_cast<std::size_t>(i)]; }),
            n + 1);
    }
    hd.pair_trace.assign(static_cast<std::size_t>(a),
                         std::vector<Polynomial>(static_cast<std::size_t>(a)));
    for (int i = 0; i < a; ++i) {
        for (int j = i; j < a; ++j) {
            Polynomial fit = interpolate(
                series(total,
                       [i, j](const TraceTable& t) {
                           return t.pair_trace[static_cast<std::size_t>(i)]
                                              [static_cast<std::size_t>(j)];
                       }),
                n + 2);
            hd.pair_trace[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = fit;
            hd.pair_trace[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = fit;
        }
    }

    hd.dim_lead = hd.dim.coeff(n);
    hd.dim_sub = n >= 1 ? hd.dim.coeff(n - 1) : Rational(0);
    if (!(hd.dim_lead > Rational(0))) {
        throw inconsistent_samples(
            "dimension sequence is not a degree-" + std::to_string(n) +
            " polynomial with positive leading coefficient");
    }
    hd.weight_lead.resize(static_cast<std::size_t>(a));
    hd.weight_sub.resize(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) {
        hd.weight_lead[static_cast<std::size_t>(i)] =
            hd.weight[static_cast<std::size_t>(i)].coeff(n + 1);
        hd.weight_sub[static_cast<std::size_t>(i)] =
            hd.weight[static_cast<std::size_t>(i)].coeff(n);
    }
    return hd;
}

namespace {

void check_action(const HilbertData& hd, int action) {
    if (action < 0 || action >= hd.action_count())
        throw std::out_of_range("action index out of range");
}

} // namespace

Rational futaki_invariant(const HilbertData& hd, int action) {
    check_action(hd, action);
    const std::size_t i = static_cast<std::size_t>(action);
    return hd.weight_lead[i] * hd.dim_sub - hd.weight_sub[i] * hd.dim_lead;
}

Rational inner_product(const HilbertData& hd, int a, int b) {
    check_action(hd, a);
    check_action(hd, b);
    const std::size_t i = static_cast<std::size_t>(a);
    const std::size_t j = static_cast<std::size_t>(b);
    const Polynomial numer = hd.pair_trace[i][j] * hd.dim - hd.weight[i] * hd.weight[j];
    return asymptotic_quotient_coefficient(numer, hd.dim, hd.dimension + 2);
}

Matrix gram_matrix(const HilbertData& hd, const std::vector<int>& actions) {
    const std::size_t n = actions.size();
    Matrix g(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            g[i][j] = inner_product(hd, actions[i], actions[j]);
            g[j][i] = g[i][j];
        }
    }
    return g;
}

std::vector<Rational> solve_positive_definite(Matrix gram, std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    if (gram.size() != n) throw std::invalid_argument("gram/rhs size mismatch");
    for (const auto& row : gram) {
        if (row.size() != n) throw std::invalid_argument("gram matrix is not square");
    }
    // elimination without row exchanges: pivot_i = M_i / M_{i-1}, so the
    // pivots are positive exactly when all leading principal minors are
    for (std::size_t i = 0; i < n; ++i) {
        if (!(gram[i][i] > Rational(0))) {
            throw singular_gram("leading principal minor " + std::to_string(i + 1) +
                                " is not positive");
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            if (gram[r][i].is_zero()) continue;
            const Rational f = gram[r][i] / gram[i][i];
            for (std::size_t c = i; c < n; ++c) gram[r][c] -= f * gram[i][c];
            rhs[r] -= f * rhs[i];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= gram[i][c] * x[c];
        x[i] = acc / gram[i][i];
    }
    return x;
}

std::vector<Rational> extremal_coefficients(const Matrix& torus_gram,
                                            const std::vector<Rational>& torus_futaki) {
    return solve_positive_definite(torus_gram, torus_futaki);
}

Rational relative_futaki(const HilbertData& hd, int alpha, const std::vector<int>& torus) {
    check_action(hd, alpha);
    const Matrix g = gram_matrix(hd, torus);
    std::vector<Rational> f(torus.size());
    for (std::size_t j = 0; j < torus.size(); ++j) f[j] = futaki_invariant(hd, torus[j]);
    const std::vector<Rational> x = extremal_coefficients(g, f);
    Rational result = futaki_invariant(hd, alpha);
    for (std::size_t j = 0; j < torus.size(); ++j) {
        result -= x[j] * inner_product(hd, alpha, torus[j]);
    }
    return result;
}

std::vector<Rational> orthogonal_projection(const HilbertData& hd, int alpha,
                                            const std::vector<int>& torus) {
    check_action(hd, alpha);
    const Matrix g = gram_matrix(hd, torus);
    std::vector<Rational> rhs(torus.size());
    for (std::size_t j = 0; j < torus.size(); ++j) rhs[j] = inner_product(hd, alpha, torus[j]);
    return solve_positive_definite(g, rhs);
}

InvariantReport analyze(const HilbertData& hd, int alpha, const std::vector<int>& torus) {
    check_action(hd, alpha);
    const int a = hd.action_count();
    InvariantReport rep;
    rep.futaki.resize(static_cast<std::size_t>(a));
    std::vector<int> all(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) {
        rep.futaki[static_cast<std::size_t>(i)] = futaki_invariant(hd, i);
        all[static_cast<std::size_t>(i)] = i;
    }
    rep.gram = gram_matrix(hd, all);

    std::vector<Rational> torus_futaki(torus.size());
    for (std::size_t j = 0; j < torus.size(); ++j) {
        torus_futaki[j] = rep.futaki[static_cast<std::size_t>(torus[j])];
    }
    rep.chi = extremal_coefficients(gram_matrix(hd, torus), torus_futaki);
    rep.chi_norm_sq = Rational(0);
    rep.relative = rep.futaki[static_cast<std::size_t>(alpha)];
    for (std::size_t j = 0; j < torus.size(); ++j) {
        rep.chi_norm_sq += rep.chi[j] * torus_futaki[j];
        rep.relative -= rep.chi[j] * rep.gram[static_cast<std::size_t>(alpha)]
                                             [static_cast<std::size_t>(torus[j])];
    }
    return rep;
}

} // namespace kstab
