#include "kstab/root_isolation.hpp"

#include <algorithm>
#include <stdexcept>

namespace kstab {

namespace {

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = Polynomial::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Polynomial linear_root_factor(const Rational& r) {
    return Polynomial{-r, Rational(1)};
}

struct Segment {
    Rational a, b;
    int va, vb;
};

} // namespace

Polynomial square_free_part(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free part of zero polynomial");
    if (*p.degree() == 0) return Polynomial::constant(Rational(1));
    const Polynomial g = poly_gcd(p, p.derivative());
    Polynomial q = Polynomial::divmod(p, g).first;
    return q / q.leading();
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
    std::vector<Polynomial> chain{p};
    if (*p.degree() == 0) return chain;
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && *chain.back().degree() > 0) {
        Polynomial r = Polynomial::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const Polynomial& p : chain) {
        const int s = p.evaluate(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo,
                                             const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("root isolation needs lo < hi");

    Polynomial q = square_free_part(p);
    std::vector<RootInterval> exact;

    auto deflate = [&q](const Rational& r) {
        q = Polynomial::divmod(q, linear_root_factor(r)).first;
    };

    // half-open interval: a root exactly at hi counts, one at lo does not
    if (*q.degree() >= 1 && q.evaluate(hi).is_zero()) {
        exact.push_back({hi, hi});
        deflate(hi);
    }
    if (*q.degree() >= 1 && q.evaluate(lo).is_zero()) deflate(lo);

    // bisect on Sturm counts; restart from scratch whenever a probe hits
    // a root exactly, with that root divided out
    std::vector<Segment> opens;
    bool retry = true;
    while (retry) {
        retry = false;
        opens.clear();
        if (*q.degree() < 1) break;
        if (*q.degree() == 1) {
            const Rational r = -q.coeff(0) / q.coeff(1);
            if (lo < r && r < hi) {
                exact.push_back({r, r});
                deflate(r);
                retry = true;
            }
            continue;
        }
        const std::vector<Polynomial> chain = sturm_chain(q);
        std::vector<Segment> stack{{lo, hi, sign_variations(chain, lo), sign_variations(chain, hi)}};
        while (!stack.empty()) {
            Segment s = stack.back();
            stack.pop_back();
            const int count = s.va - s.vb;
            if (count <= 0) continue;
            if (count == 1) {
                opens.push_back(s);
                continue;
            }
            const Rational mid = (s.a + s.b) / Rational(2);
            if (q.evaluate(mid).is_zero()) {
                exact.push_back({mid, mid});
                deflate(mid);
                retry = true;
                break;
            }
            const int vm = sign_variations(chain, mid);
            stack.push_back({s.a, mid, s.va, vm});
            stack.push_back({mid, s.b, vm, s.vb});
        }
    }

    // shrink open intervals until they avoid the exact roots already
    // reported, so the result stays pairwise disjoint
    std::vector<RootInterval> out = exact;
    for (const Segment& s : opens) {
        Rational a = s.a, b = s.b;
        for (bool shrunk = true; shrunk;) {
            shrunk = false;
            for (const RootInterval& e : exact) {
                while (a < e.lo && e.lo < b) {
                    const Rational mid = (a + b) / Rational(2);
                    const int sm = q.evaluate(mid).sign();
                    if (sm == 0) {
                        // the lone root in (a, b) turned out rational
                        a = b = mid;
                        break;
                    }
                    if (q.evaluate(a).sign() * sm < 0) {
                        b = mid;
                    } else {
                        a = mid;
                    }
                    shrunk = true;
                }
                if (a == b) break;
            }
            if (a == b) break;
        }
        out.push_back({a, b});
    }

    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

} // namespace kstab
