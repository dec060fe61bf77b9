#ifndef KSTAB_VERIFY_HPP
#define KSTAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kstab/rational.hpp"
#include "kstab/ruled_surface.hpp"

namespace kstab {

// Deterministic 64-bit generator (splitmix64). The verification suites
// must produce identical reports for identical seeds on every platform,
// so no std:: engine or distribution is used.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n); // uniform in [0, n)
    std::int64_t range(std::int64_t lo, std::int64_t hi); // uniform in [lo, hi]

private:
    std::uint64_t state_;
};

// Random genus-2 degree-1 configuration with 0 < c < m and both
// denominators at most max_denominator.
RuledSurfaceConfig random_surface_config(SplitMix64& rng, std::int64_t max_denominator = 12);

struct PropertyResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string first_failure; // parameters of the first failing trial
};

// Seeded end-to-end property checks of the whole pipeline, all exact:
// fitted expansions and relative Futaki against the closed forms, lift
// shift invariance, Cauchy-Schwarz, vanishing on the torus, held-out
// residuals, sign coherence with the stability quadratic, extremal
// proportionality and the projection identity.
std::vector<PropertyResult> run_property_suite(int trials, std::uint64_t seed);

bool all_passed(const std::vector<PropertyResult>& results);

} // namespace kstab

#endif
