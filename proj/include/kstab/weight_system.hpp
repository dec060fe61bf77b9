#ifndef KSTAB_WEIGHT_SYSTEM_HPP
#define KSTAB_WEIGHT_SYSTEM_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace kstab {

// One isotypic block of the section space of degree k: the configuration
// action acts with alpha_weight, the i-th torus generator with
// torus_weights[i], on a subspace of the given dimension.
struct WeightBlock {
    std::int64_t alpha_weight = 0;
    std::vector<std::int64_t> torus_weights;
    std::int64_t multiplicity = 1;
};

// A test-configuration presented as weight data: for every admissible k
// (positive multiples of stride, at least k_min) a finite block list on
// the degree-k section space. blocks_at must be a pure function of k.
struct WeightSystem {
    int dimension = 0;  // dimension n of the polarised scheme
    int torus_rank = 0; // number of torus generators r
    std::int64_t stride = 1;
    std::int64_t k_min = 1;
    std::function<std::vector<WeightBlock>(std::int64_t)> blocks_at;

    // action 0 is the configuration action, actions 1..r the torus
    int action_count() const { return torus_rank + 1; }
    bool admissible(std::int64_t k) const { return k >= k_min && k % stride == 0; }
};

std::int64_t action_weight(const WeightBlock& block, int action);

// Same system with action's weights replaced by w + lambda*k, i.e. a
// different lift of that action to the line bundle.
WeightSystem shift_action(const WeightSystem& ws, int action, std::int64_t lambda);

} // namespace kstab

#endif
