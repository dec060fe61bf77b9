#include "kstab/weight_system.hpp"

#include <stdexcept>

namespace kstab {

std::int64_t action_weight(const WeightBlock& block, int action) {
    if (action == 0) return block.alpha_weight;
    const std::size_t i = static_cast<std::size_t>(action - 1);
    if (action < 0 || i >= block.torus_weights.size())
        throw std::out_of_range("action index out of range");
    return block.torus_weights[i];
}

WeightSystem shift_action(const WeightSystem& ws, int action, std::int64_t lambda) {
    if (action < 0 || action >= ws.action_count())
        throw std::out_of_range("action index out of range");
    WeightSystem shifted = ws;
    auto inner = ws.blocks_at;
    shifted.blocks_at = [inner, action, lambda](std::int64_t k) {
        std::vector<WeightBlock> blocks = inner(k);
        for (WeightBlock& b : blocks) {
            if (action == 0) {
                b.alpha_weight += lambda * k;
            } else {
                b.torus_weights[static_cast<std::size_t>(action - 1)] += lambda * k;
            }
        }
        return blocks;
    };
    return shifted;
}

} // namespace kstab
