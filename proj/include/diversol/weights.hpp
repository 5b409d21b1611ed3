#ifndef DIVERSOL_WEIGHTS_HPP
#define DIVERSOL_WEIGHTS_HPP

#include <cstdint>
#include <vector>

#include "diversol/errors.hpp"
#include "diversol/sets.hpp"

namespace diversol {

using Weight = std::int64_t;

// Positive integral weights, indexed by element id. Views keep the original
// id space, so a weight function built for a matroid also serves its minors.
class WeightFunction {
public:
    WeightFunction() = default;

    explicit WeightFunction(std::vector<Weight> w) : w_(std::move(w)) {
        for (Weight x : w_)
            if (x < 1) throw InputError("weights must be positive integers");
    }

    static WeightFunction ones(int n) {
        return WeightFunction(std::vector<Weight>(static_cast<std::size_t>(n), 1));
    }

    int size() const { return static_cast<int>(w_.size()); }

    Weight of(int e) const {
        if (e < 0 || e >= size()) throw InputError("weight lookup out of range");
        return w_[static_cast<std::size_t>(e)];
    }

    Weight of(const ElemSet& s) const {
        Weight total = 0;
        for (int e : s) total += of(e);
        return total;
    }

    // min(w(e), d) elementwise; requires d >= 1 so positivity is preserved.
    WeightFunction truncated(Weight d) const {
        if (d < 1) throw ContractError("weight truncation needs d >= 1");
        std::vector<Weight> t(w_);
        for (Weight& x : t) x = std::min(x, d);
        return WeightFunction(std::move(t));
    }

    const std::vector<Weight>& values() const { return w_; }

private:
    std::vector<Weight> w_;
};

}  // namespace diversol

#endif
