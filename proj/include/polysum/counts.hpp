#pragma once

#include "polysum/exact.hpp"

#include <vector>

namespace polysum {

// Integer sequence f_{lowest}, ..., f_{lowest+size-1}; entries outside are 0.
struct CountVector {
    int delta = 0;    // dimension of the underlying complex
    int lowest = -1;  // -1 for f-vectors
    std::vector<ExactInteger> values;

    CountVector() = default;
    CountVector(int delta_, int lowest_, std::vector<ExactInteger> v)
        : delta(delta_), lowest(lowest_), values(std::move(v)) {}

    // f-vector f_{-1..delta} filled with zeros.
    static CountVector zeros(int delta) {
        return CountVector(delta, -1, std::vector<ExactInteger>(delta + 2, 0));
    }

    ExactInteger at(int k) const {
        int i = k - lowest;
        if (i < 0 || i >= static_cast<int>(values.size())) return 0;
        return values[i];
    }
    void set(int k, const ExactInteger& v) { values.at(k - lowest) = v; }
    int highest() const { return lowest + static_cast<int>(values.size()) - 1; }

    bool operator==(const CountVector& o) const = default;
};

// h_0..h_{delta+1}, kept rational so a broken pipeline shows up as a fraction.
struct HVector {
    int delta = 0;
    std::vector<ExactScalar> values;

    ExactScalar at(int k) const {
        if (k < 0 || k >= static_cast<int>(values.size())) return 0;
        return values[k];
    }
    bool integral() const {
        for (const auto& v : values)
            if (v.get_den() != 1) return false;
        return true;
    }
    bool operator==(const HVector& o) const = default;
};

// g^{(m)}_k for k = 0..values.size()-1.
struct GVector {
    int order = 0;
    std::vector<ExactScalar> values;

    ExactScalar at(int k) const {
        if (k < 0 || k >= static_cast<int>(values.size())) return 0;
        return values[k];
    }
    bool operator==(const GVector& o) const = default;
};

}  // namespace polysum
