// Width bookkeeping for the hybrid recursion: which widths occur at which
// split depth, and where the recursion hands over to schoolbook leaves.
// Every split takes the low ceil(n/2) bits and the high floor(n/2) bits, so
// an odd width yields a left half one wider than the right.

#pragma once

#include <algorithm>
#include <vector>

#include "gf2mul/errors.hpp"

namespace gf2mul {

struct SplitRecord {
    std::size_t width = 0;
    std::size_t left = 0;   // ceil(width/2), the low half
    std::size_t right = 0;  // floor(width/2), the high half
};

struct SplitPlan {
    std::size_t root = 0;
    std::size_t threshold = 0;
    // levels[d] holds one record per distinct width split at depth d,
    // widest first. Duplicated widths within a level are recorded once.
    std::vector<std::vector<SplitRecord>> levels;
    // Distinct leaf widths across the whole tree, widest first.
    std::vector<std::size_t> leaf_widths;

    // Follow the left (ceil) child from the root down to a leaf.
    std::vector<std::size_t> ceil_chain() const {
        std::vector<std::size_t> chain{root};
        std::size_t w = root;
        while (w > threshold) {
            w = (w + 1) / 2;
            chain.push_back(w);
        }
        return chain;
    }

    // Distinct widths appearing at the given depth (depth 0 = the root).
    std::vector<std::size_t> widths_at(std::size_t depth) const {
        std::vector<std::size_t> out;
        if (depth == 0) {
            out.push_back(root);
            return out;
        }
        if (depth <= levels.size()) {
            for (const auto& rec : levels[depth - 1]) {
                out.push_back(rec.left);
                out.push_back(rec.right);
            }
            std::sort(out.begin(), out.end(), std::greater<>{});
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        return out;
    }
};

inline SplitPlan split_sequence(std::size_t m, std::size_t threshold) {
    if (threshold < 2)
        throw invalid_threshold("split threshold must be >= 2, got " +
                                std::to_string(threshold));
    if (m == 0) throw operand_too_large("split_sequence: width must be >= 1");

    SplitPlan plan;
    plan.root = m;
    plan.threshold = threshold;

    std::vector<std::size_t> current;
    if (m > threshold) current.push_back(m);
    else plan.leaf_widths.push_back(m);

    while (!current.empty()) {
        std::vector<SplitRecord> level;
        std::vector<std::size_t> next;
        for (std::size_t w : current) {
            SplitRecord rec{w, (w + 1) / 2, w / 2};
            level.push_back(rec);
            for (std::size_t child : {rec.left, rec.right}) {
                auto& dest = child > threshold ? next : plan.leaf_widths;
                dest.push_back(child);
            }
        }
        auto tidy = [](std::vector<std::size_t>& v) {
            std::sort(v.begin(), v.end(), std::greater<>{});
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        tidy(next);
        plan.levels.push_back(std::move(level));
        current = std::move(next);
    }

    std::sort(plan.leaf_widths.begin(), plan.leaf_widths.end(), std::greater<>{});
    plan.leaf_widths.erase(
        std::unique(plan.leaf_widths.begin(), plan.leaf_widths.end()),
        plan.leaf_widths.end());
    return plan;
}

}  // namespace gf2mul
