#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bfan/boolean_function.hpp"
#include "bfan/calculus.hpp"
#include "bfan/dyadic.hpp"
#include "bfan/fourier.hpp"
#include "bfan/index_set.hpp"

namespace bfan {

/// T-influence: sum of squared coefficients over supersets of i. Exact.
/// For the empty set this is ||f||_2^2 (= 1 for Boolean f).
Dyadic t_influence(const FourierTable& t, const IndexSet& i);

/// True iff coordinate `index_1based` (member of i_set) can still flip f once
/// the coordinates outside i_set are pinned to x's values.
bool is_pivotal(const BooleanFunction& f, const IndexSet& i_set, int index_1based, uint64_t x);

/// Fraction of assignments to the complement for which every member of i is
/// pivotal. Exact; i must be nonempty.
Dyadic joint_influence(const BooleanFunction& f, const IndexSet& i);

/// Fraction of assignments to the complement whose restricted subfunction is
/// non-constant. Exact; i must be nonempty.
Dyadic coalition_influence(const BooleanFunction& f, const IndexSet& i);

/// P(∂_i f != 0) from the pointwise derivative. Exact; i must be nonempty.
Dyadic nonzero_derivative_prob(const BooleanFunction& f, const IndexSet& i);

/// Sum of single-bit influences = sum |i| f-hat(i)^2. Exact.
Dyadic total_influence(const FourierTable& t);

/// Exhaustive max of t_influence over all d-sets; ties resolved toward the
/// numerically smallest mask so the witness is deterministic.
std::pair<IndexSet, Dyadic> max_influence(const FourierTable& t, int d);

/// All four multi-bit influence notions for one set.
struct InfluenceReport {
    IndexSet set;
    Dyadic t_influence;
    Dyadic joint;
    Dyadic coalition;
    Dyadic nonzero_derivative_prob;
};

InfluenceReport influence_report(const BooleanFunction& f, const FourierTable& t,
                                 const IndexSet& i);

/// Per-restriction view used by the joint/coalition counters: the subfunction
/// over the coordinates of i with the complement pinned to one assignment.
struct SubcubeScan {
    SubcubeScan(const BooleanFunction& f, const IndexSet& i);

    /// Invokes fn(values) for every assignment to the complement, where
    /// values is the subfunction table over 2^|i| points (+1/-1 entries).
    template <class Fn>
    void for_each_restriction(Fn&& fn) const {
        std::vector<int> values(scatter.size());
        const uint64_t sz = uint64_t{1} << f_->n();
        for (uint64_t b = 0; b < sz; ++b) {
            if ((b & imask) != 0) continue;
            for (uint64_t y = 0; y < scatter.size(); ++y) values[y] = f_->value(b | scatter[y]);
            fn(values);
        }
    }

    /// True iff subcube coordinate j (0-based within i) can flip the values.
    static bool relevant(const std::vector<int>& values, int j);

    std::vector<uint64_t> scatter; // subcube index -> scattered mask on i's bits
    uint64_t imask;

private:
    const BooleanFunction* f_;
};

} // namespace bfan
