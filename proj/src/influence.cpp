#include "bfan/influence.hpp"

namespace bfan {

namespace {
bigint int128_to_bigint(unsigned __int128 v) {
    return bigint((uint64_t)(v >> 64)) << 64 | bigint((uint64_t)v);
}
} // namespace

Dyadic t_influence(const FourierTable& t, const IndexSet& i) {
    if (i.n() != t.n()) fail(errc::dimension_mismatch, "set and spectrum n differ");
    unsigned __int128 acc = 0;
    for_each_superset(i.mask(), t.n(), [&](uint64_t m) {
        acc += (unsigned __int128)(t.raw(m) * t.raw(m));
    });
    return Dyadic::scaled(int128_to_bigint(acc), 2u * (unsigned)t.n());
}

SubcubeScan::SubcubeScan(const BooleanFunction& f, const IndexSet& i) : f_(&f) {
    if (i.n() != f.n()) fail(errc::dimension_mismatch, "set and function n differ");
    imask = i.mask();
    std::vector<int> pos;
    for (int j = 0; j < f.n(); ++j)
        if ((imask >> j) & 1) pos.push_back(j);
    scatter.assign(size_t{1} << pos.size(), 0);
    for (uint64_t y = 0; y < scatter.size(); ++y) {
        uint64_t s = 0;
        for (size_t j = 0; j < pos.size(); ++j)
            if ((y >> j) & 1) s |= 1ULL << pos[j];
        scatter[y] = s;
    }
}

bool SubcubeScan::relevant(const std::vector<int>& values, int j) {
    const uint64_t bit = 1ULL << j;
    for (uint64_t y = 0; y < values.size(); ++y)
        if (!(y & bit) && values[y] != values[y | bit]) return true;
    return false;
}

bool is_pivotal(const BooleanFunction& f, const IndexSet& i_set, int index_1based, uint64_t x) {
    if (!i_set.contains(index_1based)) fail(errc::index_not_in_set, "pivot index must lie in the set");
    SubcubeScan scan(f, i_set);
    const uint64_t base = x & ~i_set.mask();
    std::vector<int> values(scan.scatter.size());
    for (uint64_t y = 0; y < values.size(); ++y) values[y] = f.value(base | scan.scatter[y]);
    // position of index within the set's ascending member order
    int j = popcount64(i_set.mask() & ((1ULL << (index_1based - 1)) - 1));
    return SubcubeScan::relevant(values, j);
}

Dyadic joint_influence(const BooleanFunction& f, const IndexSet& i) {
    if (i.is_empty()) fail(errc::empty_set, "joint influence needs a nonempty set");
    SubcubeScan scan(f, i);
    const int r = i.size();
    uint64_t count = 0;
    scan.for_each_restriction([&](const std::vector<int>& values) {
        for (int j = 0; j < r; ++j)
            if (!SubcubeScan::relevant(values, j)) return;
        ++count;
    });
    return Dyadic::scaled(bigint(count), (unsigned)(f.n() - r));
}

Dyadic coalition_influence(const BooleanFunction& f, const IndexSet& i) {
    if (i.is_empty()) fail(errc::empty_set, "coalition influence needs a nonempty set");
    SubcubeScan scan(f, i);
    uint64_t count = 0;
    scan.for_each_restriction([&](const std::vector<int>& values) {
        for (size_t y = 1; y < values.size(); ++y)
            if (values[y] != values[0]) {
                ++count;
                return;
            }
    });
    return Dyadic::scaled(bigint(count), (unsigned)(f.n() - i.size()));
}

Dyadic nonzero_derivative_prob(const BooleanFunction& f, const IndexSet& i) {
    if (i.is_empty()) fail(errc::empty_set, "derivative probability needs a nonempty set");
    return derivative_pointwise(f, i).nonzero_fraction();
}

Dyadic total_influence(const FourierTable& t) {
    unsigned __int128 acc = 0;
    for (uint64_t m = 0; m < t.raw().size(); ++m)
        acc += (unsigned __int128)(uint64_t)popcount64(m) * (unsigned __int128)(t.raw(m) * t.raw(m));
    return Dyadic::scaled(int128_to_bigint(acc), 2u * (unsigned)t.n());
}

std::pair<IndexSet, Dyadic> max_influence(const FourierTable& t, int d) {
    if (d < 1 || d > t.n()) fail(errc::bad_degree, "d must be in [1, n]");
    uint64_t best_mask = 0;
    Dyadic best;
    bool have = false;
    for_each_subset_of_size(t.n(), d, [&](uint64_t m) {
        Dyadic v = t_influence(t, IndexSet(m, t.n()));
        if (!have || v > best) { // strict: first (smallest) mask wins ties
            best = v;
            best_mask = m;
            have = true;
        }
    });
    return {IndexSet(best_mask, t.n()), best};
}

InfluenceReport influence_report(const BooleanFunction& f, const FourierTable& t,
                                 const IndexSet& i) {
    return InfluenceReport{i, t_influence(t, i), joint_influence(f, i), coalition_influence(f, i),
                           nonzero_derivative_prob(f, i)};
}

} // namespace bfan
