#include "bfan/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bfan/bits.hpp"
#include "bfan/influence.hpp"

namespace bfan {

namespace {

Dyadic distance_sq(const BooleanFunction& a, const BooleanFunction& b) {
    uint64_t ham = 0;
    for (size_t w = 0; w < a.words().size(); ++w)
        ham += (uint64_t)popcount64(a.words()[w] ^ b.words()[w]);
    // (f - g)^2 is 4 on disagreements, 0 elsewhere.
    return Dyadic::scaled(bigint(4) * ham, (unsigned)a.n());
}

struct SearchState {
    bool have = false;
    uint64_t best_ham = 0;
    BooleanFunction best;
    bool unique = true;

    void offer(const BooleanFunction& g, uint64_t ham) {
        if (!have || ham < best_ham) {
            have = true;
            best_ham = ham;
            best = g;
            unique = true;
        } else if (ham == best_ham) {
            unique = false; // candidates are pairwise distinct in both searches
            if (BooleanFunction::table_less(g, best)) best = g;
        }
    }
};

uint64_t hamming(const BooleanFunction& a, const BooleanFunction& b) {
    uint64_t ham = 0;
    for (size_t w = 0; w < a.words().size(); ++w)
        ham += (uint64_t)popcount64(a.words()[w] ^ b.words()[w]);
    return ham;
}

SearchState exhaustive_search(const BooleanFunction& f, int d) {
    const int n = f.n();
    if (n > 4) fail(errc::search_space_too_large, "exhaustive search runs at n <= 4");
    SearchState st;
    const uint64_t tables = uint64_t{1} << (uint64_t{1} << n);
    for (uint64_t word = 0; word < tables; ++word) {
        BooleanFunction g = BooleanFunction::from_table_word(word, n);
        if (degree(fwht(g)) > d) continue;
        st.offer(g, hamming(f, g));
    }
    return st;
}

/// DFS over scaled coefficient vectors a_m in Z with sum a^2 = 4^{d-1} and
/// |a_m| <= 2^{d-1}, supported on masks of size <= d; a candidate survives if
/// the inverse transform lands on +/-2^n everywhere.
struct LatticeSearch {
    const BooleanFunction& f;
    int n;
    int d;
    int64_t unit_shift;          // raw coefficient = a * 2^{n-d+1}
    std::vector<uint64_t> masks; // supports, ascending
    std::vector<int64_t> assign;
    SearchState st;
    uint64_t work = 0;
    uint64_t work_budget;

    LatticeSearch(const BooleanFunction& fn, int dd, uint64_t budget)
        : f(fn), n(fn.n()), d(dd), work_budget(budget) {
        if (n - (d - 1) < 0) fail(errc::bad_degree, "d too large for the lattice scale");
        unit_shift = n - (d - 1);
        for (uint64_t m = 0; m < (uint64_t{1} << n); ++m)
            if (popcount64(m) <= d) masks.push_back(m);
        assign.assign(masks.size(), 0);
    }

    void dfs(size_t idx, int64_t remaining) {
        if (++work > work_budget)
            fail(errc::search_space_too_large, "lattice search exceeded its node budget");
        if (remaining == 0) {
            for (size_t j = idx; j < masks.size(); ++j) assign[j] = 0;
            try_candidate();
            return;
        }
        if (idx == masks.size()) return;
        // Remaining mass must fit in the remaining slots.
        int64_t amax = (int64_t)std::floor(std::sqrt((double)remaining));
        int64_t cap = int64_t{1} << (d - 1);
        if (amax > cap) amax = cap;
        for (int64_t a = -amax; a <= amax; ++a) {
            assign[idx] = a;
            dfs(idx + 1, remaining - a * a);
        }
        assign[idx] = 0;
    }

    void try_candidate() {
        work += uint64_t{1} << n;
        if (work > work_budget)
            fail(errc::search_space_too_large, "lattice search exceeded its node budget");
        std::vector<int64_t> raw(size_t{1} << n, 0);
        for (size_t j = 0; j < masks.size(); ++j) raw[masks[j]] = assign[j] << unit_shift;
        fwht_inverse(raw);
        const int64_t full = int64_t{1} << n;
        TruthTableBuilder builder(n);
        for (uint64_t b = 0; b < raw.size(); ++b) {
            if (raw[b] == full)
                builder.set(b, true);
            else if (raw[b] == -full)
                builder.set(b, false);
            else
                return; // not Boolean
        }
        BooleanFunction g = builder.take();
        st.offer(g, hamming(f, g));
    }
};

SearchState lattice_search(const BooleanFunction& f, int d) {
    if (f.n() > 10) fail(errc::search_space_too_large, "lattice search runs at n <= 10");
    LatticeSearch search(f, d, uint64_t{1} << 26);
    search.dfs(0, int64_t{1} << (2 * (d - 1)));
    if (!search.st.have) fail(errc::search_space_too_large, "no admissible candidate found");
    return search.st;
}

} // namespace

ApproxResult nearest_low_degree(const BooleanFunction& f, int d, ApproxMethod method) {
    const int n = f.n();
    if (d < 0 || d > n) fail(errc::bad_degree, "d must be in [0, n]");
    SearchState st;
    switch (method) {
    case ApproxMethod::exhaustive:
        st = exhaustive_search(f, d);
        break;
    case ApproxMethod::lattice:
        st = lattice_search(f, d);
        break;
    case ApproxMethod::automatic:
        if (n <= 4)
            st = exhaustive_search(f, d);
        else
            fail(errc::search_space_too_large,
                 "n=" + std::to_string(n) + " needs the lattice search enabled");
        break;
    }

    ApproxResult out;
    out.g = st.best;
    out.distance_sq = distance_sq(f, st.best);
    out.is_unique = st.unique;
    FourierTable tf = fwht(f);
    FourierTable tg = fwht(st.best);
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
        if (popcount64(m) > d) continue;
        Dyadic dev = (tf.coefficient(m) - tg.coefficient(m)).abs();
        out.coeff_deviations.emplace_back(IndexSet(m, n), dev);
    }
    return out;
}

FknReport fkn_report(const BooleanFunction& f, int d, ApproxMethod method) {
    const int n = f.n();
    if (d < 1 || d + 1 > n) fail(errc::bad_degree, "need 1 <= d and d+1 <= n");
    FourierTable t = fwht(f);

    FknReport rep;
    rep.d = d;
    auto [set, maxinf] = max_influence(t, d + 1);
    rep.argmax_set = set;
    rep.max_influence_d1 = maxinf;
    double lnn = std::log((double)n);
    rep.alpha_star = maxinf.to_double() * std::pow((double)n / lnn, d + 1);

    rep.approx = nearest_low_degree(f, d, method);
    for (const auto& [js, dev] : rep.approx.coeff_deviations) {
        FknRow row;
        row.set = js;
        row.deviation = dev;
        row.denom = rep.alpha_star * std::pow(lnn / (double)n, js.size());
        if (dev.is_zero())
            row.ratio = 0.0;
        else if (row.denom == 0.0)
            row.ratio = std::numeric_limits<double>::infinity();
        else
            row.ratio = dev.to_double() / row.denom;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace bfan
