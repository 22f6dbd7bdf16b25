#include <doctest.h>

#include "bfan/families.hpp"
#include "bfan/packing.hpp"

using namespace bfan;

TEST_CASE("lexicographic greedy reproduces the small Steiner-like design") {
    GreedyOptions opts;
    opts.lexicographic = true;
    Packing p = greedy_packing(6, 3, 2, 0, opts);
    REQUIRE(p.blocks.size() == 4);
    CHECK(p.blocks[0] == std::vector<int>{0, 1, 2});
    CHECK(p.blocks[1] == std::vector<int>{0, 3, 4});
    CHECK(p.blocks[2] == std::vector<int>{1, 3, 5});
    CHECK(p.blocks[3] == std::vector<int>{2, 4, 5});
    CHECK(packing_valid(p));
    CoverageStats s = coverage_stats(p);
    CHECK(s.covered_d_sets == 12);
    CHECK(s.total_d_sets == 15);
}

TEST_CASE("degenerate shapes") {
    Packing whole = greedy_packing(5, 5, 2, 3);
    REQUIRE(whole.blocks.size() == 1);
    CHECK(coverage_stats(whole).coverage_ratio == 1.0);
    CHECK(coverage_stats(whole).covered_d_sets == 10);

    CHECK_THROWS_AS(greedy_packing(6, 2, 3, 0), error);

    Packing empty;
    empty.n = 8;
    empty.k = 3;
    empty.d = 2;
    CHECK(coverage_stats(empty).covered_d_sets == 0);
    CHECK(packing_valid(empty));
}

TEST_CASE("random greedy: validity, determinism, budget") {
    Packing a = greedy_packing(16, 4, 2, 7);
    Packing b = greedy_packing(16, 4, 2, 7);
    CHECK(a.blocks == b.blocks);
    CHECK(packing_valid(a));
    CHECK(a.blocks.size() >= 1);

    Packing c = greedy_packing(16, 4, 2, 8);
    CHECK(packing_valid(c));

    GreedyOptions small;
    small.attempt_budget = 5;
    Packing d = greedy_packing(16, 4, 2, 7, small);
    CHECK(d.blocks.size() <= 5);
    CHECK(packing_valid(d));
}

TEST_CASE("packing validity at larger sizes") {
    GreedyOptions opts;
    opts.attempt_budget = 20000;
    Packing p = greedy_packing(512, 17, 3, 42, opts);
    CHECK(p.blocks.size() >= 10);
    CHECK(packing_valid(p));

    Packing q = greedy_packing(128, 8, 2, 11, opts);
    CHECK(packing_valid(q));
}

TEST_CASE("divisibility bounds from the packing structure") {
    Packing p = greedy_packing(16, 4, 2, 7);
    const int n = p.n, k = p.k, d = p.d;
    // s = 0 case: t <= C(n,d)/C(k,d).
    CHECK(p.blocks.size() * binomial(k, d) <= binomial(n, d));
    // Each s-subset lies in at most C(n-s, d-s)/C(k-s, d-s) blocks.
    for (int s = 1; s <= d; ++s) {
        std::vector<int> idx(s);
        for (int j = 0; j < s; ++j) idx[j] = j;
        while (true) {
            uint64_t cnt = blocks_containing(p, idx);
            CHECK(cnt * binomial((uint64_t)(k - s), (uint64_t)(d - s)) <=
                  binomial((uint64_t)(n - s), (uint64_t)(d - s)));
            int j = s - 1;
            while (j >= 0 && idx[j] == n - s + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (int l = j + 1; l < s; ++l) idx[l] = idx[l - 1] + 1;
        }
    }
}

TEST_CASE("packing JSON round trip uses 1-based indices") {
    GreedyOptions opts;
    opts.lexicographic = true;
    Packing p = greedy_packing(6, 3, 2, 5, opts);
    std::string text = packing_to_json(p);
    CHECK(text.find("\"blocks\"") != std::string::npos);
    CHECK(text.find("6") != std::string::npos); // 1-based top index appears
    Packing q = packing_from_json(text);
    CHECK(q.n == p.n);
    CHECK(q.k == p.k);
    CHECK(q.d == p.d);
    CHECK(q.seed == p.seed);
    CHECK(q.blocks == p.blocks);

    CHECK_THROWS_AS(packing_from_json("{"), error);
    CHECK_THROWS_AS(packing_from_json("{\"n\":3,\"k\":2,\"d\":1,\"seed\":0,\"blocks\":[[9]]}"),
                    error);
}
