#include "biform/multi_index.hpp"

#include <doctest.h>

using namespace biform;

TEST_CASE("enumeration is lexicographic and complete") {
    CHECK(enumerate_multi_indices(3, 2) ==
          std::vector<MultiIndex>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(enumerate_multi_indices(5, 0) == std::vector<MultiIndex>{{}});
    CHECK(enumerate_multi_indices(4, 4) == std::vector<MultiIndex>{{1, 2, 3, 4}});
    CHECK(enumerate_multi_indices(3, 4).empty());
    CHECK(enumerate_multi_indices(3, -1).empty());
}

TEST_CASE("merge computes shuffle signs") {
    auto m = merge_with_sign({1, 3}, {2});
    REQUIRE(m.has_value());
    CHECK(m->first == MultiIndex{1, 2, 3});
    CHECK(m->second == -1);

    CHECK_FALSE(merge_with_sign({1, 2}, {2, 3}).has_value());

    auto swap = merge_with_sign({2}, {1});
    REQUIRE(swap.has_value());
    CHECK(swap->first == MultiIndex{1, 2});
    CHECK(swap->second == -1);
}

TEST_CASE("merge sign anticommutes by degree product") {
    for (int n = 2; n <= 5; ++n) {
        auto all_p = [n](int p) { return enumerate_multi_indices(n, p); };
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q + p <= n; ++q)
                for (const auto& I : all_p(p))
                    for (const auto& J : all_p(q)) {
                        auto ij = merge_with_sign(I, J);
                        auto ji = merge_with_sign(J, I);
                        CHECK(ij.has_value() == ji.has_value());
                        if (!ij) continue;
                        int expected = (p * q) % 2 == 0 ? 1 : -1;
                        CHECK(ij->second == expected * ji->second);
                    }
    }
}

TEST_CASE("complement signs satisfy the wedge-to-volume convention") {
    auto c1 = complement_with_sign({1}, 2);
    CHECK(c1.first == MultiIndex{2});
    CHECK(c1.second == 1);

    auto c2 = complement_with_sign({2}, 2);
    CHECK(c2.first == MultiIndex{1});
    CHECK(c2.second == -1);

    auto c3 = complement_with_sign({1, 3}, 4);
    CHECK(c3.first == MultiIndex{2, 4});
    CHECK(c3.second == -1);

    for (int n = 1; n <= 5; ++n)
        for (int p = 0; p <= n; ++p)
            for (const auto& I : enumerate_multi_indices(n, p)) {
                auto [Ic, sign] = complement_with_sign(I, n);
                auto merged = merge_with_sign(I, Ic);
                REQUIRE(merged.has_value());
                CHECK(merged->first == enumerate_multi_indices(n, n)[0]);
                CHECK(merged->second == sign);
                // complement twice returns I with sign product (-1)^{p(n-p)}
                auto [back, sign2] = complement_with_sign(Ic, n);
                CHECK(back == I);
                int expected = (p * (n - p)) % 2 == 0 ? 1 : -1;
                CHECK(sign * sign2 == expected);
            }
}
