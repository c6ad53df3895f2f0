#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qtb/ar_quiver.hpp"

#include <algorithm>

using namespace qtb;

namespace {

std::vector<int> sorted_row(const ARQuiver& g, int res) { return g.row(res); }

std::vector<i64> root_at(const ARQuiver& g, int res, int rr) {
    const int k = g.index_of(res, rr);
    REQUIRE(k >= 0);
    return g.verts[k].root;
}

std::vector<i64> interval_root(int rank, int lo, int hi) {
    std::vector<i64> v(rank, 0);
    for (int i = lo; i <= hi; ++i) v[i - 1] = 1;
    return v;
}

} // namespace

TEST_CASE("heights complete and validate") {
    QuiverSpec q = chain_quiver(4, true, 0);
    CHECK(q.xi.at(1) == 0);
    CHECK(q.xi.at(2) == -1);
    CHECK(q.xi.at(4) == -3);

    QuiverSpec bad;
    bad.rank = 3;
    bad.arrows = {{1, 2}, {2, 3}};
    bad.xi[1] = 0;
    bad.xi[3] = 7;
    CHECK_THROWS(complete_heights(bad));
}

TEST_CASE("AR quiver of the descending A_4 chain") {
    // Oracle: columns and interval roots computed directly from the Coxeter
    // translate, frozen here.
    ARQuiver g = ar_quiver(chain_quiver(4, true, 0));
    REQUIRE(g.verts.size() == 10);
    CHECK(sorted_row(g, 1) == std::vector<int>{0, -4, -8, -12});
    CHECK(sorted_row(g, 2) == std::vector<int>{-2, -6, -10});
    CHECK(sorted_row(g, 3) == std::vector<int>{-4, -8});
    CHECK(sorted_row(g, 4) == std::vector<int>{-6});

    CHECK(root_at(g, 1, 0) == interval_root(4, 1, 1));
    CHECK(root_at(g, 1, -4) == interval_root(4, 2, 2));
    CHECK(root_at(g, 1, -12) == interval_root(4, 4, 4));
    CHECK(root_at(g, 2, -2) == interval_root(4, 1, 2));
    CHECK(root_at(g, 2, -10) == interval_root(4, 3, 4));
    CHECK(root_at(g, 3, -4) == interval_root(4, 1, 3));
    CHECK(root_at(g, 4, -6) == interval_root(4, 1, 4));

    // each arrow moves one column step to an adjacent residue
    for (auto [a, b] : g.arrows) {
        CHECK(std::abs(g.verts[a].res - g.verts[b].res) == 1);
        CHECK(g.verts[b].rr == g.verts[a].rr + 2);
    }
}

TEST_CASE("AR quiver of a mixed-orientation A_4 quiver") {
    QuiverSpec q;
    q.rank = 4;
    q.arrows = {{1, 2}, {3, 2}, {4, 3}};
    q.xi[1] = 0;
    complete_heights(q);
    CHECK(q.xi.at(2) == 1);
    CHECK(q.xi.at(3) == 0);
    CHECK(q.xi.at(4) == -1);

    ARQuiver g = ar_quiver(q);
    REQUIRE(g.verts.size() == 10);
    CHECK(root_at(g, 2, 2) == interval_root(4, 2, 2));
    CHECK(root_at(g, 1, 0) == interval_root(4, 1, 2));
    CHECK(root_at(g, 3, 0) == interval_root(4, 2, 3));
    CHECK(root_at(g, 4, -2) == interval_root(4, 2, 4));
}

TEST_CASE("combinatorial AR quiver round-trips through a compatible reading") {
    for (bool descending : {true, false}) {
        QuiverSpec q = chain_quiver(4, descending, 0);
        ARQuiver g = ar_quiver(q);
        auto word = compatible_reading(g);
        const CartanData cd = build_cartan(Kind::A, 4);
        REQUIRE(is_reduced_word_w0(cd, word));
        ARQuiver c = comb_ar_quiver(cd, word);
        CHECK(same_shape(g, c));
    }
    // adapted word repeated N times is a reduced word of w0 only in the right
    // pattern; sanity-check rejection of a non-reduced input
    CHECK_THROWS(comb_ar_quiver(build_cartan(Kind::A, 2), std::vector<int>{1, 2, 1, 2}));
}

TEST_CASE("twisted quiver of the descending A_4 chain (both boundary choices)") {
    QuiverSpec q = chain_quiver(4, true, 0);

    TwistedQuiver tg = twist(q, Flat::Greater);
    REQUIRE(tg.n == 3);
    REQUIRE(tg.hat.verts.size() == 15); // n(2n-1)
    CHECK(sorted_row(tg.hat, 1) == std::vector<int>{0, -4, -8, -12});
    CHECK(sorted_row(tg.hat, 2) == std::vector<int>{-2, -6, -10});
    CHECK(sorted_row(tg.hat, 3) == std::vector<int>{-1, -3, -5, -7, -9});
    CHECK(sorted_row(tg.hat, 4) == std::vector<int>{-4, -8});
    CHECK(sorted_row(tg.hat, 5) == std::vector<int>{-6});

    TwistedQuiver tl = twist(q, Flat::Less);
    CHECK(sorted_row(tl.hat, 3) == std::vector<int>{-3, -5, -7, -9, -11});
    CHECK(sorted_row(tl.hat, 1) == sorted_row(tg.hat, 1));

    // folded labels merge rows i and 2n-i
    CHECK(sorted_row(tg.bar, 2) == std::vector<int>{-2, -4, -6, -8, -10});
    CHECK(sorted_row(tg.bar, 1) == std::vector<int>{0, -4, -6, -8, -12});
    CHECK(sorted_row(tg.bar, 3) == std::vector<int>{-1, -3, -5, -7, -9});
}

TEST_CASE("k_of counts ladder depth") {
    TwistedQuiver tg = twist(chain_quiver(4, true, 0), Flat::Greater);
    // bar row 1 = {0,-4,-6,-8,-12}: from r=0 the step-4 ladder is {0}
    CHECK(k_of(tg, 1, -12) == 4); // -12,-8,-4,0
    CHECK(k_of(tg, 1, -8) == 3);
    CHECK(k_of(tg, 1, -6) == 1);
    CHECK(k_of(tg, 1, 0) == 1);
    CHECK(k_of(tg, 3, -9) == 5); // spin ladder step 2
    CHECK(k_of(tg, 3, -1) == 1);
    CHECK(k_of(tg, 2, -10) == 3); // -10,-6,-2
    CHECK(k_of(tg, 2, -8) == 2);  // -8,-4
}

TEST_CASE("twisted quivers match the frozen commutation-class words") {
    const CartanData a5 = build_cartan(Kind::A, 5);
    {
        TwistedQuiver tg = twist(chain_quiver(4, true, 0), Flat::Greater);
        const std::vector<int> w{3, 1, 2, 3, 4, 1, 5, 3, 2, 3, 4, 1, 3, 2, 1};
        REQUIRE(is_reduced_word_w0(a5, w));
        CHECK(same_shape(comb_ar_quiver(a5, w), tg.hat));
    }
    {
        TwistedQuiver tl = twist(chain_quiver(4, true, 0), Flat::Less);
        const std::vector<int> w{1, 2, 3, 4, 1, 5, 3, 2, 3, 4, 1, 3, 2, 1, 3};
        REQUIRE(is_reduced_word_w0(a5, w));
        CHECK(same_shape(comb_ar_quiver(a5, w), tl.hat));
    }
}

TEST_CASE("twisted rows are segments (convexity), n = 2..5") {
    for (int n = 2; n <= 5; ++n) {
        for (bool descending : {true, false}) {
            for (Flat flat : {Flat::Greater, Flat::Less}) {
                TwistedQuiver tq = twist(chain_quiver(2 * n - 2, descending, 0), flat);
                REQUIRE(tq.hat.verts.size() == static_cast<std::size_t>(n * (2 * n - 1)));
                for (int res = 1; res <= 2 * n - 1; ++res) {
                    auto row = sorted_row(tq.hat, res);
                    const int step = (res == n) ? 2 : 4;
                    for (std::size_t k = 1; k < row.size(); ++k)
                        REQUIRE(row[k - 1] - row[k] == step);
                }
                // the reading is a reduced word of w0(A_{2n-1}) (checked inside
                // twist) and round-trips through the combinatorial build
                auto word = compatible_reading(tq.hat);
                CHECK(same_shape(comb_ar_quiver(build_cartan(Kind::A, 2 * n - 1), word), tq.hat));
            }
        }
    }
}

TEST_CASE("max column per row follows the height function") {
    for (bool descending : {true, false}) {
        QuiverSpec q = chain_quiver(4, descending, 2);
        const int n = 3;
        for (Flat flat : {Flat::Greater, Flat::Less}) {
            TwistedQuiver tq = twist(q, flat);
            for (int res = 1; res <= n - 1; ++res)
                CHECK(max_rr_of_row(tq.hat, res) == 2 * q.xi.at(res));
            for (int res = n + 1; res <= 2 * n - 1; ++res)
                CHECK(max_rr_of_row(tq.hat, res) == 2 * q.xi.at(res - 1));
            const int spin = max_rr_of_row(tq.hat, n);
            if (flat == Flat::Greater)
                CHECK(spin == q.xi.at(n - 1) + q.xi.at(n) + 2);
            else
                CHECK(spin == q.xi.at(n - 1) + q.xi.at(n));
        }
    }
}
