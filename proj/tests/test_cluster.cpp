#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qtb/cluster.hpp"

#include <algorithm>
#include <set>

using namespace qtb;

TEST_CASE("word companions") {
    const std::vector<int> w{1, 2, 1, 2};
    CHECK(word_kplus(w, 1) == 3);
    CHECK(word_kplus(w, 3) == 5);
    CHECK(word_kminus(w, 3) == 1);
    CHECK(word_kminus(w, 1) == 0);
}

TEST_CASE("initial pair: structure for B_2 and A_3") {
    for (auto [kind, rank, word] :
         std::vector<std::tuple<Kind, int, std::vector<int>>>{
             {Kind::B, 2, {1, 2, 1, 2}},
             {Kind::B, 2, {2, 1, 2, 1}},
             {Kind::A, 3, {1, 2, 1, 3, 2, 1}}}) {
        const CartanData cd = build_cartan(kind, rank);
        CompatiblePair p = initial_pair(cd, word); // compatibility checked inside
        const int L = p.size();
        for (int s = 0; s < L; ++s)
            for (int t = 0; t < L; ++t) REQUIRE(p.lambda[s][t] == -p.lambda[t][s]);
        // frozen = last occurrence of each residue
        for (int k = 1; k <= L; ++k)
            CHECK(p.ex[k - 1] == (word_kplus(word, k) <= L));
        // d_s = 2 r_{i_s}
        for (int k = 1; k <= L; ++k) CHECK(p.d[k - 1] == 2 * cd.r[word[k - 1] - 1]);
    }
}

TEST_CASE("mutation is involutive and preserves compatibility") {
    const CartanData a3 = build_cartan(Kind::A, 3);
    CompatiblePair p = initial_pair(a3, {1, 2, 1, 3, 2, 1});
    for (int k = 0; k < p.size(); ++k) {
        if (!p.ex[k]) continue;
        CompatiblePair q = mutate_pair(p, k); // check_compatible inside
        CompatiblePair r = mutate_pair(q, k);
        CHECK(r.lambda == p.lambda);
        CHECK(r.btilde == p.btilde);
    }
    // and for a twisted class
    TwistedQuiver tq = twist(chain_quiver(2, true, 0), Flat::Greater);
    CompatiblePair tp = twisted_initial_pair(tq, nullptr);
    for (int k = 0; k < tp.size(); ++k) {
        if (!tp.ex[k]) continue;
        CompatiblePair q = mutate_pair(tp, k);
        CompatiblePair r = mutate_pair(q, k);
        CHECK(r.lambda == tp.lambda);
        CHECK(r.btilde == tp.btilde);
    }
}

TEST_CASE("twisted initial quiver matches the four arrow families") {
    std::vector<QuiverSpec> bases;
    bases.push_back(chain_quiver(2, true, 0));
    bases.push_back(chain_quiver(2, false, 0));
    bases.push_back(chain_quiver(4, true, 0));
    bases.push_back(chain_quiver(4, false, 1));
    {
        QuiverSpec mixed;
        mixed.rank = 4;
        mixed.arrows = {{1, 2}, {3, 2}, {4, 3}};
        mixed.xi[1] = 0;
        complete_heights(mixed);
        bases.push_back(mixed);
    }
    for (const auto& base : bases) {
        for (Flat flat : {Flat::Greater, Flat::Less}) {
            TwistedQuiver tq = twist(base, flat);
            std::vector<int> order;
            CompatiblePair p = twisted_initial_pair(tq, &order);

            std::multiset<std::pair<VarKey, VarKey>> got;
            for (auto [u, v] : principal_arrows(p)) {
                const auto& a = tq.bar.verts[order[u]];
                const auto& b = tq.bar.verts[order[v]];
                got.insert({{a.res, a.rr}, {b.res, b.rr}});
            }
            auto fam = twisted_arrow_families(tq);
            std::multiset<std::pair<VarKey, VarKey>> expect(fam.begin(), fam.end());
            CAPTURE(base.rank);
            CAPTURE(flat == Flat::Greater);
            REQUIRE(got == expect);
        }
    }
}
