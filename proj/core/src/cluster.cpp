#include "qtb/cluster.hpp"

#include <algorithm>

namespace qtb {

int word_kplus(const std::vector<int>& word, int k) {
    const int L = static_cast<int>(word.size());
    for (int j = k + 1; j <= L; ++j)
        if (word[j - 1] == word[k - 1]) return j;
    return L + 1;
}

int word_kminus(const std::vector<int>& word, int k) {
    for (int j = k - 1; j >= 1; --j)
        if (word[j - 1] == word[k - 1]) return j;
    return 0;
}

CompatiblePair initial_pair(const CartanData& cd, const std::vector<int>& word) {
    if (!is_reduced_word_w0(cd, word))
        throw std::invalid_argument("initial_pair needs a reduced word for w0");
    const int L = static_cast<int>(word.size());
    CompatiblePair p;
    p.word = word;
    p.lambda.assign(L, std::vector<i64>(L, 0));
    p.btilde.assign(L, std::vector<i64>(L, 0));
    p.ex.assign(L, false);
    p.d.assign(L, 0);

    std::vector<int> kplus(L + 1), kminus(L + 1);
    for (int k = 1; k <= L; ++k) {
        kplus[k] = word_kplus(word, k);
        kminus[k] = word_kminus(word, k);
    }
    for (int k = 1; k <= L; ++k) {
        p.ex[k - 1] = (kplus[k] <= L);
        p.d[k - 1] = 2 * cd.r[word[k - 1] - 1];
    }

    for (int s = 1; s <= L; ++s)
        for (int t = 1; t <= L; ++t) {
            if (s == t) continue;
            i64 b = 0;
            const int cst = cd.c[word[s - 1] - 1][word[t - 1] - 1];
            if (t == kplus[s]) b = 1;
            else if (s < t && t < kplus[s] && kplus[s] < kplus[t]) b = cst;
            else if (kplus[t] == s) b = -1;
            else if (t < s && s < kplus[t] && kplus[t] < kplus[s]) b = -cst;
            p.btilde[s - 1][t - 1] = b;
        }

    // lambda_st = (varpi_{i_s} - w_{<=s} varpi_{i_s}, varpi_{i_t} + w_{<=t} varpi_{i_t})
    std::vector<WeightVector> wvarpi(L + 1); // w_{<=k} varpi_{i_k}
    for (int k = 1; k <= L; ++k) {
        WeightVector v(cd.rank, 0);
        v[word[k - 1] - 1] = 1;
        for (int l = k; l >= 1; --l) v = weyl_apply(cd, word[l - 1], v);
        wvarpi[k] = v;
    }
    for (int s = 1; s <= L; ++s)
        for (int t = s + 1; t <= L; ++t) {
            WeightVector a(cd.rank, 0), b(cd.rank, 0);
            a[word[s - 1] - 1] = 1;
            b[word[t - 1] - 1] = 1;
            for (int x = 0; x < cd.rank; ++x) {
                a[x] -= wvarpi[s][x]; // in the root lattice
                b[x] += wvarpi[t][x];
            }
            const i64 v = pairing_root_weight(cd, a, b);
            p.lambda[s - 1][t - 1] = v;
            p.lambda[t - 1][s - 1] = -v;
        }

    check_compatible(p);
    return p;
}

void check_compatible(const CompatiblePair& p) {
    const int L = p.size();
    for (int s = 0; s < L; ++s) {
        if (!p.ex[s]) continue;
        for (int t = 0; t < L; ++t) {
            i64 sum = 0;
            for (int k = 0; k < L; ++k) sum += p.btilde[k][s] * p.lambda[k][t];
            const i64 expect = (s == t) ? p.d[s] : 0;
            if (sum != expect)
                throw std::logic_error("compatible pair identity fails");
        }
    }
}

namespace {

IntMat e_matrix(const CompatiblePair& p, int k) {
    const int L = p.size();
    IntMat e(L, std::vector<i64>(L, 0));
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            if (j != k) e[i][j] = (i == j) ? 1 : 0;
            else if (i == k) e[i][j] = -1;
            else e[i][j] = std::max<i64>(0, -p.btilde[i][k]);
        }
    return e;
}

IntMat f_matrix(const CompatiblePair& p, int k) {
    const int L = p.size();
    IntMat f(L, std::vector<i64>(L, 0));
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            if (i != k) f[i][j] = (i == j) ? 1 : 0;
            else if (j == k) f[i][j] = -1;
            else f[i][j] = std::max<i64>(0, p.btilde[k][j]);
        }
    return f;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const int L = static_cast<int>(a.size());
    IntMat out(L, std::vector<i64>(L, 0));
    for (int i = 0; i < L; ++i)
        for (int k = 0; k < L; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < L; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

IntMat transpose(const IntMat& a) {
    const int L = static_cast<int>(a.size());
    IntMat out(L, std::vector<i64>(L, 0));
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) out[j][i] = a[i][j];
    return out;
}

} // namespace

CompatiblePair mutate_pair(const CompatiblePair& p, int k) {
    if (k < 0 || k >= p.size() || !p.ex[k])
        throw std::invalid_argument("mutation direction must be exchangeable");
    const IntMat e = e_matrix(p, k);
    const IntMat f = f_matrix(p, k);
    CompatiblePair out = p;
    out.lambda = mat_mul(mat_mul(transpose(e), p.lambda), e);
    out.btilde = mat_mul(mat_mul(e, p.btilde), f);
    check_compatible(out);
    return out;
}

ExchangeSplit exchange_split(const CompatiblePair& p, int k) {
    ExchangeSplit s;
    for (int j = 0; j < p.size(); ++j) {
        const i64 b = p.btilde[j][k];
        if (b > 0) s.pos.emplace_back(j, b);
        if (b < 0) s.neg.emplace_back(j, -b);
    }
    return s;
}

std::vector<std::pair<int, int>> principal_arrows(const CompatiblePair& p) {
    std::vector<std::pair<int, int>> arrows;
    for (int u = 0; u < p.size(); ++u)
        for (int v = u + 1; v < p.size(); ++v) {
            if (!p.ex[u] && !p.ex[v]) continue;
            const i64 b = p.btilde[u][v];
            if (b == 0) continue;
            if (b != 1 && b != -1)
                throw std::logic_error("unexpected multi-arrow in principal part");
            if (p.btilde[v][u] != -b)
                throw std::logic_error("principal part is not skew");
            if (b > 0) arrows.emplace_back(u, v);
            else arrows.emplace_back(v, u);
        }
    return arrows;
}

CompatiblePair twisted_initial_pair(const TwistedQuiver& tq, std::vector<int>* vertex_order) {
    std::vector<int> order;
    const std::vector<int> word = compatible_reading(tq.hat, &order);
    const CartanData cd = build_cartan(Kind::A, 2 * tq.n - 1);
    CompatiblePair p = initial_pair(cd, word);
    if (vertex_order) *vertex_order = order;
    return p;
}

std::vector<std::pair<VarKey, VarKey>> twisted_arrow_families(const TwistedQuiver& tq) {
    const int n = tq.n;
    const CartanData cb = build_cartan(Kind::B, n);
    const Window w = window_of(tq);
    auto in = [&](int i, int r) { return w.count({i, r}) > 0; };
    auto in_e = [&](int i, int r) {
        return in(i, r) && in(i, r - 2 * cb.r[i - 1]);
    };
    std::vector<std::pair<VarKey, VarKey>> out;
    for (const auto& v : w) {
        const auto [i, r] = v;
        const int ri = cb.r[i - 1];
        if (in(i, r - 2 * ri)) out.push_back({v, {i, r - 2 * ri}}); // family 1
        if (i <= n - 1)
            for (int j : {i - 1, i + 1})
                if (j >= 1 && j <= n - 1 && in_e(j, r + 2)) out.push_back({v, {j, r + 2}});
        if (i == n - 1 && in_e(n, r + 1)) out.push_back({v, {n, r + 1}});
        if (i == n && in_e(n - 1, r + 3)) out.push_back({v, {n - 1, r + 3}});
    }
    return out;
}

} // namespace qtb
