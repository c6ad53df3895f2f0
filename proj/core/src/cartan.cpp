#include "qtb/cartan.hpp"

#include <algorithm>
#include <numeric>

namespace qtb {

CartanData build_cartan(Kind kind, int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (kind == Kind::B && rank < 2)
        throw std::invalid_argument("type B needs rank >= 2");
    CartanData cd;
    cd.kind = kind;
    cd.rank = rank;
    cd.c.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) {
        cd.c[i][i] = 2;
        if (i + 1 < rank) {
            cd.c[i][i + 1] = -1;
            cd.c[i + 1][i] = -1;
        }
    }
    cd.r.assign(rank, 1);
    if (kind == Kind::B) {
        cd.c[rank - 1][rank - 2] = -2; // short-root row
        for (int i = 0; i + 1 < rank; ++i) cd.r[i] = 2;
        cd.r[rank - 1] = 1;
    }
    cd.bsym.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) cd.bsym[i][j] = cd.r[i] * cd.c[i][j];
    return cd;
}

InverseQCartanTable::InverseQCartanTable(const CartanData& cd, int depth)
    : cd_(cd), depth_(depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    const int N = cd_.rank;
    table_.assign(N, std::vector<std::vector<i64>>(N, std::vector<i64>(depth + 1, 0)));

    // value with "known so far" semantics while filling level by level
    auto val = [&](int j, int i, int arg) -> i64 {
        if (arg > -cd_.r[j]) return 0;
        return table_[j][i][-arg];
    };

    // Row j of C(z) * column i of Ctilde(z) == delta_ji, coefficient of z^a:
    //   ctilde_ji(a - r_j) + ctilde_ji(a + r_j)
    //     - sum_{k adj j} sum_{l=0}^{m-1} ctilde_ki(a - (c_jk + 1 + 2l)) = delta_ji * delta_a0
    // with m = -c_jk.  Solved for the lowest level L = a - r_j, descending in
    // L; within a level, rows are swept in increasing j so that the one
    // same-level dependency (short row on its long neighbour in type B) is
    // already available.
    for (int L = -1; L >= -depth; --L) {
        for (int j = 0; j < N; ++j) {
            if (L > -cd_.r[j]) continue;
            const int a = L + cd_.r[j];
            for (int i = 0; i < N; ++i) {
                i64 v = (j == i && a == 0) ? 1 : 0;
                v -= val(j, i, L + 2 * cd_.r[j]);
                for (int k = 0; k < N; ++k) {
                    if (k == j || cd_.c[j][k] >= 0) continue;
                    const int m = -cd_.c[j][k];
                    for (int l = 0; l < m; ++l) {
                        const int s = cd_.c[j][k] + 1 + 2 * l;
                        v += val(k, i, a - s);
                    }
                }
                table_[j][i][-L] = v;
            }
        }
    }
}

i64 InverseQCartanTable::at(int j, int i, int rr) const {
    if (j < 1 || j > cd_.rank || i < 1 || i > cd_.rank)
        throw std::out_of_range("node index out of range");
    if (rr > -cd_.r[j - 1]) return 0;
    if (rr < -depth_) throw std::out_of_range("inverse Cartan table depth exceeded");
    return table_[j - 1][i - 1][-rr];
}

namespace {

// Interval/parity condition for even arguments in columns i != n.
bool cond_star(int n, int i, int j, int k) {
    const int p = k + j, q = k - j;
    const bool first = (i + 1 <= p && p <= 2 * n - i - 1) && (1 - i <= q && q <= i - 1) &&
                       ((p - (i + 1)) % 2 == 0) && (((q - (1 - i)) % 2 + 2) % 2 == 0);
    const bool second = (p >= 2 * n - i);
    return first || second;
}

// Condition for odd arguments in the spin column i == n.
bool cond_star_star(int n, int j, int k) {
    const int v = k + j - n;
    return v >= 0 && v % 2 == 0;
}

} // namespace

i64 closed_form_B(int n, int j, int i, int rr) {
    if (n < 2 || j < 1 || j > n || i < 1 || i > n)
        throw std::invalid_argument("closed_form_B: bad indices");
    const int rj = (j < n) ? 2 : 1;
    if (rr > -rj) return 0;
    const int period = 4 * n - 2;
    i64 sign = 1;
    while (rr <= -period) {
        rr += period;
        sign = -sign;
    }
    // rr now in (-period, 0]
    if (i != n) {
        if (((rr % 2) + 2) % 2 != 0) return 0;
        int k = -rr / 2; // in [0, 2n-2]
        if (k > n - 1) k = 2 * n - 1 - k; // mirror half of the quasi-period
        return sign * (cond_star(n, i, j, k) ? 1 : 0);
    }
    if (((rr % 2) + 2) % 2 != 1) return 0;
    int k = (-rr - 1) / 2; // in [0, 2n-2]
    if (k > n - 1) k = 2 * n - 2 - k; // mirror
    return sign * (cond_star_star(n, j, k) ? 1 : 0);
}

WeightVector alpha_in_varpi(const CartanData& cd, int i) {
    WeightVector v(cd.rank, 0);
    for (int j = 0; j < cd.rank; ++j) v[j] = cd.c[j][i - 1];
    return v;
}

WeightVector weyl_apply(const CartanData& cd, int i, const WeightVector& mu) {
    WeightVector out = mu;
    const i64 coeff = mu[i - 1];
    if (coeff == 0) return out;
    for (int j = 0; j < cd.rank; ++j) out[j] -= coeff * cd.c[j][i - 1];
    return out;
}

WeightVector weyl_apply_word(const CartanData& cd, const std::vector<int>& word,
                             const WeightVector& mu) {
    WeightVector v = mu;
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = weyl_apply(cd, *it, v);
    return v;
}

std::vector<WeightVector> roots_of_word(const CartanData& cd,
                                        const std::vector<int>& word) {
    std::vector<WeightVector> betas;
    betas.reserve(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
        WeightVector v = alpha_in_varpi(cd, word[k]);
        for (std::size_t l = k; l-- > 0;) v = weyl_apply(cd, word[l], v);
        betas.push_back(std::move(v));
    }
    return betas;
}

bool is_reduced_word_w0(const CartanData& cd, const std::vector<int>& word) {
    const int N = cd.rank;
    const std::size_t npos =
        (cd.kind == Kind::A) ? std::size_t(N) * (N + 1) / 2 : std::size_t(N) * N;
    if (word.size() != npos) return false;
    std::vector<std::vector<i64>> seen;
    for (const auto& beta : roots_of_word(cd, word)) {
        std::vector<i64> a;
        try {
            a = to_alpha_basis(cd, beta);
        } catch (const std::exception&) {
            return false;
        }
        bool positive = false, negative = false;
        for (i64 x : a) {
            if (x > 0) positive = true;
            if (x < 0) negative = true;
        }
        if (!positive || negative) return false;
        seen.push_back(a);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

namespace {

struct Rat {
    i64 num = 0, den = 1;
    void reduce() {
        if (den < 0) { num = -num; den = -den; }
        const i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
};

Rat make_rat(i64 n, i64 d = 1) {
    Rat r{n, d};
    r.reduce();
    return r;
}
Rat operator*(Rat a, Rat b) { return make_rat(a.num * b.num, a.den * b.den); }
Rat operator-(Rat a, Rat b) {
    return make_rat(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rat operator/(Rat a, Rat b) { return make_rat(a.num * b.den, a.den * b.num); }

} // namespace

std::vector<i64> to_alpha_basis(const CartanData& cd, const WeightVector& mu) {
    const int N = cd.rank;
    if (static_cast<int>(mu.size()) != N)
        throw std::invalid_argument("weight vector has wrong size");
    // Solve C * x = mu exactly over the rationals, then demand integrality.
    std::vector<std::vector<Rat>> m(N, std::vector<Rat>(N + 1));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) m[i][j] = make_rat(cd.c[i][j]);
        m[i][N] = make_rat(mu[i]);
    }
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int row = col; row < N; ++row)
            if (m[row][col].num != 0) { piv = row; break; }
        if (piv < 0) throw std::runtime_error("Cartan matrix is singular");
        std::swap(m[col], m[piv]);
        for (int row = 0; row < N; ++row) {
            if (row == col || m[row][col].num == 0) continue;
            const Rat f = m[row][col] / m[col][col];
            for (int j = col; j <= N; ++j) m[row][j] = m[row][j] - f * m[col][j];
        }
    }
    std::vector<i64> x(N);
    for (int i = 0; i < N; ++i) {
        const Rat v = m[i][N] / m[i][i];
        if (v.den != 1)
            throw std::runtime_error("weight is not in the root lattice");
        x[i] = v.num;
    }
    return x;
}

i64 pairing_root_weight(const CartanData& cd, const WeightVector& mu,
                        const WeightVector& nu) {
    const std::vector<i64> a = to_alpha_basis(cd, mu);
    i64 s = 0;
    for (int j = 0; j < cd.rank; ++j) s += a[j] * cd.r[j] * nu[j];
    return s;
}

} // namespace qtb
