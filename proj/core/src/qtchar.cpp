#include "qtb/qtchar.hpp"

#include <algorithm>
#include <deque>

namespace qtb {

QCharEngine::QCharEngine(const CartanData& cd, int depth) : alg_(cd, depth) {}

YMonomial QCharEngine::kr_monomial(int i, int k, int r) const {
    const int ri = cartan().r[i - 1];
    YMonomial m;
    for (int s = 0; s < k; ++s) m.mul_var(i, r + 2 * ri * s, 1);
    return m;
}

namespace {

// Flat monomial encoding for the commutative recursion: variables sorted by
// key, exponents never zero.  Much cheaper to merge and compare than the
// map-backed YMonomial.
using FlatMono = std::vector<std::pair<VarKey, int>>;

FlatMono flat_of(const YMonomial& m) {
    return FlatMono(m.exps().begin(), m.exps().end());
}

YMonomial unflat(const FlatMono& f) {
    YMonomial m;
    for (const auto& [k, e] : f) m.mul_var(k.first, k.second, e);
    return m;
}

FlatMono flat_mul(const FlatMono& a, const FlatMono& b) {
    FlatMono out;
    out.reserve(a.size() + b.size());
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
        if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first))
            out.push_back(a[ia++]);
        else if (ia == a.size() || b[ib].first < a[ia].first)
            out.push_back(b[ib++]);
        else {
            const int e = a[ia].second + b[ib].second;
            if (e != 0) out.emplace_back(a[ia].first, e);
            ++ia, ++ib;
        }
    }
    return out;
}

FlatMono flat_inverse(const FlatMono& a) {
    FlatMono out = a;
    for (auto& [k, e] : out) e = -e;
    return out;
}

// translation-invariant lexicographic order on Laurent monomials
bool lex_less(const FlatMono& a, const FlatMono& b) {
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
        const VarKey ka = (ia < a.size()) ? a[ia].first : VarKey{INT32_MAX, INT32_MAX};
        const VarKey kb = (ib < b.size()) ? b[ib].first : VarKey{INT32_MAX, INT32_MAX};
        if (ka == kb) {
            if (a[ia].second != b[ib].second) return a[ia].second < b[ib].second;
            ++ia, ++ib;
            continue;
        }
        // the earlier key has a nonzero exponent where the other has zero
        if (ka < kb) return a[ia].second < 0;
        return b[ib].second > 0;
    }
    return false;
}

struct LexLess {
    bool operator()(const FlatMono& a, const FlatMono& b) const { return lex_less(a, b); }
};
using Poly = std::map<FlatMono, i64, LexLess>; // largest term last

void poly_add(Poly& p, const FlatMono& m, i64 c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [m1, c1] : a)
        for (const auto& [m2, c2] : b) poly_add(out, flat_mul(m1, m2), c1 * c2);
    return out;
}

// exact division in the commutative Laurent-monomial ring; the terms are kept
// ordered by the division order so the leading term is O(1)
Poly poly_div(Poly num, const Poly& den) {
    if (den.empty()) throw std::invalid_argument("division by zero polynomial");
    const auto lead = std::prev(den.end());
    Poly out;
    while (!num.empty()) {
        const auto top = std::prev(num.end());
        if (top->second % lead->second != 0)
            throw std::runtime_error("polynomial division is not exact");
        const i64 c = top->second / lead->second;
        const FlatMono q = flat_mul(top->first, flat_inverse(lead->first));
        poly_add(out, q, c);
        for (const auto& [m, cd] : den) poly_add(num, flat_mul(q, m), -c * cd);
    }
    return out;
}

} // namespace

// Fundamental modules: iterated sl2-string expansion closure.
std::vector<YMonomial> QCharEngine::qchar_fundamental(int i, int r) const {
    const int k = 1;
    const CartanData& cd = cartan();
    std::set<YMonomial> seen;
    std::deque<YMonomial> queue;
    const YMonomial top = kr_monomial(i, k, r);
    seen.insert(top);
    queue.push_back(top);
    constexpr std::size_t kCap = 2'000'000;

    while (!queue.empty()) {
        const YMonomial m = queue.front();
        queue.pop_front();
        for (int j = 1; j <= cd.rank; ++j) {
            const int rj = cd.r[j - 1];
            // node-j content; expansion applies to j-dominant monomials only
            std::vector<int> ups;
            bool j_dominant = true;
            for (const auto& [vk, e] : m.exps()) {
                if (vk.first != j) continue;
                if (e < 0) {
                    j_dominant = false;
                    break;
                }
                if (e >= 2)
                    throw std::runtime_error("qchar_kr: thinness violated at " + m.str());
                ups.push_back(vk.second);
            }
            if (!j_dominant || ups.empty()) continue;
            std::sort(ups.begin(), ups.end());
            // maximal arithmetic strings of step 2 r_j; the sl2 restriction is
            // the tensor product of the string modules, so every combination
            // of partial top-down lowerings across the strings appears
            std::vector<std::vector<YMonomial>> chains; // per string: depth 1..len
            for (std::size_t a = 0; a < ups.size();) {
                std::size_t b = a + 1;
                while (b < ups.size() && ups[b] == ups[b - 1] + 2 * rj) ++b;
                const int topv = ups[b - 1];
                std::vector<YMonomial> chain;
                YMonomial acc;
                for (std::size_t l = 0; l < b - a; ++l) {
                    acc = acc * alg_.a_monomial(j, topv + rj - 2 * rj * static_cast<int>(l))
                                    .inverse();
                    chain.push_back(acc);
                }
                chains.push_back(std::move(chain));
                a = b;
            }
            std::vector<YMonomial> combos{YMonomial()};
            for (const auto& chain : chains) {
                std::vector<YMonomial> next = combos; // depth 0 for this string
                for (const auto& c : chain)
                    for (const auto& base : combos) next.push_back(base * c);
                combos = std::move(next);
            }
            for (const auto& c : combos) {
                if (c.is_one()) continue;
                const YMonomial cur = m * c;
                if (seen.insert(cur).second) {
                    if (seen.size() > kCap)
                        throw std::runtime_error("qchar_kr: monomial cap exceeded");
                    queue.push_back(cur);
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<YMonomial> QCharEngine::qchar_kr(int i, int k, int r) const {
    // q-characters are translation-covariant, so each (i, k) is computed for
    // one base parameter and shifted.
    const auto base_key = std::make_pair(i, k);
    if (auto it = qchar_memo_.find(base_key); it != qchar_memo_.end()) {
        const auto& [r0, chars] = it->second;
        if (r0 == r) return chars;
        std::vector<YMonomial> out;
        out.reserve(chars.size());
        for (const auto& m : chars) {
            YMonomial s;
            for (const auto& [vk, e] : m.exps()) s.mul_var(vk.first, vk.second + r - r0, e);
            out.push_back(std::move(s));
        }
        return out;
    }

    std::vector<YMonomial> out;
    if (k == 0) {
        out.push_back(YMonomial());
    } else if (k == 1) {
        out = qchar_fundamental(i, r);
    } else {
        // level recursion through the commutative shell of the T-system:
        // W_{k,r} = (W_{k-1,r} W_{k-1,r+2r_i} - S_{k-1,r}) / W_{k-2,r+2r_i}
        const int ri = cartan().r[i - 1];
        auto as_poly = [&](int ii, int kk, int rr) {
            Poly p;
            for (const auto& m : qchar_kr(ii, kk, rr)) poly_add(p, flat_of(m), 1);
            return p;
        };
        Poly num = poly_mul(as_poly(i, k - 1, r), as_poly(i, k - 1, r + 2 * ri));
        Poly s;
        poly_add(s, FlatMono(), 1);
        for (const auto& f : s_term(i, k - 1, r)) s = poly_mul(s, as_poly(f.i, f.k, f.r));
        for (const auto& [m, c] : s) poly_add(num, m, -c);
        const Poly q = poly_div(std::move(num), as_poly(i, k - 2, r + 2 * ri));
        for (const auto& [m, c] : q) {
            if (c != 1)
                throw std::runtime_error("qchar_kr: thinness violated at level " +
                                         std::to_string(k));
            out.push_back(unflat(m));
        }
    }
    qchar_memo_.emplace(base_key, std::make_pair(r, out));
    return out;
}

TorusElement QCharEngine::ft_kr(int i, int k, int r) const {
    TorusElement x;
    for (const auto& m : qchar_kr(i, k, r)) x.add(m, 0, 1);
    return x;
}

TorusElement QCharEngine::ft_kr_truncated(int i, int k, int r, const Window& w) const {
    return alg_.truncate(ft_kr(i, k, r), w);
}

TorusElement QCharEngine::et_standard(const YMonomial& m, const Window* w) const {
    if (!m.dominant())
        throw std::invalid_argument("et_standard needs a dominant monomial");
    // ordered product over increasing spectral parameter (node order within a
    // fixed parameter is immaterial: equal-parameter fundamentals commute up
    // to the normalization fixed below)
    std::vector<std::pair<VarKey, int>> vars(m.exps().begin(), m.exps().end());
    std::sort(vars.begin(), vars.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.first.second, a.first.first) <
               std::make_pair(b.first.second, b.first.first);
    });
    TorusElement x = alg_.underline(YMonomial());
    for (const auto& [vk, e] : vars)
        for (int c = 0; c < e; ++c) x = alg_.mul(x, ft_kr(vk.first, 1, vk.second));
    const auto lead = x.coeff(m).single_term();
    if (!lead || lead->second != 1)
        throw std::runtime_error("et_standard: leading coefficient is not a unit");
    x = x.shifted(-lead->first);
    if (w) x = alg_.truncate(x, *w);
    return x;
}

std::vector<YMonomial> QCharEngine::dominant_closure(const YMonomial& m,
                                                     const Window* w) const {
    std::set<YMonomial> seen{m};
    std::deque<YMonomial> queue{m};
    while (!queue.empty()) {
        const YMonomial x = queue.front();
        queue.pop_front();
        const TorusElement e = et_standard(x, w);
        for (const auto& [md, c] : e.terms())
            if (md.dominant() && seen.insert(md).second) queue.push_back(md);
    }
    // linear extension of the Nakajima order by repeated minimal selection
    std::vector<YMonomial> rest(seen.begin(), seen.end()), out;
    while (!rest.empty()) {
        std::size_t pick = rest.size();
        for (std::size_t a = 0; a < rest.size(); ++a) {
            bool minimal = true;
            for (std::size_t b = 0; b < rest.size() && minimal; ++b)
                if (a != b && alg_.nakajima_leq(rest[b], rest[a])) minimal = false;
            if (minimal && (pick == rest.size() || rest[a] < rest[pick])) pick = a;
        }
        if (pick == rest.size()) throw std::logic_error("Nakajima order has a cycle");
        out.push_back(rest[pick]);
        rest.erase(rest.begin() + pick);
    }
    if (!(out.back() == m)) throw std::logic_error("closure top is not m");
    return out;
}

TorusElement QCharEngine::axpy_sub(const TorusElement& x, const TLaurent& c,
                                   const TorusElement& y) {
    TorusElement out = x;
    for (const auto& [m, cy] : y.terms()) out.add(m, (c * cy).negated());
    return out;
}

QCharEngine::KLResult QCharEngine::kl_decompose(const YMonomial& m, const Window* w) const {
    KLResult res;
    res.basis = dominant_closure(m, w);
    const int N = static_cast<int>(res.basis.size());
    for (const auto& b : res.basis) res.et.push_back(et_standard(b, w));

    // bar(E_j) = sum_{i <= j} r_{ji} E_i by triangular peeling
    std::vector<std::vector<TLaurent>> rmat(N, std::vector<TLaurent>(N));
    for (int j = 0; j < N; ++j) {
        TorusElement x = alg_.bar(res.et[j]);
        for (int i = j; i >= 0; --i) {
            const TLaurent c = x.coeff(res.basis[i]);
            rmat[j][i] = c;
            if (!c.is_zero()) x = axpy_sub(x, c, res.et[i]);
        }
        if (!x.is_zero())
            throw std::runtime_error("bar image leaves the standard span");
    }

    // L_t(m_j) = sum_i q_i E_i with q_j = 1, bar-invariant, q_i in t^{-1}Z[t^{-1}]
    for (int j = 0; j < N; ++j) {
        std::vector<TLaurent> q(N);
        q[j] = TLaurent::one();
        for (int i = j - 1; i >= 0; --i) {
            TLaurent f;
            for (int l = i + 1; l <= j; ++l) f = f + q[l].bar() * rmat[l][i];
            if (!(f.bar() == f.negated()) || f.coeff(0) != 0)
                throw std::runtime_error("KL recursion: inconsistent bar data");
            TLaurent qi;
            for (const auto& [h, c] : f.coeffs())
                if (h < 0) qi.add(h, c);
            q[i] = qi;
        }
        TorusElement L;
        for (int i = 0; i <= j; ++i)
            if (!q[i].is_zero()) L = axpy_sub(L, q[i].negated(), res.et[i]);
        res.lt.push_back(L);
    }

    // expand E_t(m) in the canonical basis by peeling dominant coefficients
    res.p.assign(N, TLaurent());
    TorusElement x = res.et[N - 1];
    for (int j = N - 1; j >= 0; --j) {
        const TLaurent c = x.coeff(res.basis[j]);
        res.p[j] = c;
        if (!c.is_zero()) x = axpy_sub(x, c, res.lt[j]);
    }
    if (!x.is_zero())
        throw std::runtime_error("canonical expansion does not close");
    return res;
}

std::vector<KRIndex> QCharEngine::s_term(int i, int k, int r) const {
    const int n = cartan().rank;
    std::vector<KRIndex> out;
    auto push = [&](int ii, int kk, int rr) {
        if (ii >= 1 && ii <= n && kk >= 1) out.push_back({ii, kk, rr});
    };
    if (cartan().kind == Kind::A) {
        push(i - 1, k, r + 1);
        push(i + 1, k, r + 1);
        return out;
    }
    if (i <= n - 2) {
        push(i - 1, k, r + 2);
        push(i + 1, k, r + 2);
    } else if (i == n - 1) {
        push(n - 2, k, r + 2);
        push(n, 2 * k, r + 1);
    } else { // i == n
        if (k % 2 == 0) {
            push(n - 1, k / 2, r + 1);
            push(n - 1, k / 2, r + 3);
        } else {
            push(n - 1, (k + 1) / 2, r + 1);
            push(n - 1, (k - 1) / 2, r + 3);
        }
    }
    return out;
}

QCharEngine::TSystem QCharEngine::verify_tsystem(int i, int k, int r) const {
    const int ri = cartan().r[i - 1];
    TorusElement lhs = alg_.mul(ft_kr(i, k, r), ft_kr(i, k, r + 2 * ri));
    TorusElement rhs1 = alg_.mul(ft_kr(i, k + 1, r), ft_kr(i, k - 1, r + 2 * ri));

    TorusElement rhs2 = alg_.underline(YMonomial());
    YMonomial m2;
    for (const auto& f : s_term(i, k, r)) {
        rhs2 = alg_.mul(rhs2, ft_kr(f.i, f.k, f.r));
        m2 = m2 * kr_monomial(f.i, f.k, f.r);
    }

    const YMonomial m1 = kr_monomial(i, k + 1, r) * kr_monomial(i, k - 1, r + 2 * ri);
    const auto c0 = lhs.coeff(m1).single_term();
    const auto c1 = rhs1.coeff(m1).single_term();
    if (!c0 || !c1) throw std::runtime_error("T-system: cannot isolate alpha");
    const int alpha = c0->first - c1->first;
    if (c0->second != c1->second) throw std::runtime_error("T-system: alpha mismatch");

    rhs1.shift_inplace(alpha);
    lhs -= rhs1;
    const auto c2 = lhs.coeff(m2).single_term();
    const auto c3 = rhs2.coeff(m2).single_term();
    if (!c2 || !c3) throw std::runtime_error("T-system: cannot isolate beta");
    const int beta = c2->first - c3->first;
    rhs2.shift_inplace(beta);
    if (!(lhs == rhs2)) throw std::runtime_error("T-system identity fails");
    return {alpha, beta};
}

} // namespace qtb
