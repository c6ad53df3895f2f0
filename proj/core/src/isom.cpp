#include "qtb/isom.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qtb {

namespace {

std::string label_str(int i, int r) {
    std::ostringstream os;
    os << "(" << i << "," << r << ")";
    return os.str();
}

} // namespace

int PhiT::position_of(int res, int rr) const {
    for (int k = 0; k < static_cast<int>(order.size()); ++k) {
        const ARVertex& v = tq.bar.verts[order[k]];
        if (v.res == res && v.rr == rr) return k;
    }
    return -1;
}

PhiT build_phiT(const TwistedQuiver& tq) {
    PhiT phi;
    phi.tq = tq;
    phi.pair = twisted_initial_pair(tq, &phi.order);
    phi.window = window_of(tq);
    const CartanData cb = build_cartan(Kind::B, tq.n);
    for (int k = 0; k < phi.pair.size(); ++k) {
        const ARVertex& v = tq.bar.verts[phi.order[k]];
        const int height = k_of(tq, v.res, v.rr);
        YMonomial m;
        for (int s = 0; s < height; ++s)
            m.mul_var(v.res, v.rr + 2 * cb.r[v.res - 1] * s, 1);
        phi.images.push_back(m);
    }
    return phi;
}

TorusAlgebra window_algebra(const TwistedQuiver& tq, int margin) {
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [i, r] : window_of(tq)) {
        (void)i;
        if (first) lo = hi = r, first = false;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return TorusAlgebra(build_cartan(Kind::B, tq.n), hi - lo + margin);
}

void verify_hom(const PhiT& phi, const TorusAlgebra& alg) {
    const int L = phi.pair.size();
    for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b) {
            const i64 lhs = phi.pair.lambda[a][b];
            const i64 rhs = -alg.pair_n(phi.images[a], phi.images[b]);
            if (lhs != rhs) {
                const ARVertex& va = phi.tq.bar.verts[phi.order[a]];
                const ARVertex& vb = phi.tq.bar.verts[phi.order[b]];
                throw std::logic_error("verify_hom: Lambda" + label_str(va.res, va.rr) +
                                       label_str(vb.res, vb.rr) + " = " + std::to_string(lhs) +
                                       " but -N(images) = " + std::to_string(rhs));
            }
        }
}

void verify_hatX(const PhiT& phi, const TorusAlgebra& alg) {
    const CartanData& cb = alg.cartan();
    const int L = phi.pair.size();
    for (int v = 0; v < L; ++v) {
        if (!phi.pair.ex[v]) continue;
        const ARVertex& lv = phi.tq.bar.verts[phi.order[v]];
        YMonomial g;
        for (int j = 0; j < L; ++j) {
            const i64 b = phi.pair.btilde[j][v];
            if (b != 0) g = g * phi.images[j].pow(static_cast<int>(b));
        }
        const YMonomial expect = alg.a_monomial(lv.res, lv.rr - cb.r[lv.res - 1]).inverse();
        if (!(g == expect))
            throw std::logic_error("verify_hatX: column image at " + label_str(lv.res, lv.rr) +
                                   " is " + g.str() + ", expected " + expect.str());
    }
}

int xi_prime(const TwistedQuiver& tq, int imath) {
    const int n = tq.n;
    if (imath < 1 || imath > 2 * n - 1)
        throw std::invalid_argument("xi_prime: residue out of range");
    if (tq.flat == Flat::Greater && imath == n)
        return tq.base.xi.at(n - 1) + tq.base.xi.at(n);
    return max_rr_of_row(tq.hat, imath);
}

VarKey pi_vertex(const TwistedQuiver& tq, int imath) {
    const int n = tq.n;
    const int fold = (imath <= n) ? imath : 2 * n - imath;
    return {fold, xi_prime(tq, imath)};
}

void verify_frozen_relations(const PhiT& phi, const TorusAlgebra& alg) {
    const TwistedQuiver& tq = phi.tq;
    const CartanData& cb = alg.cartan();
    const int n = tq.n;
    const int na = 2 * n - 1;

    std::vector<int> xip(na + 1);
    std::vector<VarKey> pi(na + 1);
    for (int im = 1; im <= na; ++im) {
        xip[im] = xi_prime(tq, im);
        pi[im] = pi_vertex(tq, im);
        if (phi.window.count(pi[im]) == 0)
            throw std::logic_error("frozen generator " + label_str(pi[im].first, pi[im].second) +
                                   " is outside the window");
        const int height = k_of(tq, pi[im].first, pi[im].second);
        const bool spin_adjust = (tq.flat == Flat::Greater && im == n);
        if (height != (spin_adjust ? 2 : 1))
            throw std::logic_error("frozen generator at " +
                                   label_str(pi[im].first, pi[im].second) +
                                   " is not at the expected column height");
    }

    // Reachability in the height-order graph: arrows i -> j for |i-j| = 1
    // with xi'_j > xi'_i.
    std::vector<std::vector<bool>> reach(na + 1, std::vector<bool>(na + 1, false));
    for (int from = 1; from <= na; ++from) {
        std::deque<int> queue{from};
        reach[from][from] = true;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : {u - 1, u + 1}) {
                if (w < 1 || w > na || reach[from][w] || xip[w] <= xip[u]) continue;
                reach[from][w] = true;
                queue.push_back(w);
            }
        }
    }

    for (int im = 1; im <= na; ++im)
        for (int jm = 1; jm <= na; ++jm) {
            if (im == jm) continue;
            const i64 g = alg.gamma(pi[im].first, pi[im].second, pi[jm].first, pi[jm].second);
            if (xip[im] > xip[jm]) {
                const i64 expect = reach[jm][im] ? 1 : 0;
                if (g != expect)
                    throw std::logic_error(
                        "frozen commutation at " + label_str(pi[im].first, pi[im].second) + " / " +
                        label_str(pi[jm].first, pi[jm].second) + ": gamma = " + std::to_string(g) +
                        ", expected " + std::to_string(expect));
            } else if (xip[im] == xip[jm] && g != 0) {
                throw std::logic_error("frozen generators at equal height fail to commute");
            }
        }

    // Commutation of the frozen generators against each exchangeable
    // A-inverse image.
    const int spin_top = max_rr_of_row(tq.hat, n);
    for (int v = 0; v < phi.pair.size(); ++v) {
        if (!phi.pair.ex[v]) continue;
        const ARVertex& lv = phi.tq.bar.verts[phi.order[v]];
        const YMonomial ahat = alg.a_monomial(lv.res, lv.rr - cb.r[lv.res - 1]).inverse();
        for (int im = 1; im <= na; ++im) {
            i64 e;
            if (tq.flat == Flat::Greater && im == n) {
                e = 2 * (lv.res == n && lv.rr == spin_top ? 1 : 0) -
                    2 * (pi[im] == VarKey{lv.res, lv.rr} ? 1 : 0);
            } else {
                e = -2 * (pi[im] == VarKey{lv.res, lv.rr} ? 1 : 0);
            }
            const i64 got = alg.pair_n(YMonomial::var(pi[im].first, pi[im].second), ahat);
            if (got != -e)
                throw std::logic_error("frozen/exchangeable commutation fails at " +
                                       label_str(pi[im].first, pi[im].second) + " vs " +
                                       label_str(lv.res, lv.rr));
        }
    }
}

namespace {

void require_member(const Window& w, int i, int r, const std::string& what) {
    if (w.count({i, r}) == 0)
        throw std::logic_error("kr_exchange_check: expected " + label_str(i, r) +
                               " in the window (" + what + ")");
}

} // namespace

void kr_exchange_check(const PhiT& phi, const QCharEngine& eng, VarKey v, int s) {
    const TwistedQuiver& tq = phi.tq;
    const int n = tq.n;
    const auto [i, r] = v;
    const CartanData& cb = eng.cartan();
    const int ri = cb.r[i - 1];
    if (phi.window.count(v) == 0)
        throw std::invalid_argument("kr_exchange_check: vertex outside the window");
    const int height = k_of(tq, i, r);
    if (height < 2 || s < 1 || s > height - 1)
        throw std::invalid_argument("kr_exchange_check: level out of range");

    // (a) The exchange neighbours of the determinantal identity, read off the
    // window, must match the tail factors of the T-system branch by branch.
    std::vector<KRIndex> expect;
    if (i <= n - 2) {
        for (int j : {i - 1, i + 1}) {
            if (j < 1) continue;
            require_member(phi.window, j, r + 2, "neighbour column");
            require_member(phi.window, j, r + 4 * s - 2, "neighbour column end");
            expect.push_back({j, s, r + 2});
        }
    } else if (i == n - 1) {
        if (n >= 3) {
            require_member(phi.window, n - 2, r + 2, "neighbour column");
            require_member(phi.window, n - 2, r + 4 * s - 2, "neighbour column end");
            expect.push_back({n - 2, s, r + 2});
        }
        require_member(phi.window, n, r + 1, "spin column");
        require_member(phi.window, n, r + 4 * s - 1, "spin column end");
        expect.push_back({n, 2 * s, r + 1});
    } else { // i == n
        require_member(phi.window, n - 1, r + 1, "short column");
        require_member(phi.window, n - 1, r + 2 * s - 1, "short column end");
        if (s % 2 == 0) {
            require_member(phi.window, n - 1, r + 3, "short column");
            require_member(phi.window, n - 1, r + 2 * s - 3, "short column end");
            expect.push_back({n - 1, s / 2, r + 1});
            expect.push_back({n - 1, s / 2, r + 3});
        } else {
            if (s > 1) {
                require_member(phi.window, n - 1, r + 3, "short column");
                require_member(phi.window, n - 1, r + 2 * s - 3, "short column end");
            }
            expect.push_back({n - 1, (s + 1) / 2, r + 1});
            if (s > 1) expect.push_back({n - 1, (s - 1) / 2, r + 3});
        }
    }
    std::vector<KRIndex> got = eng.s_term(i, s, r);
    auto key = [](const KRIndex& x) { return std::tie(x.i, x.k, x.r); };
    std::sort(expect.begin(), expect.end(),
              [&](const KRIndex& a, const KRIndex& b) { return key(a) < key(b); });
    std::sort(got.begin(), got.end(),
              [&](const KRIndex& a, const KRIndex& b) { return key(a) < key(b); });
    if (!(expect == got))
        throw std::logic_error("kr_exchange_check: exchange neighbours at " + label_str(i, r) +
                               " level " + std::to_string(s) +
                               " do not match the T-system tail");

    // (b) The truncated quantum T-system instance, with the t-powers of the
    // untruncated identity.  Truncation is an algebra homomorphism on the
    // windowed Grothendieck ring, so the products of truncated factors must
    // satisfy the same relation.
    const QCharEngine::TSystem ts = eng.verify_tsystem(i, s, r);
    const TorusAlgebra& alg = eng.torus();
    const Window& w = phi.window;
    const TorusElement lhs =
        alg.mul(eng.ft_kr_truncated(i, s, r, w), eng.ft_kr_truncated(i, s, r + 2 * ri, w));
    const TorusElement rhs1 =
        alg.mul(eng.ft_kr_truncated(i, s + 1, r, w), eng.ft_kr_truncated(i, s - 1, r + 2 * ri, w));
    TorusElement rhs2;
    rhs2.add(YMonomial(), TLaurent::one());
    for (const KRIndex& x : eng.s_term(i, s, r))
        rhs2 = alg.mul(rhs2, eng.ft_kr_truncated(x.i, x.k, x.r, w));
    const TorusElement diff =
        lhs - rhs1.shifted(ts.alpha_half) - rhs2.shifted(ts.beta_half);
    if (!diff.is_zero())
        throw std::logic_error("kr_exchange_check: truncated T-system fails at " +
                               label_str(i, r) + " level " + std::to_string(s));
}

} // namespace qtb
