#pragma once
// Truncated (q,t)-characters: thin Kirillov-Reshetikhin q-characters, their
// canonical t-lifts, the standard/canonical bases E_t / L_t with the
// triangular bar-fixed-point recursion, and the quantum T-system checker.

#include "qtb/torus.hpp"

namespace qtb {

struct KRIndex {
    int i = 0, k = 0, r = 0; // node, level, spectral parameter
    bool operator==(const KRIndex& o) const { return i == o.i && k == o.k && r == o.r; }
    bool operator<(const KRIndex& o) const {
        return std::tie(i, k, r) < std::tie(o.i, o.k, o.r);
    }
};

class QCharEngine {
public:
    QCharEngine(const CartanData& cd, int depth);

    const TorusAlgebra& torus() const { return alg_; }
    const CartanData& cartan() const { return alg_.cartan(); }

    YMonomial kr_monomial(int i, int k, int r) const;

    // Commutative q-character of the (thin) KR module, as a monomial list with
    // all multiplicities 1; throws if a multiplicity >= 2 ever appears.
    std::vector<YMonomial> qchar_kr(int i, int k, int r) const;

    // Canonical t-lift F_t: sum of underline(m) over the thin q-character.
    TorusElement ft_kr(int i, int k, int r) const;
    TorusElement ft_kr_truncated(int i, int k, int r, const Window& w) const;

    // Standard basis element: normalized ordered product of fundamental lifts;
    // truncated at the end when a window is given.
    TorusElement et_standard(const YMonomial& m, const Window* w = nullptr) const;

    // All dominant monomials appearing in the iterated standard-basis closure
    // below m, sorted by a linear extension of the Nakajima order (m last).
    std::vector<YMonomial> dominant_closure(const YMonomial& m,
                                            const Window* w = nullptr) const;

    struct KLResult {
        std::vector<YMonomial> basis;     // ascending, basis.back() == m
        std::vector<TorusElement> et;     // E_t(m_j)
        std::vector<TorusElement> lt;     // L_t(m_j)
        std::vector<TLaurent> p;          // E_t(m) = sum_j p[j] L_t(m_j)
    };
    KLResult kl_decompose(const YMonomial& m, const Window* w = nullptr) const;

    // The right-hand tail of the quantum T-system for (i,k,r); empty factors
    // (node 0 or level 0) are dropped.
    std::vector<KRIndex> s_term(int i, int k, int r) const;

    struct TSystem {
        int alpha_half = 0, beta_half = 0; // t^{alpha_half/2}, t^{beta_half/2}
    };
    // Verifies the quantum T-system identity exactly and returns the two
    // t-powers; throws if the identity fails.
    TSystem verify_tsystem(int i, int k, int r) const;

    // helper: x - c * y (coefficientwise TLaurent scaling)
    static TorusElement axpy_sub(const TorusElement& x, const TLaurent& c,
                                 const TorusElement& y);

private:
    std::vector<YMonomial> qchar_fundamental(int i, int r) const;

    TorusAlgebra alg_;
    // per (i, k): base parameter and its character; other parameters shift
    mutable std::map<std::pair<int, int>, std::pair<int, std::vector<YMonomial>>> qchar_memo_;
};

} // namespace qtb
