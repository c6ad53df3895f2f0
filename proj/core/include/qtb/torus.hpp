#pragma once
// The quantum torus Y_t attached to a Cartan datum: Laurent polynomials in
// t^{1/2} over commutative monomials in the variables Y_{i,r}, multiplied via
// the two-variable pairing gamma built from the inverse quantum Cartan matrix.

#include "qtb/cartan.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace qtb {

// Exponent of a single variable Y_{i,r}; keys sort by (i, r).
using VarKey = std::pair<int, int>;

// A commutative Laurent monomial in the Y_{i,r}; exponents never zero.
class YMonomial {
public:
    YMonomial() = default;

    static YMonomial var(int i, int r, int e = 1);
    int exp(int i, int r) const;
    void mul_var(int i, int r, int e);

    YMonomial operator*(const YMonomial& o) const;
    YMonomial inverse() const;
    YMonomial pow(int e) const;

    bool dominant() const; // all exponents nonnegative
    bool thin() const;     // all exponents in {-1, 0, 1}
    bool is_one() const { return exps_.empty(); }
    const std::map<VarKey, int>& exps() const { return exps_; }

    bool operator==(const YMonomial& o) const { return exps_ == o.exps_; }
    bool operator<(const YMonomial& o) const { return exps_ < o.exps_; }

    std::string str() const;

private:
    std::map<VarKey, int> exps_;
};

// Laurent polynomial in t^{1/2}: halfpow -> coefficient (t^{h/2}).
class TLaurent {
public:
    TLaurent() = default;
    static TLaurent one() { return halfpow_unit(0); }
    static TLaurent halfpow_unit(int h, i64 c = 1);

    void add(int h, i64 c);
    TLaurent operator+(const TLaurent& o) const;
    TLaurent operator-(const TLaurent& o) const;
    TLaurent operator*(const TLaurent& o) const;
    TLaurent shifted(int dh) const; // multiply by t^{dh/2}
    TLaurent bar() const;           // t^{1/2} -> t^{-1/2}
    TLaurent negated() const;

    bool is_zero() const { return coeffs_.empty(); }
    // If this is c * t^{h/2} with a single term, return (h, c).
    std::optional<std::pair<int, i64>> single_term() const;
    i64 eval_t1() const; // specialize t^{1/2} -> 1
    i64 coeff(int h) const;
    const std::map<int, i64>& coeffs() const { return coeffs_; }

    bool operator==(const TLaurent& o) const { return coeffs_ == o.coeffs_; }
    std::string str() const;

private:
    std::map<int, i64> coeffs_; // halfpow -> coeff, never zero
};

// An element of the quantum torus in the bar-invariant basis:
// sum of terms coeff(t^{1/2}) * underline(m), m a commutative monomial.
class TorusElement {
public:
    TorusElement() = default;

    void add(const YMonomial& m, const TLaurent& c);
    void add(const YMonomial& m, int halfpow, i64 coeff);
    const std::map<YMonomial, TLaurent>& terms() const { return terms_; }
    TLaurent coeff(const YMonomial& m) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // append a term known to sort after every existing one (no lookup)
    void append_max(YMonomial m, TLaurent c);

    TorusElement operator+(const TorusElement& o) const;
    TorusElement operator-(const TorusElement& o) const;
    TorusElement& operator-=(const TorusElement& o);
    TorusElement shifted(int dh) const;
    void shift_inplace(int dh);

    bool operator==(const TorusElement& o) const { return terms_ == o.terms_; }
    std::string str() const;

private:
    std::map<YMonomial, TLaurent> terms_; // coeffs never zero
};

// Spectral-parameter windows: the set of allowed variables (i, r).
using Window = std::set<VarKey>;

class TorusAlgebra {
public:
    // depth: how far the inverse quantum Cartan table is expanded; all gamma
    // evaluations must stay within it (enforced).
    TorusAlgebra(const CartanData& cd, int depth);

    const CartanData& cartan() const { return cd_; }
    const InverseQCartanTable& inverse_table() const { return inv_; }

    // gamma(i, r; j, s): the skew-symmetric pairing controlling
    // underline(Y_{i,r}) underline(Y_{j,s}) = t^{gamma} underline(Y_{j,s}) underline(Y_{i,r}).
    i64 gamma(int i, int r, int j, int s) const;

    // N(m1, m2) = sum over variable pairs of exponents times gamma.
    i64 pair_n(const YMonomial& m1, const YMonomial& m2) const;

    // underline(m1) underline(m2) = t^{N(m1,m2)/2} underline(m1 m2).
    TorusElement mul(const TorusElement& a, const TorusElement& b) const;

    // bar antiautomorphism: fixes every underline(m), bars coefficients.
    TorusElement bar(const TorusElement& x) const;

    TorusElement underline(const YMonomial& m) const;

    // A_{i,r} as a commutative monomial.
    YMonomial a_monomial(int i, int r) const;

    // Nakajima partial order: m1 <= m2 iff m1 = m2 * prod A_{i,r}^{-v}, v >= 0.
    bool nakajima_leq(const YMonomial& m1, const YMonomial& m2) const;

    // Restrict to terms supported inside the window.
    TorusElement truncate(const TorusElement& x, const Window& window) const;
    static bool in_window(const YMonomial& m, const Window& window);

private:
    CartanData cd_;
    InverseQCartanTable inv_;
    // gamma is translation-invariant: dense cache indexed by (i, j, s - r)
    int gamma_off_ = 0;
    mutable std::vector<std::vector<i64>> gamma_val_;
    mutable std::vector<std::vector<char>> gamma_known_;
};

} // namespace qtb
