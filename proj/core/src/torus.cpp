#include "qtb/torus.hpp"

#include <sstream>

namespace qtb {

YMonomial YMonomial::var(int i, int r, int e) {
    YMonomial m;
    m.mul_var(i, r, e);
    return m;
}

int YMonomial::exp(int i, int r) const {
    auto it = exps_.find({i, r});
    return it == exps_.end() ? 0 : it->second;
}

void YMonomial::mul_var(int i, int r, int e) {
    if (e == 0) return;
    auto [it, inserted] = exps_.try_emplace({i, r}, e);
    if (!inserted) {
        it->second += e;
        if (it->second == 0) exps_.erase(it);
    }
}

YMonomial YMonomial::operator*(const YMonomial& o) const {
    YMonomial out = *this;
    for (const auto& [k, e] : o.exps_) out.mul_var(k.first, k.second, e);
    return out;
}

YMonomial YMonomial::inverse() const { return pow(-1); }

YMonomial YMonomial::pow(int e) const {
    YMonomial out;
    if (e == 0) return out;
    for (const auto& [k, x] : exps_) out.exps_[k] = x * e;
    return out;
}

bool YMonomial::dominant() const {
    for (const auto& [k, e] : exps_)
        if (e < 0) return false;
    return true;
}

bool YMonomial::thin() const {
    for (const auto& [k, e] : exps_)
        if (e < -1 || e > 1) return false;
    return true;
}

std::string YMonomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << "Y(" << k.first << "," << k.second << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

TLaurent TLaurent::halfpow_unit(int h, i64 c) {
    TLaurent p;
    p.add(h, c);
    return p;
}

void TLaurent::add(int h, i64 c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(h, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

TLaurent TLaurent::operator+(const TLaurent& o) const {
    TLaurent out = *this;
    for (const auto& [h, c] : o.coeffs_) out.add(h, c);
    return out;
}

TLaurent TLaurent::operator-(const TLaurent& o) const {
    TLaurent out = *this;
    for (const auto& [h, c] : o.coeffs_) out.add(h, -c);
    return out;
}

TLaurent TLaurent::operator*(const TLaurent& o) const {
    TLaurent out;
    for (const auto& [h1, c1] : coeffs_)
        for (const auto& [h2, c2] : o.coeffs_) out.add(h1 + h2, c1 * c2);
    return out;
}

TLaurent TLaurent::shifted(int dh) const {
    TLaurent out;
    for (const auto& [h, c] : coeffs_) out.coeffs_[h + dh] = c;
    return out;
}

TLaurent TLaurent::bar() const {
    TLaurent out;
    for (const auto& [h, c] : coeffs_) out.coeffs_[-h] = c;
    return out;
}

TLaurent TLaurent::negated() const {
    TLaurent out;
    for (const auto& [h, c] : coeffs_) out.coeffs_[h] = -c;
    return out;
}

std::optional<std::pair<int, i64>> TLaurent::single_term() const {
    if (coeffs_.size() != 1) return std::nullopt;
    return *coeffs_.begin();
}

i64 TLaurent::eval_t1() const {
    i64 s = 0;
    for (const auto& [h, c] : coeffs_) s += c;
    return s;
}

i64 TLaurent::coeff(int h) const {
    auto it = coeffs_.find(h);
    return it == coeffs_.end() ? 0 : it->second;
}

std::string TLaurent::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [h, c] : coeffs_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const i64 a = c < 0 ? -c : c;
        if (h == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t^(" << h << "/2)";
        }
    }
    return os.str();
}

void TorusElement::add(const YMonomial& m, const TLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TorusElement::add(const YMonomial& m, int halfpow, i64 coeff) {
    add(m, TLaurent::halfpow_unit(halfpow, coeff));
}

TLaurent TorusElement::coeff(const YMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? TLaurent() : it->second;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
    TorusElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add(m, c);
    return out;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
    TorusElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add(m, c.negated());
    return out;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c.negated());
    return *this;
}

TorusElement TorusElement::shifted(int dh) const {
    TorusElement out;
    for (const auto& [m, c] : terms_) out.add(m, c.shifted(dh));
    return out;
}

void TorusElement::shift_inplace(int dh) {
    for (auto& [m, c] : terms_) c = c.shifted(dh);
}

void TorusElement::append_max(YMonomial m, TLaurent c) {
    if (c.is_zero()) return;
    terms_.emplace_hint(terms_.end(), std::move(m), std::move(c));
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*[" << m.str() << "]";
    }
    return os.str();
}

TorusAlgebra::TorusAlgebra(const CartanData& cd, int depth)
    : cd_(cd), inv_(cd, depth) {
    gamma_off_ = depth + 8;
    const std::size_t pairs = static_cast<std::size_t>(cd_.rank) * cd_.rank;
    gamma_val_.assign(pairs, std::vector<i64>(2 * gamma_off_ + 1, 0));
    gamma_known_.assign(pairs, std::vector<char>(2 * gamma_off_ + 1, 0));
}

i64 TorusAlgebra::gamma(int i, int r, int j, int s) const {
    if (i == j && r == s) return 0;
    const int rj = cd_.r[j - 1];
    const int d = s - r; // gamma depends on the spectral difference only
    auto compute = [&]() {
        return inv_.at(j, i, -rj + d) + inv_.at(j, i, rj - d) - inv_.at(j, i, rj + d) -
               inv_.at(j, i, -rj - d);
    };
    if (d < -gamma_off_ || d > gamma_off_) return compute();
    const std::size_t pair = static_cast<std::size_t>(i - 1) * cd_.rank + (j - 1);
    const std::size_t slot = static_cast<std::size_t>(d + gamma_off_);
    if (!gamma_known_[pair][slot]) {
        gamma_val_[pair][slot] = compute();
        gamma_known_[pair][slot] = 1;
    }
    return gamma_val_[pair][slot];
}

i64 TorusAlgebra::pair_n(const YMonomial& m1, const YMonomial& m2) const {
    i64 n = 0;
    for (const auto& [k1, e1] : m1.exps())
        for (const auto& [k2, e2] : m2.exps())
            n += i64(e1) * e2 * gamma(k1.first, k1.second, k2.first, k2.second);
    return n;
}

TorusElement TorusAlgebra::mul(const TorusElement& a, const TorusElement& b) const {
    // flat monomial encoding keeps the inner loop free of tree allocations
    using Flat = std::vector<std::pair<VarKey, int>>;
    auto flatten = [](const TorusElement& x) {
        std::vector<std::pair<Flat, const TLaurent*>> out;
        out.reserve(x.terms().size());
        for (const auto& [m, c] : x.terms())
            out.emplace_back(Flat(m.exps().begin(), m.exps().end()), &c);
        return out;
    };
    const auto ta = flatten(a), tb = flatten(b);
    // index the distinct right-hand variables so the pairing is a short dot
    // product per term pair instead of a double loop over variables
    std::map<VarKey, int> vindex;
    for (const auto& [f2, c2] : tb) {
        (void)c2;
        for (const auto& [k, e] : f2) {
            (void)e;
            vindex.try_emplace(k, static_cast<int>(vindex.size()));
        }
    }
    std::vector<VarKey> vkeys(vindex.size());
    for (const auto& [k, id] : vindex) vkeys[id] = k;
    std::vector<std::vector<std::pair<int, int>>> tb_idx(tb.size()); // (var id, exp)
    for (std::size_t t = 0; t < tb.size(); ++t)
        for (const auto& [k, e] : tb[t].first) tb_idx[t].emplace_back(vindex.at(k), e);

    std::map<Flat, TLaurent> acc;
    Flat prod;
    std::vector<i64> g(vkeys.size());
    for (const auto& [f1, c1] : ta) {
        for (std::size_t v = 0; v < vkeys.size(); ++v) {
            i64 s = 0;
            for (const auto& [k1, e1] : f1)
                s += i64(e1) * gamma(k1.first, k1.second, vkeys[v].first, vkeys[v].second);
            g[v] = s;
        }
        for (std::size_t t = 0; t < tb.size(); ++t) {
            const auto& f2 = tb[t].first;
            const TLaurent* c2 = tb[t].second;
            i64 n = 0;
            for (const auto& [vi, e2] : tb_idx[t]) n += i64(e2) * g[vi];
            prod.clear();
            std::size_t i1 = 0, i2 = 0;
            while (i1 < f1.size() || i2 < f2.size()) {
                if (i2 == f2.size() || (i1 < f1.size() && f1[i1].first < f2[i2].first))
                    prod.push_back(f1[i1++]);
                else if (i1 == f1.size() || f2[i2].first < f1[i1].first)
                    prod.push_back(f2[i2++]);
                else {
                    const int e = f1[i1].second + f2[i2].second;
                    if (e != 0) prod.emplace_back(f1[i1].first, e);
                    ++i1, ++i2;
                }
            }
            TLaurent& slot = acc[prod];
            for (const auto& [h1, v1] : c1->coeffs())
                for (const auto& [h2, v2] : c2->coeffs())
                    slot.add(h1 + h2 + static_cast<int>(n), v1 * v2);
        }
    }
    TorusElement out;
    for (auto& [f, c] : acc) {
        if (c.is_zero()) continue;
        YMonomial m;
        for (const auto& [k, e] : f) m.mul_var(k.first, k.second, e);
        // acc is ordered compatibly with YMonomial comparison
        out.append_max(std::move(m), std::move(c));
    }
    return out;
}

TorusElement TorusAlgebra::bar(const TorusElement& x) const {
    TorusElement out;
    for (const auto& [m, c] : x.terms()) out.add(m, c.bar());
    return out;
}

TorusElement TorusAlgebra::underline(const YMonomial& m) const {
    TorusElement out;
    out.add(m, 0, 1);
    return out;
}

YMonomial TorusAlgebra::a_monomial(int i, int r) const {
    const int ri = cd_.r[i - 1];
    YMonomial m = YMonomial::var(i, r - ri) * YMonomial::var(i, r + ri);
    for (int j = 1; j <= cd_.rank; ++j) {
        if (j == i) continue;
        switch (cd_.c[j - 1][i - 1]) {
            case -1: m.mul_var(j, r, -1); break;
            case -2:
                m.mul_var(j, r - 1, -1);
                m.mul_var(j, r + 1, -1);
                break;
            case -3:
                m.mul_var(j, r - 2, -1);
                m.mul_var(j, r, -1);
                m.mul_var(j, r + 2, -1);
                break;
            default: break;
        }
    }
    return m;
}

bool TorusAlgebra::nakajima_leq(const YMonomial& m1, const YMonomial& m2) const {
    // Feasibility precheck: the per-node exponent totals of m2/m1 must be a
    // nonnegative integer combination of Cartan columns.
    YMonomial diff = m2 * m1.inverse();
    if (diff.is_one()) return true;
    WeightVector tot(cd_.rank, 0);
    for (const auto& [k, e] : diff.exps()) tot[k.first - 1] += e;
    std::vector<i64> budget;
    try {
        budget = to_alpha_basis(cd_, tot);
    } catch (const std::exception&) {
        return false;
    }
    for (i64 b : budget)
        if (b < 0) return false;

    // Peel greedily from the lowest spectral position: each A_{i,s+r_i}
    // contributes its unique minimal variable Y_{i,s} positively.
    while (!diff.is_one()) {
        // min over (r, i)
        auto best = diff.exps().end();
        for (auto it = diff.exps().begin(); it != diff.exps().end(); ++it) {
            if (best == diff.exps().end() ||
                std::make_pair(it->first.second, it->first.first) <
                    std::make_pair(best->first.second, best->first.first))
                best = it;
        }
        const int i = best->first.first, s = best->first.second, e = best->second;
        if (e < 0) return false;
        if (budget[i - 1] < e) return false;
        budget[i - 1] -= e;
        diff = diff * a_monomial(i, s + cd_.r[i - 1]).pow(-e);
    }
    return true;
}

bool TorusAlgebra::in_window(const YMonomial& m, const Window& window) {
    for (const auto& [k, e] : m.exps())
        if (!window.count(k)) return false;
    return true;
}

TorusElement TorusAlgebra::truncate(const TorusElement& x, const Window& window) const {
    TorusElement out;
    for (const auto& [m, c] : x.terms())
        if (in_window(m, window)) out.add(m, c);
    return out;
}

} // namespace qtb
