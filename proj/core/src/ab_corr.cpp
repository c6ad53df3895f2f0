#include "qtb/ab_corr.hpp"

#include <algorithm>
#include <sstream>

namespace qtb {

namespace {

std::string cell_str(VarKey c) {
    std::ostringstream os;
    os << "(" << c.first << "," << c.second << ")";
    return os.str();
}

i64 take(ParamMap& c, VarKey k) {
    auto it = c.find(k);
    if (it == c.end()) return 0;
    const i64 v = it->second;
    c.erase(it);
    return v;
}

void put(ParamMap& c, VarKey k, i64 v) {
    if (v < 0) throw std::logic_error("negative transported parameter");
    if (v != 0) c[k] = v;
}

} // namespace

bool is_well_arranged(const WellArrangedMap& d) {
    std::map<int, std::vector<int>> cols;
    for (const auto& [i, rr] : d.supp) cols[rr].push_back(i);
    for (auto& [rr, res] : cols) {
        (void)rr;
        std::sort(res.begin(), res.end());
        for (std::size_t k = 1; k < res.size(); ++k)
            if (res[k] - res[k - 1] < 2) return false;
    }
    return true;
}

std::vector<int> column_reading(const WellArrangedMap& d) {
    std::map<int, std::vector<int>, std::greater<int>> cols;
    for (const auto& [i, rr] : d.supp) cols[rr].push_back(i);
    std::vector<int> word;
    for (auto& [rr, res] : cols) {
        (void)rr;
        std::sort(res.begin(), res.end());
        word.insert(word.end(), res.begin(), res.end());
    }
    return word;
}

WellArrangedMap delta_B(int n) {
    if (n < 2) throw std::invalid_argument("delta_B needs n >= 2");
    WellArrangedMap d;
    d.n = n;
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 0; k <= 2 * n - 2 - i; ++k) d.supp.insert({i, -2 * i + 2 - 4 * k});
    for (int k = 0; k <= 2 * n - 2; ++k) d.supp.insert({n, -2 * n + 3 - 2 * k});
    for (int i = n + 1; i <= 2 * n - 1; ++i)
        for (int k = 0; k <= 2 * n - 1 - i; ++k) d.supp.insert({i, -2 * i + 4 - 4 * k});
    if (!is_well_arranged(d)) throw std::logic_error("delta_B is not well-arranged");
    return d;
}

WellArrangedMap delta_A_hat(int n) {
    if (n < 2) throw std::invalid_argument("delta_A_hat needs n >= 2");
    WellArrangedMap d;
    d.n = n;
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 0; k <= n - 1 - i; ++k) d.supp.insert({i, -2 * i + 2 - 4 * k});
    for (int i = 1; i <= n; ++i) d.supp.insert({i, -4 * n + 2 * i + 3});
    for (int i = 2; i <= n; ++i)
        for (int k = 0; k <= i - 2; ++k) d.supp.insert({i, -4 * n + 2 * i - 4 * k});
    for (int i = 1; i <= n - 1; ++i) d.supp.insert({i, -4 * n - 2 * i + 5});
    for (int i = 1; i <= n - 2; ++i)
        for (int k = 0; k <= n - 2 - i; ++k) d.supp.insert({i, -4 * n - 2 * i + 2 - 4 * k});
    for (int i = n + 1; i <= 2 * n - 1; ++i)
        for (int k = 0; k <= 2 * n - 1 - i; ++k) d.supp.insert({i, -2 * i + 4 - 4 * k});
    if (!is_well_arranged(d)) throw std::logic_error("delta_A_hat is not well-arranged");
    return d;
}

void beta_apply(WellArrangedMap& d, ParamMap& c, const BetaMove& m, bool forward) {
    const int na = 2 * d.n - 1;
    const int i0 = m.i0, rr0 = m.rr0;
    if (i0 < 2 || i0 > na) throw std::invalid_argument("beta move residue out of range");
    // forward: half columns carry i0 and move to i0-1, the mid cell carries
    // i0-1 and moves to i0; backward is the mirror image.
    const int half_in = forward ? i0 : i0 - 1;
    const int half_out = forward ? i0 - 1 : i0;
    const int mid_in = forward ? i0 - 1 : i0;
    const int mid_out = forward ? i0 : i0 - 1;
    for (const auto& [j, rr] : d.supp)
        if ((rr == rr0 + 1 || rr == rr0 - 1) && j != half_in)
            throw std::logic_error("beta move: half column " + cell_str({j, rr}) +
                                   " is not free");
    for (int rr : {rr0 + 1, rr0 - 1})
        if (!d.contains(half_in, rr))
            throw std::logic_error("beta move: missing cell " + cell_str({half_in, rr}));
    if (!d.contains(mid_in, rr0))
        throw std::logic_error("beta move: missing cell " + cell_str({mid_in, rr0}));
    for (int j : {mid_out, mid_out + 1, mid_out - 1})
        if (j >= 1 && j <= na && j != mid_in && d.contains(j, rr0))
            throw std::logic_error("beta move: occupied cell " + cell_str({j, rr0}));

    d.supp.erase({half_in, rr0 + 1});
    d.supp.erase({half_in, rr0 - 1});
    d.supp.erase({mid_in, rr0});
    d.supp.insert({half_out, rr0 + 1});
    d.supp.insert({half_out, rr0 - 1});
    d.supp.insert({mid_out, rr0});

    const i64 c1 = take(c, {half_in, rr0 + 1});
    const i64 c2 = take(c, {mid_in, rr0});
    const i64 c3 = take(c, {half_in, rr0 - 1});
    const i64 mn = std::min(c1, c3);
    put(c, {half_out, rr0 + 1}, c2 + c3 - mn);
    put(c, {mid_out, rr0}, mn);
    put(c, {half_out, rr0 - 1}, c1 + c2 - mn);
}

std::vector<BetaMove> move_sequence(int n) {
    std::vector<BetaMove> seq;
    for (int i = n; i >= 2; --i)              // rightmost factor acts first
        for (int k = i - 2; k >= 0; --k)      // within one factor likewise
            seq.push_back({i, 2 * (-2 * n + i - 2 * k)});
    return seq;
}

WellArrangedMap run_transform(int n) {
    WellArrangedMap d = delta_B(n);
    ParamMap c;
    for (const BetaMove& m : move_sequence(n)) {
        beta_apply(d, c, m, true);
        if (!is_well_arranged(d))
            throw std::logic_error("intermediate support is not well-arranged");
    }
    if (!(d.supp == delta_A_hat(n).supp))
        throw std::logic_error("transform endpoint differs from the announced set");
    return d;
}

namespace {

std::vector<int> row_desc(const WellArrangedMap& d, int i) {
    std::vector<int> rrs;
    for (const auto& [j, rr] : d.supp)
        if (j == i) rrs.push_back(rr);
    std::sort(rrs.rbegin(), rrs.rend());
    return rrs;
}

} // namespace

VarKey hat_to_A(const WellArrangedMap& dA, VarKey cell) {
    if (dA.supp.count(cell) == 0)
        throw std::invalid_argument("hat_to_A: cell outside the support");
    int k = 0;
    for (const auto& [j, rr] : dA.supp)
        if (j == cell.first && rr > cell.second) ++k;
    return {cell.first, -cell.first + 1 - 2 * k};
}

VarKey A_to_hat(const WellArrangedMap& dA, VarKey label) {
    const auto [i, r] = label;
    const int k = (-i + 1 - r) / 2;
    if (-i + 1 - 2 * k != r || k < 0)
        throw std::invalid_argument("A_to_hat: not a type A label");
    const std::vector<int> rrs = row_desc(dA, i);
    if (k >= static_cast<int>(rrs.size()))
        throw std::invalid_argument("A_to_hat: label outside the window");
    return {i, rrs[k]};
}

YMonomial transport(int n, const YMonomial& m, ABDirection dir) {
    const std::vector<BetaMove> seq = move_sequence(n);
    if (dir == ABDirection::BtoA) {
        WellArrangedMap d = delta_B(n);
        ParamMap c;
        for (const auto& [key, e] : m.exps()) {
            const auto [i, rr] = key;
            if (e < 0) throw std::invalid_argument("transport needs a dominant monomial");
            // unfold the bar label: exactly one of the mirror residues carries rr
            int hits = 0, res = 0;
            std::set<int> unfold{i, 2 * n - i};
            for (int j : unfold)
                if (j >= 1 && j <= 2 * n - 1 && d.contains(j, rr)) ++hits, res = j;
            if (hits != 1)
                throw std::invalid_argument("transport: " + cell_str({i, rr}) +
                                            " is not a B-side window variable");
            c[{res, rr}] = e;
        }
        for (const BetaMove& mv : seq) beta_apply(d, c, mv, true);
        YMonomial out;
        for (const auto& [cell, v] : c) {
            const VarKey lab = hat_to_A(d, cell);
            out.mul_var(lab.first, lab.second, static_cast<int>(v));
        }
        return out;
    }
    WellArrangedMap d = delta_A_hat(n);
    ParamMap c;
    for (const auto& [key, e] : m.exps()) {
        if (e < 0) throw std::invalid_argument("transport needs a dominant monomial");
        c[A_to_hat(d, key)] = e;
    }
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) beta_apply(d, c, *it, false);
    YMonomial out;
    for (const auto& [cell, v] : c) {
        const auto [i, rr] = cell;
        out.mul_var(i <= n ? i : 2 * n - i, rr, static_cast<int>(v));
    }
    return out;
}

std::vector<std::pair<YMonomial, YMonomial>> fundamental_dictionary(int n, ABDirection dir) {
    std::vector<std::pair<YMonomial, YMonomial>> table;
    if (dir == ABDirection::AtoB) {
        for (int i = 1; i <= 2 * n - 1; ++i)
            for (int k = 0; k <= 2 * n - i - 1; ++k) {
                const YMonomial in = YMonomial::var(i, -i + 1 - 2 * k);
                table.emplace_back(in, transport(n, in, dir));
            }
    } else {
        const WellArrangedMap d = delta_B(n);
        std::vector<VarKey> labels;
        for (const auto& [j, rr] : d.supp) labels.push_back({j <= n ? j : 2 * n - j, rr});
        std::sort(labels.begin(), labels.end(),
                  [](VarKey a, VarKey b) { return std::make_pair(a.first, -a.second) <
                                                  std::make_pair(b.first, -b.second); });
        for (const VarKey& lab : labels) {
            const YMonomial in = YMonomial::var(lab.first, lab.second);
            table.emplace_back(in, transport(n, in, dir));
        }
    }
    return table;
}

} // namespace qtb
