#include "qtb/ar_quiver.hpp"

#include <algorithm>
#include <deque>

namespace qtb {

QuiverSpec chain_quiver(int rank, bool descending, int xi1) {
    QuiverSpec q;
    q.rank = rank;
    for (int i = 1; i < rank; ++i) {
        if (descending) q.arrows.emplace_back(i + 1, i);
        else q.arrows.emplace_back(i, i + 1);
    }
    q.xi[1] = xi1;
    complete_heights(q);
    return q;
}

void complete_heights(QuiverSpec& q) {
    if (q.rank < 1) throw std::invalid_argument("quiver rank must be >= 1");
    if (static_cast<int>(q.arrows.size()) != q.rank - 1)
        throw std::invalid_argument("type A quiver needs rank-1 arrows");
    std::vector<int> seen(q.rank + 1, 0);
    for (auto [a, b] : q.arrows) {
        if (a < 1 || a > q.rank || b < 1 || b > q.rank || std::abs(a - b) != 1)
            throw std::invalid_argument("arrows must orient the A_n diagram");
        ++seen[std::min(a, b)];
    }
    for (int i = 1; i < q.rank; ++i)
        if (seen[i] != 1) throw std::invalid_argument("each diagram edge needs one arrow");
    if (q.xi.empty()) throw std::invalid_argument("at least one height required");
    // propagate heights along the chain
    std::map<int, int> xi = q.xi;
    for (int pass = 0; pass < q.rank; ++pass)
        for (auto [a, b] : q.arrows) {
            if (xi.count(a) && !xi.count(b)) xi[b] = xi[a] + 1;
            if (xi.count(b) && !xi.count(a)) xi[a] = xi[b] - 1;
        }
    for (auto [a, b] : q.arrows)
        if (xi.at(b) != xi.at(a) + 1)
            throw std::invalid_argument("inconsistent height function");
    q.xi = xi;
}

int ARQuiver::index_of(int res, int rr) const {
    for (std::size_t k = 0; k < verts.size(); ++k)
        if (verts[k].res == res && verts[k].rr == rr) return static_cast<int>(k);
    return -1;
}

std::vector<int> ARQuiver::row(int res) const {
    std::vector<int> out;
    for (const auto& v : verts)
        if (v.res == res) out.push_back(v.rr);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<int> adapted_word(const QuiverSpec& q) {
    std::vector<std::pair<int, int>> arrows = q.arrows;
    std::vector<bool> done(q.rank + 1, false);
    std::vector<int> word;
    for (int step = 0; step < q.rank; ++step) {
        int sink = -1;
        for (int v = 1; v <= q.rank && sink < 0; ++v) {
            if (done[v]) continue;
            bool ok = true;
            for (auto [a, b] : arrows)
                if (a == v && !done[b]) ok = false;
            if (ok) sink = v;
        }
        if (sink < 0) throw std::logic_error("no sink found");
        word.push_back(sink);
        for (auto& [a, b] : arrows)
            if (b == sink) std::swap(a, b);
        done[sink] = true;
    }
    return word;
}

namespace {

bool is_positive(const std::vector<i64>& alpha_coords) {
    bool pos = false;
    for (i64 x : alpha_coords) {
        if (x < 0) return false;
        if (x > 0) pos = true;
    }
    return pos;
}

void add_translation_arrows(ARQuiver& g) {
    for (std::size_t a = 0; a < g.verts.size(); ++a)
        for (std::size_t b = 0; b < g.verts.size(); ++b)
            if (std::abs(g.verts[a].res - g.verts[b].res) == 1 &&
                g.verts[b].rr == g.verts[a].rr + 2)
                g.arrows.emplace_back(static_cast<int>(a), static_cast<int>(b));
}

} // namespace

ARQuiver ar_quiver(const QuiverSpec& q) {
    const CartanData cd = build_cartan(Kind::A, q.rank);
    const std::vector<int> cox = adapted_word(q);

    // gamma_i = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) for i = i_k
    std::map<int, WeightVector> gamma;
    for (std::size_t k = 0; k < cox.size(); ++k) {
        WeightVector v = alpha_in_varpi(cd, cox[k]);
        for (std::size_t l = k; l-- > 0;) v = weyl_apply(cd, cox[l], v);
        gamma[cox[k]] = v;
    }

    ARQuiver g;
    for (int i = 1; i <= q.rank; ++i) {
        WeightVector beta = gamma.at(i);
        int col = q.xi.at(i);
        while (true) {
            std::vector<i64> a;
            try {
                a = to_alpha_basis(cd, beta);
            } catch (const std::exception&) {
                break;
            }
            if (!is_positive(a)) break;
            g.verts.push_back({i, 2 * col, std::move(a)});
            beta = weyl_apply_word(cd, cox, beta); // Coxeter translate
            col -= 2;
        }
    }
    add_translation_arrows(g);
    return g;
}

ARQuiver comb_ar_quiver(const CartanData& cd, const std::vector<int>& word) {
    if (!is_reduced_word_w0(cd, word))
        throw std::invalid_argument("not a reduced word for w0");
    const auto betas = roots_of_word(cd, word);
    ARQuiver g;
    const int L = static_cast<int>(word.size());
    for (int k = 0; k < L; ++k)
        g.verts.push_back({word[k], -2 * k, to_alpha_basis(cd, betas[k])});
    for (int k = 0; k < L; ++k)
        for (int kp = 0; kp < k; ++kp) {
            if (cd.bsym[word[k] - 1][word[kp] - 1] >= 0) continue;
            bool blocked = false;
            for (int t = kp + 1; t < k && !blocked; ++t)
                if (word[t] == word[k] || word[t] == word[kp]) blocked = true;
            if (!blocked) g.arrows.emplace_back(k, kp);
        }
    return g;
}

std::vector<int> compatible_reading(const ARQuiver& g, std::vector<int>* vertex_order) {
    const int V = static_cast<int>(g.verts.size());
    std::vector<int> pending(V, 0); // unemitted out-neighbours
    std::vector<std::vector<int>> rev(V);
    for (auto [a, b] : g.arrows) {
        ++pending[a];
        rev[b].push_back(a);
    }
    std::vector<int> order, reading;
    std::vector<bool> emitted(V, false);
    for (int step = 0; step < V; ++step) {
        int best = -1;
        for (int v = 0; v < V; ++v) {
            if (emitted[v] || pending[v] > 0) continue;
            if (best < 0 ||
                std::make_pair(-g.verts[v].rr, g.verts[v].res) <
                    std::make_pair(-g.verts[best].rr, g.verts[best].res))
                best = v;
        }
        if (best < 0) throw std::logic_error("AR quiver has a cycle");
        emitted[best] = true;
        order.push_back(best);
        reading.push_back(g.verts[best].res);
        for (int u : rev[best]) --pending[u];
    }
    if (vertex_order) *vertex_order = order;
    return reading;
}

bool same_shape(const ARQuiver& a, const ARQuiver& b) {
    if (a.verts.size() != b.verts.size() || a.arrows.size() != b.arrows.size())
        return false;
    // match the k-th latest vertex of each residue (latest = earliest in any
    // compatible reading = largest column)
    std::vector<int> oa, ob;
    compatible_reading(a, &oa);
    compatible_reading(b, &ob);
    std::map<int, int> map_ab; // a-vertex -> b-vertex
    std::map<int, std::deque<int>> rows_b;
    for (int v : ob) rows_b[b.verts[v].res].push_back(v);
    for (int v : oa) {
        auto& row = rows_b[a.verts[v].res];
        if (row.empty()) return false;
        map_ab[v] = row.front();
        row.pop_front();
    }
    std::set<std::pair<int, int>> ea, eb;
    for (auto [s, t] : a.arrows) ea.insert({map_ab.at(s), map_ab.at(t)});
    for (auto [s, t] : b.arrows) eb.insert({s, t});
    return ea == eb;
}

TwistedQuiver twist(const QuiverSpec& q, Flat flat) {
    if (q.rank % 2 != 0) throw std::invalid_argument("twist needs a type A_{2n-2} quiver");
    const int n = q.rank / 2 + 1;
    TwistedQuiver tq;
    tq.n = n;
    tq.flat = flat;
    tq.base = q;
    const ARQuiver g = ar_quiver(q);

    auto rename = [&](int res) { return res >= n ? res + 1 : res; };

    ARQuiver hat;
    for (const auto& v : g.verts) hat.verts.push_back({rename(v.res), v.rr, {}});
    for (auto [a, b] : g.arrows) {
        const auto& va = g.verts[a];
        const auto& vb = g.verts[b];
        if ((va.res == n - 1 && vb.res == n) || (va.res == n && vb.res == n - 1)) {
            // split through a new spin vertex at the halfway column
            const int mid = vb.rr - 1;
            int sv = hat.index_of(n, mid);
            if (sv < 0) {
                sv = static_cast<int>(hat.verts.size());
                hat.verts.push_back({n, mid, {}});
            }
            hat.arrows.emplace_back(a, sv);
            hat.arrows.emplace_back(sv, b);
        } else {
            hat.arrows.emplace_back(a, b);
        }
    }

    // boundary spin vertex at the extreme column of the two middle rows
    int ext_rr = 0, ext_vert = -1;
    bool first = true;
    for (std::size_t k = 0; k < g.verts.size(); ++k) {
        const auto& v = g.verts[k];
        if (v.res != n - 1 && v.res != n) continue;
        const bool better = first || (flat == Flat::Greater ? v.rr > ext_rr : v.rr < ext_rr);
        if (better) {
            ext_rr = v.rr;
            ext_vert = static_cast<int>(k);
            first = false;
        }
    }
    const int sv = static_cast<int>(hat.verts.size());
    if (flat == Flat::Greater) {
        hat.verts.push_back({n, ext_rr + 1, {}});
        hat.arrows.emplace_back(ext_vert, sv);
    } else {
        hat.verts.push_back({n, ext_rr - 1, {}});
        hat.arrows.emplace_back(sv, ext_vert);
    }

    // attach type A_{2n-1} roots via a compatible reading
    {
        const CartanData cda = build_cartan(Kind::A, 2 * n - 1);
        std::vector<int> order;
        const std::vector<int> word = compatible_reading(hat, &order);
        if (!is_reduced_word_w0(cda, word))
            throw std::logic_error("twisted quiver reading is not reduced for w0");
        const auto betas = roots_of_word(cda, word);
        for (std::size_t k = 0; k < order.size(); ++k)
            hat.verts[order[k]].root = to_alpha_basis(cda, betas[k]);
    }

    tq.hat = hat;
    tq.bar = hat;
    for (auto& v : tq.bar.verts)
        if (v.res > n) v.res = 2 * n - v.res;
    return tq;
}

int k_of(const TwistedQuiver& tq, int i, int r) {
    const int step = 2 * ((i < tq.n) ? 2 : 1);
    int count = 0;
    for (const auto& v : tq.bar.verts)
        if (v.res == i && v.rr >= r && (v.rr - r) % step == 0) ++count;
    return count;
}

Window window_of(const TwistedQuiver& tq) {
    Window w;
    for (const auto& v : tq.bar.verts) w.insert({v.res, v.rr});
    return w;
}

int max_rr_of_row(const ARQuiver& g, int res) {
    bool found = false;
    int best = 0;
    for (const auto& v : g.verts)
        if (v.res == res && (!found || v.rr > best)) {
            best = v.rr;
            found = true;
        }
    if (!found) throw std::out_of_range("empty residue row");
    return best;
}

} // namespace qtb
