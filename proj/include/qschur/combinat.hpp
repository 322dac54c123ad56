#pragma once

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using Composition = std::vector<int>;
using MultiComposition = std::vector<Composition>;

inline int weight(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }
inline int weight(const MultiComposition& c) {
    int s = 0;
    for (auto& x : c) s += weight(x);
    return s;
}
inline Composition flatten(const MultiComposition& c) {
    Composition r;
    for (auto& x : c) r.insert(r.end(), x.begin(), x.end());
    return r;
}

// "2,1|3" style text; an empty component is written as nothing (or "-").
inline std::string to_text(const Composition& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s;
}
inline std::string to_text(const MultiComposition& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "|" : "") + to_text(c[i]);
    return s;
}
inline Composition parse_composition(const std::string& s) {
    Composition c;
    if (s.empty() || s == "-") return c;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        std::string tok = s.substr(i, j - i);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad composition '" + s + "'");
        }
        if (used != tok.size() || v <= 0) throw std::invalid_argument("bad composition '" + s + "'");
        c.push_back(v);
        i = j + 1;
    }
    return c;
}
inline MultiComposition parse_multicomposition(const std::string& s) {
    MultiComposition m;
    std::size_t i = 0;
    while (true) {
        std::size_t j = s.find('|', i);
        if (j == std::string::npos) {
            m.push_back(parse_composition(s.substr(i)));
            break;
        }
        m.push_back(parse_composition(s.substr(i, j - i)));
        i = j + 1;
    }
    return m;
}

// Strict compositions of m in decreasing lexicographic order.
inline std::vector<Composition> compositions(int m) {
    std::vector<Composition> out;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    for (int first = m; first >= 1; --first)
        for (auto& rest : compositions(m - first)) {
            Composition c{first};
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    return out;
}

inline std::vector<Composition> partitions(int m, int max_part = -1) {
    if (max_part < 0) max_part = m;
    std::vector<Composition> out;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    for (int first = std::min(m, max_part); first >= 1; --first)
        for (auto& rest : partitions(m - first, first)) {
            Composition c{first};
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    return out;
}

namespace detail {
inline void distribute(int m, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (k == 1) {
        cur.push_back(m);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = m; x >= 0; --x) {
        cur.push_back(x);
        distribute(m - x, k - 1, cur, out);
        cur.pop_back();
    }
}
inline std::vector<MultiComposition> tuples(int m, int k, const std::function<std::vector<Composition>(int)>& each) {
    std::vector<MultiComposition> out;
    if (k == 0) {
        if (m == 0) out.push_back({});
        return out;
    }
    std::vector<std::vector<int>> weights;
    std::vector<int> cur;
    distribute(m, k, cur, weights);
    for (auto& w : weights) {
        std::vector<MultiComposition> acc{{}};
        for (int x : w) {
            std::vector<MultiComposition> nxt;
            auto opts = each(x);
            for (auto& a : acc)
                for (auto& o : opts) {
                    auto b = a;
                    b.push_back(o);
                    nxt.push_back(std::move(b));
                }
            acc = std::move(nxt);
        }
        out.insert(out.end(), acc.begin(), acc.end());
    }
    return out;
}
}  // namespace detail

// Lambda_st^k(m): k-tuples of strict compositions of total weight m.
inline std::vector<MultiComposition> multicompositions(int m, int k) {
    return detail::tuples(m, k, [](int x) { return compositions(x); });
}
inline std::vector<MultiComposition> multipartitions(int m, int k) {
    return detail::tuples(m, k, [](int x) { return partitions(x); });
}

struct SchurObject {
    MultiComposition comps;  // components 0..ell
    Composition flat;
};

// Lambda_st^{1+ell}(m); for ell = 0 this is Lambda_st(m).
inline std::vector<SchurObject> enumerate_objects(int m, int ell) {
    std::vector<SchurObject> out;
    for (auto& c : multicompositions(m, ell + 1)) out.push_back({c, flatten(c)});
    return out;
}

// Lambda_st^{emptyset,ell}(m): component 0 empty.
inline std::vector<SchurObject> enumerate_objects_empty0(int m, int ell) {
    std::vector<SchurObject> out;
    for (auto& c : multicompositions(m, ell)) {
        MultiComposition mc{{}};
        mc.insert(mc.end(), c.begin(), c.end());
        out.push_back({mc, flatten(mc)});
    }
    return out;
}

using Matrix = std::vector<std::vector<int>>;

// Non-negative integer matrices with row sums lambda and column sums mu.
inline std::vector<Matrix> enumerate_matrices(const Composition& lambda, const Composition& mu) {
    std::vector<Matrix> out;
    if (weight(lambda) != weight(mu)) return out;
    std::size_t r = lambda.size(), c = mu.size();
    Matrix a(r, std::vector<int>(c, 0));
    std::vector<int> colleft(mu.begin(), mu.end());
    std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j, int rowleft) {
        if (i == r) {
            if (std::all_of(colleft.begin(), colleft.end(), [](int x) { return x == 0; })) out.push_back(a);
            return;
        }
        if (j + 1 == c) {
            if (rowleft > colleft[j]) return;
            a[i][j] = rowleft;
            colleft[j] -= rowleft;
            rec(i + 1, 0, i + 1 < r ? lambda[i + 1] : 0);
            colleft[j] += rowleft;
            a[i][j] = 0;
            return;
        }
        for (int x = std::min(rowleft, colleft[j]); x >= 0; --x) {
            a[i][j] = x;
            colleft[j] -= x;
            rec(i, j + 1, rowleft - x);
            colleft[j] += x;
        }
        a[i][j] = 0;
    };
    if (r == 0 || c == 0) {
        if (r == 0 && c == 0) out.push_back(a);
        return out;
    }
    rec(0, 0, lambda[0]);
    return out;
}

inline Matrix transpose(const Matrix& a, std::size_t rows_if_empty = 0) {
    if (a.empty()) return Matrix(rows_if_empty);
    Matrix t(a[0].size(), std::vector<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

using Packet = std::vector<int>;

inline int packet_degree(const Packet& p) {
    int s = 0;
    for (int x : p) s += std::abs(x);
    return s;
}

// RPar_a: weakly decreasing nonzero entries, |entry| <= a, first - last <= a,
// restricted to degree (sum of |entries|) at most max_degree.
inline std::vector<Packet> rational_partitions(int a, int max_degree) {
    std::vector<Packet> out;
    Packet cur;
    std::function<void(int, int)> rec = [&](int maxv, int budget) {
        out.push_back(cur);
        for (int v = maxv; v >= -a; --v) {
            if (v == 0) continue;
            if (std::abs(v) > budget) continue;
            if (!cur.empty() && cur.front() - v > a) break;
            cur.push_back(v);
            rec(v, budget - std::abs(v));
            cur.pop_back();
        }
    };
    rec(a, max_degree);
    std::stable_sort(out.begin(), out.end(), [](const Packet& x, const Packet& y) { return packet_degree(x) < packet_degree(y); });
    return out;
}

// Partitions with parts <= a and at most max_len parts.
inline std::vector<Packet> bounded_partitions(int a, int max_len) {
    std::vector<Packet> out;
    Packet cur;
    std::function<void(int)> rec = [&](int maxv) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int v = maxv; v >= 1; --v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(a);
    return out;
}

enum class LabelKind { RParMat, ParMatFlat, ParMatLevel };

inline std::string kind_name(LabelKind k) {
    switch (k) {
        case LabelKind::RParMat: return "RParMat";
        case LabelKind::ParMatFlat: return "ParMatFlat";
        case LabelKind::ParMatLevel: return "ParMatLevel";
    }
    return "?";
}

// Matrix A (rows: target blocks, columns: source blocks) plus a packet per entry.
struct BasisLabel {
    LabelKind kind = LabelKind::RParMat;
    Matrix A;
    std::vector<std::vector<Packet>> P;

    friend bool operator==(const BasisLabel& x, const BasisLabel& y) { return x.kind == y.kind && x.A == y.A && x.P == y.P; }
    friend bool operator<(const BasisLabel& x, const BasisLabel& y) {
        if (x.A != y.A) return x.A < y.A;
        return x.P < y.P;
    }
    int degree() const {
        int s = 0;
        for (auto& row : P)
            for (auto& p : row) s += packet_degree(p);
        return s;
    }
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < A.size(); ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < A[i].size(); ++j) {
                s += j ? " " : "";
                s += std::to_string(A[i][j]);
                if (!P[i][j].empty()) {
                    s += "{";
                    for (std::size_t k = 0; k < P[i][j].size(); ++k) s += (k ? "," : "") + std::to_string(P[i][j][k]);
                    s += "}";
                }
            }
        }
        return s + "]";
    }
};

// component index of each block of a (1+ell)-multicomposition
inline std::vector<int> block_components(const MultiComposition& c) {
    std::vector<int> r;
    for (std::size_t p = 0; p < c.size(); ++p)
        for (std::size_t i = 0; i < c[p].size(); ++i) r.push_back(static_cast<int>(p));
    return r;
}

// Labels for Hom(source, target).  Objects are (1+ell)-multicompositions;
// RParMat ignores the component structure, ParMatLevel uses `ell` for the bound.
inline std::vector<BasisLabel> enumerate_basis_labels(LabelKind kind, const MultiComposition& target, const MultiComposition& source, int dot_bound, int ell = 0) {
    Composition lam = flatten(target), mu = flatten(source);
    std::vector<int> pc = block_components(target), qc = block_components(source);
    std::vector<BasisLabel> out;
    for (auto& A : enumerate_matrices(lam, mu)) {
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        std::vector<std::vector<Packet>> options;
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < A[i].size(); ++j) {
                if (A[i][j] == 0) continue;
                cells.emplace_back(i, j);
                switch (kind) {
                    case LabelKind::RParMat: options.push_back(rational_partitions(A[i][j], dot_bound)); break;
                    case LabelKind::ParMatFlat: options.push_back(bounded_partitions(A[i][j], std::min(pc[i], qc[j]) - 1)); break;
                    case LabelKind::ParMatLevel: options.push_back(bounded_partitions(A[i][j], ell - 1)); break;
                }
            }
        BasisLabel lab;
        lab.kind = kind;
        lab.A = A;
        lab.P.assign(A.size(), std::vector<Packet>(A.empty() ? 0 : A[0].size()));
        std::function<void(std::size_t, int)> rec = [&](std::size_t k, int budget) {
            if (k == cells.size()) {
                out.push_back(lab);
                return;
            }
            for (auto& p : options[k]) {
                int d = packet_degree(p);
                if (kind == LabelKind::RParMat && d > budget) continue;
                lab.P[cells[k].first][cells[k].second] = p;
                rec(k + 1, budget - d);
            }
            lab.P[cells[k].first][cells[k].second].clear();
        };
        rec(0, dot_bound);
    }
    return out;
}

// ---------------------------------------------------------------- permutations

// One-line notation, values 1..n.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}
inline int perm_length(const Perm& w) {
    int l = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++l;
    return l;
}
inline Perm perm_inverse(const Perm& w) {
    Perm r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[w[i] - 1] = static_cast<int>(i) + 1;
    return r;
}
// (v w)(i) = v(w(i))
inline Perm perm_compose(const Perm& v, const Perm& w) {
    Perm r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[i] = v[w[i] - 1];
    return r;
}
// s_i w: swap the values i and i+1
inline Perm left_mult_s(const Perm& w, int i) {
    Perm r(w);
    for (auto& x : r) {
        if (x == i)
            x = i + 1;
        else if (x == i + 1)
            x = i;
    }
    return r;
}
// w s_i: swap positions i and i+1
inline Perm right_mult_s(const Perm& w, int i) {
    Perm r(w);
    std::swap(r[i - 1], r[i]);
    return r;
}

// Reduced word (i_1..i_k) with w = s_{i_1} ... s_{i_k}, built by peeling left descents.
inline std::vector<int> reduced_word(Perm w) {
    std::vector<int> word;
    int n = static_cast<int>(w.size());
    Perm pos(n);
    while (true) {
        for (int k = 0; k < n; ++k) pos[w[k] - 1] = k;
        int d = 0;
        for (int i = 1; i < n; ++i)
            if (pos[i] < pos[i - 1]) {
                d = i;
                break;
            }
        if (!d) break;
        word.push_back(d);
        w = left_mult_s(w, d);
    }
    return word;
}

inline Perm perm_from_word(int n, const std::vector<int>& word) {
    Perm w = identity_perm(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = left_mult_s(w, *it);
    return w;
}

inline std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct CosetRep {
    Perm w;
    std::vector<int> word;
    int length;
};

// Minimal length representatives of S_{a+b} / (S_a x S_b), ordered by length.
inline std::vector<CosetRep> min_coset_reps(int a, int b) {
    std::vector<CosetRep> out;
    int n = a + b;
    std::vector<int> pick(n, 0);
    std::fill(pick.begin() + b, pick.end(), 1);
    do {
        Perm w;
        for (int v = 1; v <= n; ++v)
            if (pick[v - 1]) w.push_back(v);
        for (int v = 1; v <= n; ++v)
            if (!pick[v - 1]) w.push_back(v);
        out.push_back({w, reduced_word(w), perm_length(w)});
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::stable_sort(out.begin(), out.end(), [](const CosetRep& x, const CosetRep& y) { return x.length < y.length; });
    return out;
}

// Longest minimal coset representative: one-line [b+1..b+a, 1..b].
inline Perm longest_coset_rep(int a, int b) {
    Perm w;
    for (int i = 1; i <= a; ++i) w.push_back(b + i);
    for (int i = 1; i <= b; ++i) w.push_back(i);
    return w;
}

// Permutations of the Young subgroup S_c1 x S_c2 x ...
inline std::vector<Perm> young_subgroup(const Composition& c) {
    int n = weight(c);
    std::vector<Perm> out{identity_perm(n)};
    int off = 0;
    for (int part : c) {
        std::vector<Perm> nxt;
        for (auto& base : out) {
            Perm block(part);
            std::iota(block.begin(), block.end(), off + 1);
            do {
                Perm w(base);
                for (int k = 0; k < part; ++k) w[off + k] = block[k];
                nxt.push_back(w);
            } while (std::next_permutation(block.begin(), block.end()));
        }
        out = std::move(nxt);
        off += part;
    }
    return out;
}

// ---------------------------------------------------------------- tableaux

// Entry (value i, component k) of a semistandard multitableau; both 1-based.
struct Entry {
    int value;
    int comp;
    friend bool operator==(const Entry& a, const Entry& b) { return a.value == b.value && a.comp == b.comp; }
    // component first, then value
    friend bool operator<(const Entry& a, const Entry& b) { return a.comp != b.comp ? a.comp < b.comp : a.value < b.value; }
    friend bool operator<=(const Entry& a, const Entry& b) { return !(b < a); }
};

// cells[k][r][c]; shape is an ell-multipartition
struct MultiTableau {
    MultiComposition shape;
    std::vector<std::vector<std::vector<Entry>>> cells;

    friend bool operator==(const MultiTableau& a, const MultiTableau& b) { return a.shape == b.shape && a.cells == b.cells; }
    std::string str() const {
        std::string s;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            s += k ? " | " : "";
            for (std::size_t r = 0; r < cells[k].size(); ++r) {
                s += r ? " / " : "";
                for (std::size_t c = 0; c < cells[k][r].size(); ++c)
                    s += (c ? " " : "") + std::to_string(cells[k][r][c].value) + "." + std::to_string(cells[k][r][c].comp);
            }
        }
        return s;
    }
};

// Standard tableau: numbers 1..m, std_cells[k][r][c]
struct StdTableau {
    MultiComposition shape;
    std::vector<std::vector<std::vector<int>>> cells;
    friend bool operator==(const StdTableau& a, const StdTableau& b) { return a.cells == b.cells; }
};

inline bool is_semistandard(const MultiTableau& t) {
    for (std::size_t k = 0; k < t.cells.size(); ++k) {
        const auto& comp = t.cells[k];
        for (std::size_t r = 0; r < comp.size(); ++r)
            for (std::size_t c = 0; c < comp[r].size(); ++c) {
                const Entry& e = comp[r][c];
                if (e.comp < static_cast<int>(k) + 1) return false;
                if (c > 0 && !(comp[r][c - 1] <= e)) return false;
                if (r > 0 && c < comp[r - 1].size() && !(comp[r - 1][c] < e)) return false;
                if (r > 0 && c >= comp[r - 1].size()) return false;
            }
    }
    return true;
}

// SST(lambda, mu): lambda an ell-multipartition, mu an ell-multicomposition.
inline std::vector<MultiTableau> enumerate_sst(const MultiComposition& lambda, const MultiComposition& mu) {
    std::vector<MultiTableau> out;
    if (weight(lambda) != weight(mu) || lambda.size() != mu.size()) return out;
    std::vector<Entry> kinds;
    std::map<std::pair<int, int>, int> left;
    for (std::size_t k = 0; k < mu.size(); ++k)
        for (std::size_t i = 0; i < mu[k].size(); ++i) {
            Entry e{static_cast<int>(i) + 1, static_cast<int>(k) + 1};
            kinds.push_back(e);
            left[{e.value, e.comp}] = mu[k][i];
        }
    std::sort(kinds.begin(), kinds.end());
    MultiTableau t;
    t.shape = lambda;
    t.cells.resize(lambda.size());
    std::vector<std::tuple<int, int, int>> order;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        t.cells[k].resize(lambda[k].size());
        for (std::size_t r = 0; r < lambda[k].size(); ++r) {
            t.cells[k][r].resize(lambda[k][r]);
            for (int c = 0; c < lambda[k][r]; ++c) order.emplace_back(static_cast<int>(k), static_cast<int>(r), c);
        }
    }
    std::function<void(std::size_t)> rec = [&](std::size_t n) {
        if (n == order.size()) {
            out.push_back(t);
            return;
        }
        auto [k, r, c] = order[n];
        for (const Entry& e : kinds) {
            int& cnt = left[{e.value, e.comp}];
            if (cnt == 0) continue;
            if (e.comp < k + 1) continue;
            if (c > 0 && !(t.cells[k][r][c - 1] <= e)) continue;
            if (r > 0 && !(t.cells[k][r - 1][c] < e)) continue;
            t.cells[k][r][c] = e;
            --cnt;
            rec(n + 1);
            ++cnt;
        }
    };
    rec(0);
    return out;
}

// The tableau t^lambda: 1..m filled along rows, components in order.
inline StdTableau initial_tableau(const MultiComposition& shape) {
    StdTableau t;
    t.shape = shape;
    int v = 1;
    t.cells.resize(shape.size());
    for (std::size_t k = 0; k < shape.size(); ++k) {
        t.cells[k].resize(shape[k].size());
        for (std::size_t r = 0; r < shape[k].size(); ++r)
            for (int c = 0; c < shape[k][r]; ++c) t.cells[k][r].push_back(v++);
    }
    return t;
}

inline std::vector<StdTableau> standard_tableaux(const MultiComposition& shape) {
    std::vector<StdTableau> out;
    int m = weight(shape);
    StdTableau t = initial_tableau(shape);
    for (auto& comp : t.cells)
        for (auto& row : comp) std::fill(row.begin(), row.end(), 0);
    std::function<void(int)> rec = [&](int v) {
        if (v > m) {
            out.push_back(t);
            return;
        }
        for (std::size_t k = 0; k < shape.size(); ++k)
            for (std::size_t r = 0; r < shape[k].size(); ++r) {
                auto& row = t.cells[k][r];
                auto it = std::find(row.begin(), row.end(), 0);
                if (it == row.end()) continue;
                std::size_t c = static_cast<std::size_t>(it - row.begin());
                if (r > 0 && t.cells[k][r - 1][c] == 0) continue;
                *it = v;
                rec(v + 1);
                *it = 0;
            }
    };
    rec(1);
    return out;
}

// d(t) with t = t^lambda d(t): reading t along t^lambda's order gives the one-line form.
inline Perm coset_word_perm(const StdTableau& t) {
    Perm d;
    for (auto& comp : t.cells)
        for (auto& row : comp)
            for (int v : row) d.push_back(v);
    return d;
}

// mu(t): replace number v by the (row, component) of v in t^mu.
inline MultiTableau type_of(const StdTableau& t, const MultiComposition& mu) {
    std::map<int, Entry> where;
    StdTableau tm = initial_tableau(mu);
    for (std::size_t k = 0; k < tm.cells.size(); ++k)
        for (std::size_t r = 0; r < tm.cells[k].size(); ++r)
            for (int v : tm.cells[k][r]) where[v] = Entry{static_cast<int>(r) + 1, static_cast<int>(k) + 1};
    MultiTableau out;
    out.shape = t.shape;
    out.cells.resize(t.cells.size());
    for (std::size_t k = 0; k < t.cells.size(); ++k) {
        out.cells[k].resize(t.cells[k].size());
        for (std::size_t r = 0; r < t.cells[k].size(); ++r)
            for (int v : t.cells[k][r]) out.cells[k][r].push_back(where.at(v));
    }
    return out;
}

// mu^{-1}(S): standard tableaux s of the same shape with mu(s) = S.
inline std::vector<StdTableau> preimages(const MultiTableau& S, const MultiComposition& mu) {
    std::vector<StdTableau> out;
    for (auto& s : standard_tableaux(S.shape))
        if (type_of(s, mu) == S) out.push_back(s);
    return out;
}

}  // namespace qschur
