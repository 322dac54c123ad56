#pragma once

#include "combinat.hpp"
#include "diagram.hpp"
#include "linalg.hpp"
#include "ring.hpp"

#include <json.hpp>

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using Exps = MultiLaurent::Exps;

namespace detail {

// out += c * x^e with the two exponents at i-1, i replaced by (a, b)
inline void add_with(MultiLaurent& out, const Exps& e, int i, int a, int b, const Laurent& c) {
    Exps f = e;
    f[i - 1] = a;
    f[i] = b;
    out.add_term(std::move(f), Laurent(c));
}

}  // namespace detail

// H_i f = q^-1 f + (q X_{i+1} - q^-1 X_i) (f - f^{s_i}) / (X_i - X_{i+1})
inline MultiLaurent apply_H(const MultiLaurent& f, int i) {
    if (i < 1 || i >= f.nvars()) throw std::out_of_range("Hecke generator index out of range");
    const Laurent qp = Laurent::q(1), qm = Laurent::q(-1);
    MultiLaurent out(f.nvars());
    for (auto& [e, c] : f.terms()) {
        out.add_term(e, qm * c);
        int a = e[i - 1], b = e[i];
        if (a == b) continue;
        // (x^a y^b - x^b y^a)/(x - y) = sign * x^lo y^lo * sum_k x^k y^{d-1-k}
        int lo = std::min(a, b), d = std::abs(a - b);
        Laurent cc = a > b ? c : -c;
        Laurent up = qp * cc, dn = -(qm * cc);  // times q X_{i+1} and -q^-1 X_i
        for (int k = 0; k < d; ++k) {
            int x = lo + k, y = lo + d - 1 - k;
            detail::add_with(out, e, i, x, y + 1, up);
            detail::add_with(out, e, i, x + 1, y, dn);
        }
    }
    return out;
}

// H_i^{-1} = H_i + q - q^{-1}
inline MultiLaurent apply_H_inv(const MultiLaurent& f, int i) {
    MultiLaurent out = apply_H(f, i);
    out += (Laurent::q(1) - Laurent::q(-1)) * f;
    return out;
}

// Generators applied left to right along the word; negative entries are inverses.
inline MultiLaurent hecke_action(MultiLaurent f, const std::vector<int>& word) {
    for (int g : word) f = g > 0 ? apply_H(f, g) : apply_H_inv(f, -g);
    return f;
}

// H_w for w = s_{i1}...s_{ik}: rightmost letter first
inline MultiLaurent apply_Hw(MultiLaurent f, const std::vector<int>& reduced, int offset = 0) {
    for (std::size_t k = reduced.size(); k-- > 0;) f = apply_H(f, reduced[k] + offset);
    return f;
}

inline Perm crossing_perm(int a, int b) {
    Perm w;
    for (int i = 1; i <= a; ++i) w.push_back(b + i);
    for (int i = 1; i <= b; ++i) w.push_back(i);
    return w;
}

namespace detail {

struct SigmaPlan {
    // step k computes g_k = H_{letter} g_{parent}; parent -1 means the input
    std::vector<int> parent, letter;
    std::vector<int> power;  // coefficient q^power of g_k in sigma
};

inline const SigmaPlan& sigma_plan(int a, int b) {
    static std::map<std::pair<int, int>, SigmaPlan> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
    SigmaPlan plan;
    std::map<Perm, int> index;
    for (const CosetRep& r : min_coset_reps(a, b)) {
        int k = static_cast<int>(plan.parent.size());
        if (r.word.empty()) {
            plan.parent.push_back(-1);
            plan.letter.push_back(0);
        } else {
            Perm rest = perm_from_word(a + b, std::vector<int>(r.word.begin() + 1, r.word.end()));
            auto p = index.find(rest);
            if (p == index.end()) throw std::logic_error("coset representatives not closed under left truncation");
            plan.parent.push_back(p->second);
            plan.letter.push_back(r.word[0]);
        }
        plan.power.push_back(a * b - r.length);
        index.emplace(r.w, k);
    }
    return cache.emplace(std::make_pair(a, b), std::move(plan)).first->second;
}

inline const std::vector<int>& crossing_word(int a, int b) {
    static std::map<std::pair<int, int>, std::vector<int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({a, b});
    if (it == cache.end()) it = cache.emplace(std::make_pair(a, b), reduced_word(crossing_perm(a, b))).first;
    return it->second;
}

}  // namespace detail

// sigma_{a,b} = sum over minimal coset representatives of q^{ab - l(w)} H_w, on variables offset+1..offset+a+b
inline MultiLaurent apply_sigma(const MultiLaurent& f, int a, int b, int offset = 0) {
    const auto& plan = detail::sigma_plan(a, b);
    std::vector<MultiLaurent> g;
    g.reserve(plan.parent.size());
    MultiLaurent out(f.nvars());
    for (std::size_t k = 0; k < plan.parent.size(); ++k) {
        g.push_back(plan.parent[k] < 0 ? f : apply_H(g[static_cast<std::size_t>(plan.parent[k])], plan.letter[k] + offset));
        out += Laurent::q(plan.power[k]) * g.back();
    }
    return out;
}

inline MultiLaurent multiply_window(const MultiLaurent& f, int offset, int a, int power) {
    Exps e(static_cast<std::size_t>(f.nvars()), 0);
    for (int j = 0; j < a; ++j) e[static_cast<std::size_t>(offset + j)] = power;
    return f.times_monomial(e);
}

// --------------------------------------------------------------- blocks and symmetry

inline std::vector<int> black_blocks(const Object& o) {
    std::vector<int> b;
    for (auto& s : o)
        if (!s.red) b.push_back(s.a);
    return b;
}

inline bool symmetric_in_blocks(const MultiLaurent& f, const std::vector<int>& blocks) {
    int start = 1;
    for (int a : blocks) {
        if (!f.symmetric_on(start, start + a - 1)) return false;
        start += a;
    }
    return true;
}

// --------------------------------------------------------------- evaluation

class evaluation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline MultiLaurent eval_rec(const Node& n, const MultiLaurent& f, int offset) {
    switch (n.kind) {
        case Node::Kind::Compose: return eval_rec(*n.x, eval_rec(*n.y, f, offset), offset);
        case Node::Kind::Tensor: {
            int wl = black_weight(n.x->src);
            return eval_rec(*n.x, eval_rec(*n.y, f, offset + wl), offset);
        }
        case Node::Kind::Leaf: break;
    }
    switch (n.gen) {
        case Gen::Identity:
        case Gen::Split:
        case Gen::TraverseUp: return f;
        case Gen::Merge: return apply_sigma(f, n.a, n.b, offset);
        case Gen::CrossPos: {
            MultiLaurent g = f;
            const auto& w = crossing_word(n.a, n.b);
            return apply_Hw(g, w, offset);
        }
        case Gen::CrossNeg: {
            // inverse of the positive crossing (b,a) -> (a,b)
            MultiLaurent g = f;
            for (int i : crossing_word(n.b, n.a)) g = apply_H_inv(g, i + offset);
            return g;
        }
        case Gen::SolidDot: return multiply_window(f, offset, n.a, 1);
        case Gen::OpenDot: return multiply_window(f, offset, n.a, -1);
        case Gen::TraverseDown: {
            MultiLaurent g = f;
            int m = f.nvars();
            for (int j = 1; j <= n.a; ++j) g = g * (MultiLaurent::var(m, offset + j) - MultiLaurent(m, n.u));
            return g;
        }
    }
    return f;
}

}  // namespace detail

inline MultiLaurent evaluate_unchecked(const Term& t, const MultiLaurent& f) { return detail::eval_rec(t.node(), f, 0); }

inline MultiLaurent evaluate(const Term& t, const MultiLaurent& f) {
    if (f.nvars() != black_weight(t.source())) throw evaluation_error("variable count does not match the source weight");
    if (!symmetric_in_blocks(f, black_blocks(t.source()))) throw evaluation_error("input not in Sym_mu");
    return evaluate_unchecked(t, f);
}

inline MultiLaurent evaluate(const LinComb& l, const MultiLaurent& f) {
    MultiLaurent out(f.nvars());
    for (auto& [c, t] : l.terms) out += c * evaluate(t, f);
    return out;
}

// --------------------------------------------------------------- probes

struct ProbeSet {
    int m = 0;
    std::vector<MultiLaurent> probes;
    bool complete = false;  // a basis of Sym_mu over the full symmetric ring
};

namespace detail {

// partitions with at most `rows` parts, each at most `cols`
inline void box_partitions(int rows, int cols, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    int mx = cur.empty() ? cols : cur.back();
    for (int v = 1; v <= mx; ++v) {
        cur.push_back(v);
        box_partitions(rows, cols, cur, out);
        cur.pop_back();
    }
}

// monomial symmetric function m_nu in variables start..start+n-1
inline MultiLaurent orbit_sum(int m, int start, int n, std::vector<int> nu) {
    nu.resize(static_cast<std::size_t>(n), 0);
    std::sort(nu.begin(), nu.end());
    MultiLaurent out(m);
    do {
        Exps e(static_cast<std::size_t>(m), 0);
        for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(start - 1 + j)] = nu[static_cast<std::size_t>(j)];
        out.add_term(e, Laurent(1));
    } while (std::next_permutation(nu.begin(), nu.end()));
    return out;
}

inline Int multinomial(const std::vector<int>& blocks) {
    Int r = 1;
    int n = 0;
    for (int a : blocks)
        for (int j = 1; j <= a; ++j) {
            ++n;
            r = r * n / j;
        }
    return r;
}

}  // namespace detail

// Free basis of Sym_mu over the symmetric Laurent ring when small enough,
// otherwise block monomials plus seeded random orbit sums.
inline ProbeSet make_probes(const std::vector<int>& blocks, std::size_t max_complete = 24, unsigned seed = 1, int extra = 2) {
    ProbeSet ps;
    for (int a : blocks) ps.m += a;
    int m = ps.m;
    if (detail::multinomial(blocks) <= Int(max_complete)) {
        std::vector<std::vector<MultiLaurent>> per_block;
        int start = 1;
        for (int a : blocks) {
            int rest = m - (start - 1) - a;
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            detail::box_partitions(a, rest, cur, parts);
            std::vector<MultiLaurent> fs;
            for (auto& p : parts) fs.push_back(detail::orbit_sum(m, start, a, p));
            per_block.push_back(std::move(fs));
            start += a;
        }
        std::vector<MultiLaurent> acc{MultiLaurent(m, Laurent(1))};
        for (auto& fs : per_block) {
            std::vector<MultiLaurent> next;
            for (auto& x : acc)
                for (auto& y : fs) next.push_back(x * y);
            acc = std::move(next);
        }
        ps.probes = std::move(acc);
        ps.complete = true;
        return ps;
    }
    ps.probes.push_back(MultiLaurent(m, Laurent(1)));
    {
        Exps e(static_cast<std::size_t>(m), 0);
        int start = 0, k = 0;
        for (int a : blocks) {
            ++k;
            for (int j = 0; j < a; ++j) e[static_cast<std::size_t>(start + j)] = k;
            start += a;
        }
        ps.probes.push_back(MultiLaurent::monomial(e));
    }
    std::mt19937 g(seed);
    std::uniform_int_distribution<int> ex(-1, 2);
    for (int t = 0; t < extra; ++t) {
        MultiLaurent f(m, Laurent(1));
        int start = 1;
        for (int a : blocks) {
            std::vector<int> nu(static_cast<std::size_t>(a));
            for (auto& x : nu) x = ex(g);
            std::sort(nu.rbegin(), nu.rend());
            f = f * detail::orbit_sum(m, start, a, nu);
            start += a;
        }
        ps.probes.push_back(f);
    }
    return ps;
}

inline ProbeSet make_probes(const Object& source, std::size_t max_complete = 24, unsigned seed = 1) { return make_probes(black_blocks(source), max_complete, seed); }

// --------------------------------------------------------------- equality

struct EqualityReport {
    bool equal = true;
    std::size_t probes = 0;
    bool complete = false;
    std::string witness;  // first nonzero residual
};

inline EqualityReport compare(const LinComb& lhs, const LinComb& rhs, const ProbeSet& ps) {
    EqualityReport r;
    r.probes = ps.probes.size();
    r.complete = ps.complete;
    for (auto& f : ps.probes) {
        MultiLaurent d = evaluate(lhs, f) - evaluate(rhs, f);
        if (!d.is_zero()) {
            r.equal = false;
            r.witness = d.str();
            return r;
        }
    }
    return r;
}

inline const Object* common_source(const LinComb& a, const LinComb& b, Object& tgt) {
    const Object* src = nullptr;
    for (auto* l : {&a, &b})
        for (auto& [c, t] : l->terms) {
            if (!src) {
                src = &t.source();
                tgt = t.target();
            } else if (t.source() != *src || t.target() != tgt)
                throw boundary_error("boundary mismatch between compared morphisms");
        }
    return src;
}

inline EqualityReport equals_report(const LinComb& a, const LinComb& b, std::size_t max_complete = 24) {
    Object tgt;
    const Object* src = common_source(a, b, tgt);
    if (!src) return {true, 0, true, ""};
    return compare(a, b, make_probes(*src, max_complete));
}

inline bool equals(const LinComb& a, const LinComb& b) { return equals_report(a, b).equal; }

// --------------------------------------------------------------- basis expansion

// (components, red parameters) of an object
inline std::pair<MultiComposition, std::vector<Laurent>> object_components(const Object& o) {
    MultiComposition comps{{}};
    std::vector<Laurent> reds;
    for (auto& s : o) {
        if (s.red) {
            reds.push_back(s.u);
            comps.emplace_back();
        } else
            comps.back().push_back(s.a);
    }
    return {comps, reds};
}

struct Expansion {
    std::vector<std::pair<BasisLabel, RatFunc>> coeffs;  // nonzero coefficients only
    int dot_bound = 0;
    std::size_t labels = 0;
};

class expansion_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
using ProbeKey = std::pair<std::size_t, Exps>;
inline std::map<ProbeKey, RatFunc> probe_vector(const LinComb& l, const ProbeSet& ps) {
    std::map<ProbeKey, RatFunc> v;
    for (std::size_t k = 0; k < ps.probes.size(); ++k) {
        MultiLaurent img = evaluate(l, ps.probes[k]);
        for (auto& [e, c] : img.terms()) v.emplace(ProbeKey{k, e}, RatFunc(c));
    }
    return v;
}
}  // namespace detail

inline Expansion expand_in_basis(const LinComb& op, std::optional<int> dot_bound = std::nullopt, int hard_cap = 8) {
    if (op.terms.empty()) throw std::invalid_argument("cannot infer boundaries of an empty combination");
    const Object& src = op.terms.front().second.source();
    const Object& tgt = op.terms.front().second.target();
    auto [scomps, sreds] = object_components(src);
    auto [tcomps, treds] = object_components(tgt);
    if (sreds != treds) throw boundary_error("red strands differ between source and target");
    int bound = dot_bound ? *dot_bound : 0;
    if (!dot_bound)
        for (auto& [c, t] : op.terms) bound = std::max(bound, degrees(t).dot_degree);
    ProbeSet ps = make_probes(src, 1u << 20);
    auto target = detail::probe_vector(op, ps);
    for (; bound <= hard_cap; ++bound) {
        auto labels = enumerate_basis_labels(LabelKind::RParMat, tcomps, scomps, bound);
        Reducer<detail::ProbeKey, RatFunc> red;
        for (auto& lab : labels) {
            Term el = elaborate(ElementaryRibbon{scomps, tcomps, lab, sreds});
            if (!red.add(detail::probe_vector(LinComb(el), ps))) throw expansion_error("basis images are dependent on the probes");
        }
        auto sol = red.solve(target);
        if (!sol) continue;
        Expansion ex;
        ex.dot_bound = bound;
        ex.labels = labels.size();
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (!(*sol)[j].is_zero()) ex.coeffs.emplace_back(labels[j], (*sol)[j]);
        // exact residual check
        std::map<detail::ProbeKey, RatFunc> back;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if ((*sol)[j].is_zero()) continue;
            Term el = elaborate(ElementaryRibbon{scomps, tcomps, labels[j], sreds});
            for (auto& [k, v] : detail::probe_vector(LinComb(el), ps)) {
                auto it = back.find(k);
                RatFunc add = (*sol)[j] * v;
                if (it == back.end())
                    back.emplace(k, add);
                else
                    it->second = it->second + add;
            }
        }
        for (auto& [k, v] : target) {
            auto it = back.find(k);
            if (it == back.end() || !(it->second == v)) throw expansion_error("nonzero residual after solving");
        }
        for (auto& [k, v] : back)
            if (!v.is_zero() && !target.count(k)) throw expansion_error("nonzero residual after solving");
        return ex;
    }
    throw expansion_error("bound exceeded");
}

// --------------------------------------------------------------- independence and End(1_a)

struct RankReport {
    std::size_t labels = 0, rank = 0;
    bool full() const { return labels == rank; }
};

// Rank of the probe matrix of all RParMat labels Hom(source, target) with dot degree <= bound.
inline RankReport rparmat_rank(const MultiComposition& source, const MultiComposition& target, int dot_bound, const std::vector<Laurent>& reds = {}) {
    ProbeSet ps = make_probes(flatten(source), 1u << 20);
    Reducer<detail::ProbeKey, RatFunc> red;
    RankReport r;
    for (auto& lab : enumerate_basis_labels(LabelKind::RParMat, target, source, dot_bound)) {
        ++r.labels;
        red.add(detail::probe_vector(LinComb(elaborate(ElementaryRibbon{source, target, lab, reds})), ps));
    }
    r.rank = red.rank();
    return r;
}

struct EndReport {
    std::vector<Packet> packets;
    std::vector<MultiLaurent> images;  // omega_{a,lambda} applied to 1
    bool distinct_leading = false;
    bool commuting = false;
};

// omega_{a,lambda} for lambda in RPar_a of degree <= max_degree
inline EndReport end_identity(int a, int max_degree) {
    EndReport r;
    r.packets = rational_partitions(a, max_degree);
    std::vector<Term> ts;
    for (auto& p : r.packets) {
        ts.push_back(omega_packet(a, p));
        r.images.push_back(evaluate(ts.back(), MultiLaurent(a, Laurent(1))));
    }
    std::set<Exps> lead;
    for (auto& f : r.images)
        if (!f.is_zero()) lead.insert(f.leading_exponent());
    r.distinct_leading = lead.size() == r.images.size();
    r.commuting = true;
    for (std::size_t i = 0; i < ts.size() && r.commuting; ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (!equals(LinComb(compose(ts[i], ts[j])), LinComb(compose(ts[j], ts[i])))) {
                r.commuting = false;
                break;
            }
    return r;
}

// --------------------------------------------------------------- relation reports

struct RelationReport {
    std::string id;
    std::string params;
    std::size_t probes = 0;
    bool complete = false;
    double seconds = 0;
    bool pass = false;
    std::string residual;
};

inline nlohmann::json to_json(const RelationReport& r) {
    nlohmann::json j{{"relation", r.id}, {"params", r.params}, {"probes", r.probes}, {"probe_kind", r.complete ? "complete" : "probe"}, {"seconds", r.seconds}, {"pass", r.pass}};
    if (!r.pass) j["residual"] = r.residual;
    return j;
}

inline RelationReport check_equal(const std::string& id, const std::string& params, const LinComb& lhs, const LinComb& rhs, std::size_t max_complete = 24) {
    auto t0 = std::chrono::steady_clock::now();
    RelationReport r{id, params};
    try {
        EqualityReport e = equals_report(lhs, rhs, max_complete);
        r.probes = e.probes;
        r.complete = e.complete;
        r.pass = e.equal;
        r.residual = e.witness;
    } catch (const std::exception& ex) {
        r.pass = false;
        r.residual = ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace qschur
