#pragma once

#include "diagram.hpp"
#include "hecke.hpp"
#include "polyrep.hpp"
#include "relations.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur {

// A morphism of the cyclotomic Schur category, realised through G.
// Objects with black strands left of the first red strand are zero; then `zero_object` is set.
struct CycMorphism {
    Object source, target;
    bool zero_object = false;
    HomMap map;

    bool is_zero() const { return zero_object || map.is_zero(); }
};

// ell-multicomposition of an object, or nothing if it is a zero object
inline std::optional<MultiComposition> djm_weight(const Object& o, const CycHecke& h) {
    auto [comps, reds] = object_components(o);
    if (reds != h.parameters()) throw boundary_error("red strands " + object_text(o) + " do not match the algebra parameters");
    if (black_weight(o) != h.rank()) throw boundary_error("object " + object_text(o) + " has the wrong weight");
    if (!comps[0].empty()) return std::nullopt;
    return MultiComposition(comps.begin() + 1, comps.end());
}

inline Object djm_object(const MultiComposition& mu, const CycHecke& h) {
    MultiComposition c{{}};
    c.insert(c.end(), mu.begin(), mu.end());
    return schur_object(c, h.parameters());
}

// crossing (a,b) -> (b,a) written with merges and splits only
inline LinComb crossing_via_square(int a, int b, bool positive) {
    LinComb r;
    for (int s = 0; s <= std::min(a, b); ++s) {
        Laurent c = (s % 2 ? Laurent(-1) : Laurent(1)) * Laurent::q(positive ? s : -s);
        r.add(c, stack({tensor({split(s, a - s), id_black(b)}), tensor({id_black(s), merge(a - s, b)}), tensor({id_black(s), split(b - s, a)}), tensor({merge(s, b - s), id_black(a)})}));
    }
    return r;
}

namespace detail {

inline void add_into(HVec& acc, const RatFunc& c, const HVec& v) {
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (!v[k].is_zero()) acc[k] += c * v[k];
}

// sum of q^{ab - l(d)} H_d over minimal representatives d of the cosets d(S_a x S_b), on the window k+1..k+a+b;
// this is the element sending X_(a,b) to q^{ab} X_(a+b) by left multiplication
inline HVec left_merge(const CycHecke& h, int a, int b, int k, const HVec& v) {
    HVec out = h.zero();
    for (const CosetRep& r : min_coset_reps(a, b)) {
        std::vector<Letter> lets;
        for (int i : r.word) lets.push_back({'H', i + k, 1});
        add_into(out, RatFunc(Laurent::q(a * b - r.length)), h.left_word(lets, v));
    }
    return out;
}

inline HVec g_node(const CycHecke& h, const Node& n, int k, const HVec& v);

inline HVec g_leaf(const CycHecke& h, const Node& n, int k, const HVec& v) {
    switch (n.gen) {
        case Gen::Identity:
        case Gen::Split:
        case Gen::TraverseUp: return v;
        case Gen::Merge: return left_merge(h, n.a, n.b, k, v);
        case Gen::SolidDot:
        case Gen::OpenDot: {
            HVec r = v;
            for (int j = 1; j <= n.a; ++j) r = h.left({'X', k + j, n.gen == Gen::SolidDot ? 1 : -1}, r);
            return r;
        }
        case Gen::TraverseDown: {
            HVec r = v;
            RatFunc u(n.u);
            for (int j = 1; j <= n.a; ++j) {
                HVec x = h.left({'X', k + j, 1}, r);
                add_into(x, -u, r);
                r = std::move(x);
            }
            return r;
        }
        case Gen::CrossPos:
        case Gen::CrossNeg: {
            HVec out = h.zero();
            for (auto& [c, t] : crossing_via_square(n.a, n.b, n.gen == Gen::CrossPos).terms) add_into(out, RatFunc(c), g_node(h, t.node(), k, v));
            return out;
        }
    }
    return v;
}

// no zero-object checks: used inside a single component
inline HVec g_node(const CycHecke& h, const Node& n, int k, const HVec& v) {
    switch (n.kind) {
        case Node::Kind::Compose: return g_node(h, *n.x, k, g_node(h, *n.y, k, v));
        case Node::Kind::Tensor: return g_node(h, *n.x, k, g_node(h, *n.y, k + black_weight(n.x->src), v));
        case Node::Kind::Leaf: return g_leaf(h, n, k, v);
    }
    return v;
}

// walks the term layer by layer; returns false as soon as a layer passes through a zero object
inline bool g_walk(const CycHecke& h, const Node& n, const Object& left, const Object& right, HVec& v) {
    switch (n.kind) {
        case Node::Kind::Compose: return g_walk(h, *n.y, left, right, v) && g_walk(h, *n.x, left, right, v);
        case Node::Kind::Tensor: return g_walk(h, *n.y, cat(left, n.x->src), right, v) && g_walk(h, *n.x, left, cat(n.y->tgt, right), v);
        case Node::Kind::Leaf: break;
    }
    if (n.gen == Gen::Identity) return true;
    if (!djm_weight(cat(cat(left, n.src), right), h) || !djm_weight(cat(cat(left, n.tgt), right), h)) return false;
    v = g_leaf(h, n, black_weight(left), v);
    return true;
}

}  // namespace detail

inline CycMorphism apply_G(const HeckePtr& h, const Term& t) {
    CycMorphism out;
    out.source = t.source();
    out.target = t.target();
    auto src = djm_weight(t.source(), *h), tgt = djm_weight(t.target(), *h);
    out.map.alg = h;
    out.map.image = h->zero();
    if (!src || !tgt) {
        out.zero_object = true;
        return out;
    }
    out.map.source = *src;
    out.map.target = *tgt;
    HVec v = m_lambda(*h, *src);
    if (detail::g_walk(*h, t.node(), {}, {}, v)) out.map.image = std::move(v);
    return out;
}

inline CycMorphism apply_G(const HeckePtr& h, const LinComb& l) {
    if (l.terms.empty()) throw std::invalid_argument("empty linear combination has no boundary");
    CycMorphism out = apply_G(h, l.terms[0].second);
    out.map.image = h->zero();
    for (auto& [c, t] : l.terms) {
        CycMorphism x = apply_G(h, t);
        if (x.source != out.source || x.target != out.target) throw boundary_error("terms with different boundaries");
        detail::add_into(out.map.image, RatFunc(c), x.map.image);
    }
    return out;
}

// G(term) must be a homomorphism M^source -> M^target
inline bool g_well_defined(const CycMorphism& f) { return f.zero_object || well_defined(*f.map.alg, f.map.source, f.map.target, f.map.image); }

inline bool cyc_equals(const CycMorphism& f, const CycMorphism& g) {
    if (f.source != g.source || f.target != g.target) throw boundary_error("boundary mismatch");
    return f.map.image == g.map.image;
}
inline bool cyc_equals(const HeckePtr& h, const LinComb& a, const LinComb& b) { return cyc_equals(apply_G(h, a), apply_G(h, b)); }

struct GRelationReport {
    std::string id, params;
    int ell = 0, m = 0;
    bool pass = false;
    std::string error;
};

inline nlohmann::json to_json(const GRelationReport& r) {
    nlohmann::json j{{"relation", r.id}, {"params", r.params}, {"ell", r.ell}, {"m", r.m}, {"pass", r.pass}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

// Relation instances pushed through G at level ell, parameters 1..ell.  Instances are placed right of
// the reds u_1..u_k (k = ell, or ell - 1 when the instance carries its own red u_ell); instances
// of black weight above max_m are skipped.
inline std::vector<GRelationReport> verify_G_relations(int ell, const std::vector<std::string>& ids, int max_thick, int max_m) {
    std::vector<GRelationReport> out;
    auto us = CycHecke::default_parameters(ell);
    for (auto& id : ids)
        for (auto& inst : find_relation(id).instances(max_thick, us.back())) {
            int m = black_weight(inst.lhs.terms[0].second.source());
            if (m > max_m) continue;
            bool red = false;
            for (auto& s : inst.lhs.terms[0].second.source()) red = red || s.red;
            Object reds;
            for (std::size_t i = 0; i + (red ? 1 : 0) < us.size(); ++i) reds.push_back(Strand::red_strand(us[i]));
            GRelationReport r{id, inst.params, ell, m};
            try {
                auto h = CycHecke::get(ell, m, us);
                LinComb pre(identity(reds));
                r.pass = cyc_equals(h, tensor(pre, inst.lhs), tensor(pre, inst.rhs));
            } catch (const std::exception& e) {
                r.error = e.what();
            }
            out.push_back(r);
        }
    return out;
}

// ---------------------------------------------------------------- double SST basis

struct DoubleSST {
    MultiComposition lambda, mu, nu;  // S in SST(lambda, mu), T in SST(lambda, nu)
    MultiTableau S, T;
    Term diagram;                     // [T] o [S]^flip : mu -> nu
};

inline Term sst_morphism(const MultiTableau& T, const MultiComposition& lambda, const MultiComposition& nu, const std::vector<Laurent>& us) {
    return elaborate(sst_to_ribbon(T, lambda, nu, us));
}

inline Term double_sst_term(const MultiTableau& S, const MultiComposition& mu, const MultiTableau& T, const MultiComposition& nu, const std::vector<Laurent>& us) {
    if (S.shape != T.shape) throw std::invalid_argument("shape mismatch");
    return compose(sst_morphism(T, T.shape, nu, us), transpose(sst_morphism(S, S.shape, mu, us)));
}

inline std::vector<DoubleSST> double_sst_basis(const CycHecke& h, const std::vector<MultiComposition>& mus, const std::vector<MultiComposition>& nus) {
    std::vector<DoubleSST> out;
    for (auto& lambda : multipartitions(h.rank(), h.level()))
        for (auto& mu : mus)
            for (auto& S : enumerate_sst(lambda, mu))
                for (auto& nu : nus)
                    for (auto& T : enumerate_sst(lambda, nu)) out.push_back({lambda, mu, nu, S, T, double_sst_term(S, mu, T, nu, h.parameters())});
    return out;
}

// sum of a*b over the merge and positive crossing vertices of a term.  G of a double SST diagram is
// q^{this} times the cellular element, since G(merge) carries q^{ab} and the cellular side uses q^{-l(w)} H_w.
inline int merge_degree(const Node& n) {
    if (n.kind != Node::Kind::Leaf) return merge_degree(*n.x) + merge_degree(*n.y);
    return n.gen == Gen::Merge || n.gen == Gen::CrossPos ? n.a * n.b : 0;
}

// The cellular element with the same indices: M^mu -> M^nu, m_mu h -> m_TS h.
inline HomMap matching_phi(const HeckePtr& h, const DoubleSST& d) { return {h, d.mu, d.nu, m_ST(*h, d.T, d.nu, d.S, d.mu)}; }

struct IsoCertificate {
    std::size_t pairs = 0;
    std::size_t exact = 0;   // G(diagram) == phi
    std::size_t scaled = 0;  // G(diagram) == q^{merge_degree} phi
    std::vector<std::string> mismatches;
    bool ok() const { return pairs == exact; }
    bool ok_scaled() const { return pairs == scaled; }
};

inline nlohmann::json to_json(const IsoCertificate& c) {
    return {{"pairs", c.pairs}, {"exact", c.exact}, {"scaled", c.scaled}, {"ok", c.ok()}, {"ok_scaled", c.ok_scaled()}, {"mismatches", c.mismatches}};
}

// G([T] o [S]^flip) against phi for every double SST pair
inline IsoCertificate check_isomorphism(const HeckePtr& h) {
    IsoCertificate cert;
    auto ws = schur_weights(*h);
    for (auto& d : double_sst_basis(*h, ws, ws)) {
        ++cert.pairs;
        CycMorphism g = apply_G(h, d.diagram);
        HomMap phi = matching_phi(h, d);
        RatFunc scale(Laurent::q(merge_degree(d.diagram.node())));
        if (g.zero_object) {
        } else if (g.map == phi) {
            ++cert.exact;
            ++cert.scaled;
            continue;
        } else if (g.map == scale * phi) {
            ++cert.scaled;
            continue;
        }
        if (cert.mismatches.size() < 20)
            cert.mismatches.push_back("S=" + d.S.str() + " T=" + d.T.str() + " mu=" + to_text(d.mu) + " nu=" + to_text(d.nu) + " G=" + h->text(g.map.image) +
                                      " phi=" + h->text(phi.image));
    }
    return cert;
}

// ---------------------------------------------------------------- Hom bases from labels

struct LabelledMorphism {
    BasisLabel label;
    Term diagram;
    CycMorphism image;
};

class rank_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Labels of Hom(source, target) elaborated and pushed through G.  Objects are (1+ell)-multicompositions.
// Throws rank_error unless the images are independent and span the Hom space.
inline std::vector<LabelledMorphism> cyc_hom_basis(const HeckePtr& h, LabelKind kind, const MultiComposition& source, const MultiComposition& target) {
    std::vector<LabelledMorphism> out;
    for (auto& lab : enumerate_basis_labels(kind, target, source, 0, h->level())) {
        Term t = elaborate(ElementaryRibbon{source, target, lab, h->parameters()});
        out.push_back({lab, t, apply_G(h, t)});
    }
    if (!source[0].empty() || !target[0].empty()) {
        if (!out.empty()) throw rank_error("labels on a zero object");
        return out;
    }
    MultiComposition mu(source.begin() + 1, source.end()), nu(target.begin() + 1, target.end());
    Reducer<int, RatFunc> red;
    for (auto& x : out)
        if (!red.add(sparse(x.image.map.image))) throw rank_error("dependent image for label " + x.label.str());
    std::size_t d = hom_dim(h, mu, nu);
    if (red.rank() != d) throw rank_error("labels span " + std::to_string(red.rank()) + " of " + std::to_string(d) + " dimensions");
    return out;
}

// The cyclotomic web objects lambda embedded as (empty^ell, lambda).
inline MultiComposition embed_web_object(const Composition& lambda, int ell) {
    MultiComposition c(static_cast<std::size_t>(ell + 1));
    c.back() = lambda;
    return c;
}

// ---------------------------------------------------------------- structure constants

struct StructureTable {
    std::size_t n = 0;
    // entries[{i,j}] = coefficients of b_i o b_j in the basis (composable pairs only)
    // raw: the double SST diagrams themselves; diagrammatic: rescaled by q^{-merge_degree}
    std::map<std::pair<std::size_t, std::size_t>, std::vector<RatFunc>> raw, diagrammatic, hecke;
    bool agree_raw = false;
    bool agree = false;
    bool associative = false;
};

inline std::vector<RatFunc> expand_hom(const HomMap& f, const std::vector<HomMap>& basis) {
    std::vector<std::size_t> idx;
    std::vector<const HomMap*> ptrs;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k].source == f.source && basis[k].target == f.target) {
            idx.push_back(k);
            ptrs.push_back(&basis[k]);
        }
    auto c = coordinates(f, ptrs);
    if (!c) throw rank_error("morphism outside the span of the basis");
    std::vector<RatFunc> out(basis.size());
    for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = (*c)[k];
    return out;
}

// b_i o b_j computed twice: G of the composed diagram, and composition of cellular maps on the Hecke side.
inline StructureTable structure_constants(const HeckePtr& h) {
    auto ws = schur_weights(*h);
    auto basis = double_sst_basis(*h, ws, ws);
    std::vector<HomMap> phis, raw, gs;
    for (auto& d : basis) {
        phis.push_back(matching_phi(h, d));
        raw.push_back(apply_G(h, d.diagram).map);
        gs.push_back(RatFunc(Laurent::q(-merge_degree(d.diagram.node()))) * raw.back());
    }
    StructureTable tab;
    tab.n = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (basis[j].nu != basis[i].mu) continue;
            CycMorphism g = apply_G(h, compose(basis[i].diagram, basis[j].diagram));
            int c = merge_degree(basis[i].diagram.node()) + merge_degree(basis[j].diagram.node());
            tab.raw[{i, j}] = expand_hom(g.map, raw);
            tab.diagrammatic[{i, j}] = expand_hom(RatFunc(Laurent::q(-c)) * g.map, gs);
            tab.hecke[{i, j}] = expand_hom(compose_hom(phis[i], phis[j]), phis);
        }
    tab.agree = tab.diagrammatic == tab.hecke;
    tab.agree_raw = tab.raw == tab.hecke;
    // (b_i b_j) b_k = b_i (b_j b_k) from the table alone
    tab.associative = true;
    for (std::size_t i = 0; i < tab.n && tab.associative; ++i)
        for (std::size_t j = 0; j < tab.n && tab.associative; ++j) {
            auto ij = tab.hecke.find({i, j});
            if (ij == tab.hecke.end()) continue;
            for (std::size_t k = 0; k < tab.n; ++k) {
                auto jk = tab.hecke.find({j, k});
                if (jk == tab.hecke.end()) continue;
                std::vector<RatFunc> lhs(tab.n), rhs(tab.n);
                for (std::size_t a = 0; a < tab.n; ++a) {
                    if (!ij->second[a].is_zero()) {
                        auto ak = tab.hecke.find({a, k});
                        if (ak != tab.hecke.end())
                            for (std::size_t c = 0; c < tab.n; ++c) lhs[c] += ij->second[a] * ak->second[c];
                    }
                    if (!jk->second[a].is_zero()) {
                        auto ia = tab.hecke.find({i, a});
                        if (ia != tab.hecke.end())
                            for (std::size_t c = 0; c < tab.n; ++c) rhs[c] += jk->second[a] * ia->second[c];
                    }
                }
                if (lhs != rhs) {
                    tab.associative = false;
                    break;
                }
            }
        }
    return tab;
}

// ---------------------------------------------------------------- cyclotomic vanishing

// reds u_1..u_i, then a strand of thickness r carrying g_{r,i}, then the remaining reds
inline LinComb cyclotomic_vanishing_diagram(const CycHecke& h, int r, int i) {
    const auto& u = h.parameters();
    std::vector<Laurent> first(u.begin(), u.begin() + i);
    LinComb g = g_diagram(r, first);
    Object left, right;
    for (int k = 0; k < i; ++k) left.push_back(Strand::red_strand(u[static_cast<std::size_t>(k)]));
    for (std::size_t k = static_cast<std::size_t>(i); k < u.size(); ++k) right.push_back(Strand::red_strand(u[k]));
    if (h.rank() > r) right.push_back(Strand::black(h.rank() - r));
    return tensor(tensor(LinComb(identity(left)), g), LinComb(identity(right)));
}

}  // namespace qschur
