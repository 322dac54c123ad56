#pragma once

#include "combinat.hpp"
#include "ring.hpp"

#include <json.hpp>

#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

struct Strand {
    bool red = false;
    int a = 0;   // thickness of a black strand
    Laurent u;   // parameter of a red strand

    static Strand black(int a) { return {false, a, Laurent()}; }
    static Strand red_strand(const Laurent& u) { return {true, 0, u}; }
    friend bool operator==(const Strand& x, const Strand& y) { return x.red == y.red && (x.red ? x.u == y.u : x.a == y.a); }
    friend bool operator!=(const Strand& x, const Strand& y) { return !(x == y); }
};

using Object = std::vector<Strand>;

inline int black_weight(const Object& o) {
    int s = 0;
    for (auto& x : o)
        if (!x.red) s += x.a;
    return s;
}

inline std::string object_text(const Object& o) {
    std::string s = "(";
    for (std::size_t i = 0; i < o.size(); ++i) {
        s += i ? "," : "";
        s += o[i].red ? "u=" + o[i].u.str() : std::to_string(o[i].a);
    }
    return s + ")";
}

inline Object black_object(const Composition& c) {
    Object o;
    for (int x : c)
        if (x > 0) o.push_back(Strand::black(x));
    return o;
}

// (comp_0, u_1, comp_1, ..., u_ell, comp_ell)
inline Object schur_object(const MultiComposition& comps, const std::vector<Laurent>& reds) {
    if (comps.size() != reds.size() + 1) throw std::invalid_argument("need one red parameter between consecutive components");
    Object o = black_object(comps[0]);
    for (std::size_t i = 0; i < reds.size(); ++i) {
        o.push_back(Strand::red_strand(reds[i]));
        for (int x : comps[i + 1]) o.push_back(Strand::black(x));
    }
    return o;
}

enum class Gen { Identity, Merge, Split, CrossPos, CrossNeg, SolidDot, OpenDot, TraverseUp, TraverseDown };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Leaf, Compose, Tensor } kind = Kind::Leaf;
    Gen gen = Gen::Identity;
    int a = 0, b = 0;
    Laurent u;
    NodePtr x, y;  // compose: x on top of y; tensor: x left of y
    Object src, tgt;
};

class Term {
public:
    Term() : n_(std::make_shared<Node>()) {}
    explicit Term(NodePtr n) : n_(std::move(n)) {}

    const Node& node() const { return *n_; }
    const NodePtr& ptr() const { return n_; }
    const Object& source() const { return n_->src; }
    const Object& target() const { return n_->tgt; }
    bool is_identity() const { return n_->kind == Node::Kind::Leaf && n_->gen == Gen::Identity; }

private:
    NodePtr n_;
};

class boundary_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Term identity(const Object& o) {
    auto n = std::make_shared<Node>();
    for (auto& s : o)
        if (s.red || s.a > 0) n->src.push_back(s);
    n->tgt = n->src;
    return Term(n);
}

namespace detail {
inline Term leaf(Gen g, int a, int b, const Laurent& u, Object src, Object tgt) {
    auto n = std::make_shared<Node>();
    n->gen = g;
    n->a = a;
    n->b = b;
    n->u = u;
    n->src = std::move(src);
    n->tgt = std::move(tgt);
    return Term(n);
}
inline Object cat(const Object& x, const Object& y) {
    Object r(x);
    r.insert(r.end(), y.begin(), y.end());
    return r;
}
}  // namespace detail

// Generators.  Thickness-0 arguments collapse to identities.
inline Term id_black(int a) { return identity({Strand::black(a)}); }
inline Term id_red(const Laurent& u) { return identity({Strand::red_strand(u)}); }

inline Term merge(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative thickness");
    if (a == 0 || b == 0) return id_black(a + b);
    return detail::leaf(Gen::Merge, a, b, {}, {Strand::black(a), Strand::black(b)}, {Strand::black(a + b)});
}
inline Term split(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative thickness");
    if (a == 0 || b == 0) return id_black(a + b);
    return detail::leaf(Gen::Split, a, b, {}, {Strand::black(a + b)}, {Strand::black(a), Strand::black(b)});
}
inline Term cross_pos(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative thickness");
    if (a == 0 || b == 0) return id_black(a + b);
    return detail::leaf(Gen::CrossPos, a, b, {}, {Strand::black(a), Strand::black(b)}, {Strand::black(b), Strand::black(a)});
}
inline Term cross_neg(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative thickness");
    if (a == 0 || b == 0) return id_black(a + b);
    return detail::leaf(Gen::CrossNeg, a, b, {}, {Strand::black(a), Strand::black(b)}, {Strand::black(b), Strand::black(a)});
}
inline Term solid_dot(int a) {
    if (a < 0) throw std::invalid_argument("negative thickness");
    if (a == 0) return identity({});
    return detail::leaf(Gen::SolidDot, a, 0, {}, {Strand::black(a)}, {Strand::black(a)});
}
inline Term open_dot(int a) {
    if (a < 0) throw std::invalid_argument("negative thickness");
    if (a == 0) return identity({});
    return detail::leaf(Gen::OpenDot, a, 0, {}, {Strand::black(a)}, {Strand::black(a)});
}
// black strand a passes a red strand u, moving right: (a, u) -> (u, a)
inline Term traverse_up(int a, const Laurent& u) {
    if (a < 0) throw std::invalid_argument("negative thickness");
    if (a == 0) return id_red(u);
    return detail::leaf(Gen::TraverseUp, a, 0, u, {Strand::black(a), Strand::red_strand(u)}, {Strand::red_strand(u), Strand::black(a)});
}
// black strand a passes a red strand u, moving left: (u, a) -> (a, u)
inline Term traverse_down(int a, const Laurent& u) {
    if (a < 0) throw std::invalid_argument("negative thickness");
    if (a == 0) return id_red(u);
    return detail::leaf(Gen::TraverseDown, a, 0, u, {Strand::red_strand(u), Strand::black(a)}, {Strand::black(a), Strand::red_strand(u)});
}

// top o bottom
inline Term compose(const Term& top, const Term& bottom) {
    if (top.source() != bottom.target())
        throw boundary_error("boundary mismatch: " + object_text(bottom.target()) + " vs " + object_text(top.source()));
    if (top.is_identity()) return bottom;
    if (bottom.is_identity()) return top;
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Compose;
    n->x = top.ptr();
    n->y = bottom.ptr();
    n->src = bottom.source();
    n->tgt = top.target();
    return Term(n);
}

inline Term tensor(const Term& left, const Term& right) {
    if (left.is_identity() && right.is_identity()) return identity(detail::cat(left.source(), right.source()));
    if (left.is_identity() && left.source().empty()) return right;
    if (right.is_identity() && right.source().empty()) return left;
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Tensor;
    n->x = left.ptr();
    n->y = right.ptr();
    n->src = detail::cat(left.source(), right.source());
    n->tgt = detail::cat(left.target(), right.target());
    return Term(n);
}

inline Term tensor(std::initializer_list<Term> ts) {
    Term acc = identity({});
    for (auto& t : ts) acc = tensor(acc, t);
    return acc;
}

// bottom-to-top list of layers
inline Term stack(std::initializer_list<Term> bottom_to_top) {
    auto it = bottom_to_top.begin();
    Term acc = *it++;
    for (; it != bottom_to_top.end(); ++it) acc = compose(*it, acc);
    return acc;
}

inline Term operator*(const Term& top, const Term& bottom) { return compose(top, bottom); }

// Procedure: validate -- boundaries were checked at construction; this rechecks
// the whole tree and reports the failing node path.
inline std::pair<Object, Object> validate(const Term& t, const std::string& path = "root") {
    const Node& n = t.node();
    switch (n.kind) {
        case Node::Kind::Leaf: return {n.src, n.tgt};
        case Node::Kind::Compose: {
            auto top = validate(Term(n.x), path + ".top");
            auto bot = validate(Term(n.y), path + ".bottom");
            if (top.first != bot.second) throw boundary_error("boundary mismatch at " + path);
            return {bot.first, top.second};
        }
        case Node::Kind::Tensor: {
            auto l = validate(Term(n.x), path + ".left");
            auto r = validate(Term(n.y), path + ".right");
            return {detail::cat(l.first, r.first), detail::cat(l.second, r.second)};
        }
    }
    return {};
}

// ---------------------------------------------------------------- linear combinations

struct LinComb {
    std::vector<std::pair<Laurent, Term>> terms;

    LinComb() = default;
    LinComb(const Term& t) { terms.emplace_back(Laurent(1), t); }
    static LinComb zero() { return LinComb(); }

    LinComb& add(const Laurent& c, const Term& t) {
        if (!c.is_zero()) terms.emplace_back(c, t);
        return *this;
    }
    LinComb& operator+=(const LinComb& o) {
        for (auto& [c, t] : o.terms) add(c, t);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) {
        for (auto& [c, t] : b.terms) a.add(-c, t);
        return a;
    }
    friend LinComb operator*(const Laurent& k, const LinComb& a) {
        LinComb r;
        for (auto& [c, t] : a.terms) r.add(k * c, t);
        return r;
    }
    friend LinComb operator*(const LinComb& top, const LinComb& bottom) {
        LinComb r;
        for (auto& [c1, t1] : top.terms)
            for (auto& [c2, t2] : bottom.terms) r.add(c1 * c2, compose(t1, t2));
        return r;
    }
};

inline LinComb tensor(const LinComb& l, const LinComb& r) {
    LinComb out;
    for (auto& [c1, t1] : l.terms)
        for (auto& [c2, t2] : r.terms) out.add(c1 * c2, tensor(t1, t2));
    return out;
}

// ---------------------------------------------------------------- dot packets

// omega_{a,r}: r > 0 puts a solid dot on the left r-strand of a split/merge sandwich,
// r < 0 puts a hollow dot on the right |r|-strand.
inline Term omega(int a, int r) {
    if (r > a || -r > a) throw std::invalid_argument("dot out of range");
    if (r == 0) return id_black(a);
    if (r > 0) return stack({split(r, a - r), tensor(solid_dot(r), id_black(a - r)), merge(r, a - r)});
    int s = -r;
    return stack({split(a - s, s), tensor(id_black(a - s), open_dot(s)), merge(a - s, s)});
}

// omega_{a,nu}: nu_1 on top, nu_k at the bottom
inline Term omega_packet(int a, const Packet& nu) {
    Term t = id_black(a);
    for (int r : nu) {
        if (r > a || -r > a) throw std::invalid_argument("dot out of range");
        t = compose(t, omega(a, r));
    }
    return t;
}

// g_r(u) = sum_t (-u)^t q^{-t(r-t)} omega_{r,r-t}; for several u the factors are stacked.
inline LinComb g_diagram(int r, const std::vector<Laurent>& us) {
    LinComb acc(id_black(r));
    for (auto& u : us) {
        LinComb g;
        Laurent mu = -u;
        for (int t = 0; t <= r; ++t) g.add(mu.pow(static_cast<unsigned>(t)) * Laurent::q(-t * (r - t)), omega(r, r - t));
        acc = g * acc;
    }
    return acc;
}

// ---------------------------------------------------------------- flip

inline Term transpose(const Term& t) {
    const Node& n = t.node();
    switch (n.kind) {
        case Node::Kind::Compose: return compose(transpose(Term(n.y)), transpose(Term(n.x)));
        case Node::Kind::Tensor: return tensor(transpose(Term(n.x)), transpose(Term(n.y)));
        case Node::Kind::Leaf: break;
    }
    switch (n.gen) {
        case Gen::Identity: return t;
        case Gen::Merge: return split(n.a, n.b);
        case Gen::Split: return merge(n.a, n.b);
        case Gen::CrossPos: return cross_pos(n.b, n.a);
        case Gen::CrossNeg: return cross_neg(n.b, n.a);
        case Gen::SolidDot:
        case Gen::OpenDot: return t;
        case Gen::TraverseUp: return traverse_down(n.a, n.u);
        case Gen::TraverseDown: return traverse_up(n.a, n.u);
    }
    return t;
}

inline LinComb transpose(const LinComb& l) {
    LinComb r;
    for (auto& [c, t] : l.terms) r.add(c, transpose(t));
    return r;
}

// ---------------------------------------------------------------- degrees

struct DegreeReport {
    int crossing_degree = 0;
    int dot_degree = 0;
    friend bool operator==(const DegreeReport& x, const DegreeReport& y) { return x.crossing_degree == y.crossing_degree && x.dot_degree == y.dot_degree; }
};

inline DegreeReport degrees(const Term& t) {
    const Node& n = t.node();
    if (n.kind != Node::Kind::Leaf) {
        auto x = degrees(Term(n.x)), y = degrees(Term(n.y));
        return {x.crossing_degree + y.crossing_degree, x.dot_degree + y.dot_degree};
    }
    switch (n.gen) {
        case Gen::CrossPos:
        case Gen::CrossNeg: return {n.a + n.b, 0};
        case Gen::SolidDot:
        case Gen::OpenDot:
        case Gen::TraverseDown: return {0, n.a};
        default: return {0, 0};
    }
}

inline int node_count(const Term& t) {
    const Node& n = t.node();
    if (n.kind == Node::Kind::Leaf) return n.gen == Gen::Identity ? 0 : 1;
    return node_count(Term(n.x)) + node_count(Term(n.y));
}

// ---------------------------------------------------------------- elementary ribbons

// Hom(source, target); objects are (1+ell)-multicompositions with the red
// parameters between components (a single component means no reds).
struct ElementaryRibbon {
    MultiComposition source, target;
    BasisLabel label;
    std::vector<Laurent> reds;
};

namespace detail {
// split a strand of thickness sum(parts) into the given parts (zeros dropped)
inline Term split_into(const std::vector<int>& parts) {
    std::vector<int> p;
    for (int x : parts)
        if (x > 0) p.push_back(x);
    if (p.size() <= 1) return identity(black_object(p));
    int rest = 0;
    for (std::size_t i = 1; i < p.size(); ++i) rest += p[i];
    std::vector<int> tail(p.begin() + 1, p.end());
    return compose(tensor(id_black(p[0]), split_into(tail)), split(p[0], rest));
}
inline Term merge_from(const std::vector<int>& parts) {
    std::vector<int> p;
    for (int x : parts)
        if (x > 0) p.push_back(x);
    if (p.size() <= 1) return identity(black_object(p));
    int rest = 0;
    for (std::size_t i = 1; i < p.size(); ++i) rest += p[i];
    std::vector<int> tail(p.begin() + 1, p.end());
    return compose(merge(p[0], rest), tensor(id_black(p[0]), merge_from(tail)));
}
inline Term layer(const Object& left, const Term& g, const Object& right) { return tensor({identity(left), g, identity(right)}); }
}  // namespace detail

inline Term elaborate(const ElementaryRibbon& rb) {
    const auto& A = rb.label.A;
    Composition lam = flatten(rb.target), mu = flatten(rb.source);
    if (rb.source.size() != rb.target.size() || rb.source.size() != rb.reds.size() + 1) throw std::invalid_argument("ribbon objects and red parameters disagree");
    if (A.size() != lam.size()) throw std::invalid_argument("label rows do not match the target");
    for (std::size_t i = 0; i < A.size(); ++i) {
        int s = 0;
        if (A[i].size() != mu.size()) throw std::invalid_argument("label columns do not match the source");
        for (int x : A[i]) s += x;
        if (s != lam[i]) throw std::invalid_argument("label row sums do not match the target");
    }
    for (std::size_t j = 0; j < mu.size(); ++j) {
        int s = 0;
        for (std::size_t i = 0; i < A.size(); ++i) s += A[i][j];
        if (s != mu[j]) throw std::invalid_argument("label column sums do not match the source");
    }
    std::vector<int> pc = block_components(rb.target), qc = block_components(rb.source);

    // items in bottom order: legs (i,j) and reds
    struct Item {
        bool red;
        int thick;
        Laurent u;
        std::size_t rank;  // position in the top order
    };
    // top order keys
    std::vector<Item> items;
    Term splits = identity({}), dots = identity({});
    std::size_t j = 0;
    // rank of leg (i, j) in the top order: legs ordered by (i, j), reds placed between components
    auto leg_rank = [&](std::size_t i, std::size_t jj) {
        std::size_t r = 0;
        for (std::size_t ii = 0; ii < A.size(); ++ii)
            for (std::size_t kk = 0; kk < mu.size(); ++kk)
                if (A[ii][kk] > 0 && std::make_pair(ii, kk) < std::make_pair(i, jj)) ++r;
        return r + static_cast<std::size_t>(pc[i]);  // reds before component pc[i]
    };
    auto red_rank = [&](std::size_t t) {  // red u_{t+1} sits before component t+1
        std::size_t r = 0;
        for (std::size_t ii = 0; ii < A.size(); ++ii)
            for (std::size_t kk = 0; kk < mu.size(); ++kk)
                if (A[ii][kk] > 0 && pc[ii] <= static_cast<int>(t)) ++r;
        return r + t;
    };
    for (std::size_t comp = 0; comp < rb.source.size(); ++comp) {
        if (comp > 0) {
            items.push_back({true, 0, rb.reds[comp - 1], red_rank(comp - 1)});
            splits = tensor(splits, id_red(rb.reds[comp - 1]));
            dots = tensor(dots, id_red(rb.reds[comp - 1]));
        }
        for (std::size_t k = 0; k < rb.source[comp].size(); ++k, ++j) {
            std::vector<int> parts;
            for (std::size_t i = 0; i < A.size(); ++i) {
                if (A[i][j] == 0) continue;
                parts.push_back(A[i][j]);
                items.push_back({false, A[i][j], {}, leg_rank(i, j)});
                dots = tensor(dots, omega_packet(A[i][j], rb.label.P[i][j]));
            }
            splits = tensor(splits, detail::split_into(parts));
        }
    }
    Term body = compose(dots, splits);
    // insertion sort towards the top order, one generator per swap
    auto current_object = [&]() {
        Object o;
        for (auto& it : items) o.push_back(it.red ? Strand::red_strand(it.u) : Strand::black(it.thick));
        return o;
    };
    for (std::size_t k = 1; k < items.size(); ++k) {
        std::size_t p = k;
        while (p > 0 && items[p - 1].rank > items[p].rank) {
            Object o = current_object();
            Object left(o.begin(), o.begin() + static_cast<std::ptrdiff_t>(p - 1)), right(o.begin() + static_cast<std::ptrdiff_t>(p + 1), o.end());
            const Item &x = items[p - 1], &y = items[p];
            Term g;
            if (x.red && y.red) throw std::logic_error("red strands never cross");
            if (!x.red && !y.red)
                g = cross_pos(x.thick, y.thick);
            else if (!x.red)
                g = traverse_up(x.thick, y.u);
            else
                g = traverse_down(y.thick, x.u);
            body = compose(detail::layer(left, g, right), body);
            std::swap(items[p - 1], items[p]);
            --p;
        }
    }
    // merges at the top
    Term merges = identity({});
    std::size_t i = 0;
    for (std::size_t comp = 0; comp < rb.target.size(); ++comp) {
        if (comp > 0) merges = tensor(merges, id_red(rb.reds[comp - 1]));
        for (std::size_t k = 0; k < rb.target[comp].size(); ++k, ++i) {
            std::vector<int> parts;
            for (std::size_t jj = 0; jj < mu.size(); ++jj)
                if (A[i][jj] > 0) parts.push_back(A[i][jj]);
            merges = tensor(merges, detail::merge_from(parts));
        }
    }
    return compose(merges, body);
}

// A_T for T in SST(lambda, nu): rows are the blocks (p,i) of nu, columns the rows (q,j) of lambda.
inline BasisLabel sst_matrix(const MultiTableau& T, const MultiComposition& lambda, const MultiComposition& nu) {
    if (!is_semistandard(T)) throw std::invalid_argument("tableau is not semistandard");
    if (T.shape != lambda) throw std::invalid_argument("tableau shape mismatch");
    BasisLabel lab;
    lab.kind = LabelKind::ParMatFlat;
    Composition rows = flatten(nu), cols = flatten(lambda);
    lab.A.assign(rows.size(), std::vector<int>(cols.size(), 0));
    lab.P.assign(rows.size(), std::vector<Packet>(cols.size()));
    std::vector<std::size_t> row_off(nu.size() + 1, 0), col_off(lambda.size() + 1, 0);
    for (std::size_t p = 0; p < nu.size(); ++p) row_off[p + 1] = row_off[p] + nu[p].size();
    for (std::size_t q = 0; q < lambda.size(); ++q) col_off[q + 1] = col_off[q] + lambda[q].size();
    for (std::size_t q = 0; q < T.cells.size(); ++q)
        for (std::size_t jr = 0; jr < T.cells[q].size(); ++jr)
            for (const Entry& e : T.cells[q][jr]) {
                std::size_t row = row_off[e.comp - 1] + static_cast<std::size_t>(e.value - 1);
                if (e.comp < 1 || e.comp > static_cast<int>(nu.size()) || e.value > static_cast<int>(nu[e.comp - 1].size()))
                    throw std::invalid_argument("tableau entry outside the type");
                ++lab.A[row][col_off[q] + jr];
            }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        int s = 0;
        for (int x : lab.A[r]) s += x;
        if (s != rows[r]) throw std::invalid_argument("tableau is not of the given type");
    }
    return lab;
}

// [T] : lambda -> nu as a ribbon between (empty, lambda...) and (empty, nu...)
inline ElementaryRibbon sst_to_ribbon(const MultiTableau& T, const MultiComposition& lambda, const MultiComposition& nu, const std::vector<Laurent>& us) {
    ElementaryRibbon rb;
    rb.source = MultiComposition{{}};
    rb.source.insert(rb.source.end(), lambda.begin(), lambda.end());
    rb.target = MultiComposition{{}};
    rb.target.insert(rb.target.end(), nu.begin(), nu.end());
    rb.label = sst_matrix(T, lambda, nu);
    rb.reds = us;
    return rb;
}

// ---------------------------------------------------------------- text and json

namespace detail {
inline std::string laurent_token(const Laurent& u) {
    std::string s;
    for (char c : u.str())
        if (c != ' ') s += c;
    return s;
}
}  // namespace detail

inline std::string to_sexpr(const Term& t) {
    const Node& n = t.node();
    if (n.kind == Node::Kind::Compose) return "(compose " + to_sexpr(Term(n.x)) + " " + to_sexpr(Term(n.y)) + ")";
    if (n.kind == Node::Kind::Tensor) return "(tensor " + to_sexpr(Term(n.x)) + " " + to_sexpr(Term(n.y)) + ")";
    auto ab = [&](const char* name) { return std::string("(") + name + " " + std::to_string(n.a) + " " + std::to_string(n.b) + ")"; };
    switch (n.gen) {
        case Gen::Identity: {
            std::string s = "(id";
            for (auto& x : n.src) s += x.red ? " (red " + detail::laurent_token(x.u) + ")" : " " + std::to_string(x.a);
            return s + ")";
        }
        case Gen::Merge: return ab("merge");
        case Gen::Split: return ab("split");
        case Gen::CrossPos: return ab("crosspos");
        case Gen::CrossNeg: return ab("crossneg");
        case Gen::SolidDot: return "(dot " + std::to_string(n.a) + ")";
        case Gen::OpenDot: return "(opendot " + std::to_string(n.a) + ")";
        case Gen::TraverseUp: return "(up " + std::to_string(n.a) + " " + detail::laurent_token(n.u) + ")";
        case Gen::TraverseDown: return "(down " + std::to_string(n.a) + " " + detail::laurent_token(n.u) + ")";
    }
    return "";
}

namespace detail {
struct SexprParser {
    std::vector<std::string> tok;
    std::size_t i = 0;
    explicit SexprParser(const std::string& s) {
        std::string cur;
        for (char c : s) {
            if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
                if (!cur.empty()) tok.push_back(cur), cur.clear();
                if (c == '(' || c == ')') tok.emplace_back(1, c);
            } else
                cur += c;
        }
        if (!cur.empty()) tok.push_back(cur);
    }
    const std::string& peek() const {
        if (i >= tok.size()) throw std::invalid_argument("unexpected end of term");
        return tok[i];
    }
    std::string next() {
        std::string t = peek();
        ++i;
        return t;
    }
    void expect(const std::string& t) {
        if (next() != t) throw std::invalid_argument("expected '" + t + "'");
    }
    int number() {
        std::string t = next();
        std::size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size() || v < 0) throw std::invalid_argument("bad thickness '" + t + "'");
        return v;
    }
    Term term(const std::string& path) {
        expect("(");
        std::string head = next();
        Term out;
        if (head == "compose" || head == "tensor") {
            std::vector<Term> parts;
            while (peek() != ")") parts.push_back(term(path + "." + head + "[" + std::to_string(parts.size()) + "]"));
            if (parts.empty()) throw std::invalid_argument("empty " + head);
            out = parts[0];
            for (std::size_t k = 1; k < parts.size(); ++k) {
                if (head == "tensor")
                    out = tensor(out, parts[k]);
                else {
                    try {
                        out = compose(out, parts[k]);
                    } catch (const boundary_error&) {
                        throw boundary_error("boundary mismatch at " + path + ".compose[" + std::to_string(k) + "]");
                    }
                }
            }
        } else if (head == "id") {
            Object o;
            while (peek() != ")") {
                if (peek() == "(") {
                    next();
                    if (next() != "red") throw std::invalid_argument("expected red");
                    o.push_back(Strand::red_strand(Laurent::parse(next())));
                    expect(")");
                } else
                    o.push_back(Strand::black(number()));
            }
            out = identity(o);
        } else if (head == "merge" || head == "split" || head == "crosspos" || head == "crossneg") {
            int a = number(), b = number();
            out = head == "merge" ? merge(a, b) : head == "split" ? split(a, b) : head == "crosspos" ? cross_pos(a, b) : cross_neg(a, b);
        } else if (head == "dot" || head == "opendot") {
            int a = number();
            out = head == "dot" ? solid_dot(a) : open_dot(a);
        } else if (head == "omega") {
            int a = number();
            std::string t = next();
            out = omega(a, std::stoi(t));
        } else if (head == "up" || head == "down") {
            int a = number();
            Laurent u = Laurent::parse(next());
            out = head == "up" ? traverse_up(a, u) : traverse_down(a, u);
        } else
            throw std::invalid_argument("unknown generator '" + head + "'");
        expect(")");
        return out;
    }
};
}  // namespace detail

inline Term parse_sexpr(const std::string& s) {
    detail::SexprParser p(s);
    Term t = p.term("root");
    if (p.i != p.tok.size()) throw std::invalid_argument("trailing input after term");
    return t;
}

inline nlohmann::json to_json(const Term& t) {
    const Node& n = t.node();
    using nlohmann::json;
    if (n.kind == Node::Kind::Compose) return json{{"op", "compose"}, {"args", {to_json(Term(n.x)), to_json(Term(n.y))}}};
    if (n.kind == Node::Kind::Tensor) return json{{"op", "tensor"}, {"args", {to_json(Term(n.x)), to_json(Term(n.y))}}};
    switch (n.gen) {
        case Gen::Identity: {
            json obj = json::array();
            for (auto& x : n.src) obj.push_back(x.red ? json{{"red", x.u.str()}} : json(x.a));
            return json{{"op", "id"}, {"object", obj}};
        }
        case Gen::Merge: return json{{"op", "merge"}, {"a", n.a}, {"b", n.b}};
        case Gen::Split: return json{{"op", "split"}, {"a", n.a}, {"b", n.b}};
        case Gen::CrossPos: return json{{"op", "crosspos"}, {"a", n.a}, {"b", n.b}};
        case Gen::CrossNeg: return json{{"op", "crossneg"}, {"a", n.a}, {"b", n.b}};
        case Gen::SolidDot: return json{{"op", "dot"}, {"a", n.a}};
        case Gen::OpenDot: return json{{"op", "opendot"}, {"a", n.a}};
        case Gen::TraverseUp: return json{{"op", "up"}, {"a", n.a}, {"u", n.u.str()}};
        case Gen::TraverseDown: return json{{"op", "down"}, {"a", n.a}, {"u", n.u.str()}};
    }
    return {};
}

inline Term term_from_json(const nlohmann::json& j) {
    std::string op = j.at("op");
    if (op == "compose" || op == "tensor") {
        const auto& args = j.at("args");
        if (args.empty()) throw std::invalid_argument("empty " + op);
        Term out = term_from_json(args[0]);
        for (std::size_t k = 1; k < args.size(); ++k) out = op == "compose" ? compose(out, term_from_json(args[k])) : tensor(out, term_from_json(args[k]));
        return out;
    }
    if (op == "id") {
        Object o;
        for (auto& x : j.at("object")) o.push_back(x.is_object() ? Strand::red_strand(Laurent::parse(x.at("red").get<std::string>())) : Strand::black(x.get<int>()));
        return identity(o);
    }
    if (op == "merge") return merge(j.at("a"), j.at("b"));
    if (op == "split") return split(j.at("a"), j.at("b"));
    if (op == "crosspos") return cross_pos(j.at("a"), j.at("b"));
    if (op == "crossneg") return cross_neg(j.at("a"), j.at("b"));
    if (op == "dot") return solid_dot(j.at("a"));
    if (op == "opendot") return open_dot(j.at("a"));
    if (op == "up") return traverse_up(j.at("a"), Laurent::parse(j.at("u").get<std::string>()));
    if (op == "down") return traverse_down(j.at("a"), Laurent::parse(j.at("u").get<std::string>()));
    throw std::invalid_argument("unknown op '" + op + "'");
}

// structural equality
inline bool same_term(const Term& x, const Term& y) { return to_sexpr(x) == to_sexpr(y); }

}  // namespace qschur
