#pragma once

#include "diagram.hpp"
#include "polyrep.hpp"
#include "ring.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur {

struct RelationInstance {
    std::string id;
    std::string params;
    LinComb lhs, rhs;
};

enum class RelationGroup { Web, Schur, Derived };

struct RelationSpec {
    std::string id;
    RelationGroup group;
    // all instances with thicknesses up to max_thick (relations with four interacting
    // thicknesses cap themselves at max_thick - 1 when max_thick >= 3)
    std::function<std::vector<RelationInstance>(int max_thick, const Laurent& u)> instances;
};

namespace rel {

inline Term I(int a) { return id_black(a); }
inline Term R(const Laurent& u) { return id_red(u); }
inline Term T(std::initializer_list<Term> ts) { return tensor(ts); }
inline Term S(std::initializer_list<Term> bottom_to_top) { return stack(bottom_to_top); }
inline Term D(int a, const Laurent& u) { return traverse_down(a, u); }
inline Term U(int a, const Laurent& u) { return traverse_up(a, u); }
inline Laurent Q(int k) { return Laurent::q(k); }

inline std::string P(std::initializer_list<std::pair<const char*, int>> kv, const Laurent* u = nullptr) {
    std::string s;
    for (auto& [k, v] : kv) s += (s.empty() ? "" : ",") + std::string(k) + "=" + std::to_string(v);
    if (u) s += ",u=" + u->str();
    return s;
}

inline RelationInstance inst(const std::string& id, const std::string& p, LinComb l, LinComb r) { return {id, p, std::move(l), std::move(r)}; }

// split a into 1^a, decorate each thin strand, merge back
inline LinComb thin_balloon(int a, const LinComb& thin) {
    LinComb mid(identity({}));
    for (int k = 0; k < a; ++k) mid = tensor(mid, thin);
    std::vector<int> ones(static_cast<std::size_t>(a), 1);
    return LinComb(detail::merge_from(ones)) * mid * LinComb(detail::split_into(ones));
}

inline Laurent sgn(int s) { return s % 2 ? Laurent(-1) : Laurent(1); }

inline Laurent cross_coeff(int s) {  // (q^-1 - q)^s [s]!
    return (Q(-1) - Q(1)).pow(static_cast<unsigned>(s)) * q_factorial(s);
}

}  // namespace rel

inline std::vector<RelationSpec> relation_catalog() {
    using namespace rel;
    std::vector<RelationSpec> cat;
    auto add = [&](std::string id, RelationGroup g, std::function<std::vector<RelationInstance>(int, const Laurent&)> f) { cat.push_back({std::move(id), g, std::move(f)}); };

    // ------------------------------------------------------------ defining relations of the web category
    add("webassoc", RelationGroup::Web, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c) {
                    auto p = P({{"a", a}, {"b", b}, {"c", c}});
                    out.push_back(inst("webassoc", p + ",merge", S({T({merge(a, b), I(c)}), merge(a + b, c)}), S({T({I(a), merge(b, c)}), merge(a, b + c)})));
                    out.push_back(inst("webassoc", p + ",split", S({split(a + b, c), T({split(a, b), I(c)})}), S({split(a, b + c), T({I(a), split(b, c)})})));
                }
        return out;
    });
    add("mergesplit", RelationGroup::Web, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        int k = n >= 3 ? n - 1 : n;
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b)
                for (int c = 1; c <= k; ++c) {
                    int d = a + c - b;
                    if (d < 1 || d > k) continue;
                    LinComb rhs;
                    for (int s = 0; s <= std::min(a, b); ++s) {
                        int t = s + d - a;
                        if (t < 0 || t > std::min(c, d)) continue;
                        rhs.add(Q(s * t), S({T({split(s, a - s), split(c - t, t)}), T({I(s), cross_pos(a - s, c - t), I(t)}), T({merge(s, c - t), merge(a - s, t)})}));
                    }
                    out.push_back(inst("mergesplit", P({{"a", a}, {"b", b}, {"c", c}, {"d", d}}), S({merge(a, c), split(b, d)}), rhs));
                }
        return out;
    });
    add("splitbinomial", RelationGroup::Web, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) out.push_back(inst("splitbinomial", P({{"a", a}, {"b", b}}), S({split(a, b), merge(a, b)}), q_binom(a + b, a) * LinComb(I(a + b))));
        return out;
    });
    add("dotmovecrossing", RelationGroup::Web, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                auto p = P({{"a", a}, {"b", b}});
                out.push_back(inst("dotmovecrossing", p + ",bottom", S({T({solid_dot(a), I(b)}), cross_pos(a, b)}), S({cross_neg(a, b), T({I(b), solid_dot(a)})})));
                out.push_back(inst("dotmovecrossing", p + ",top", S({cross_pos(a, b), T({solid_dot(b), I(a)})}), S({T({I(a), solid_dot(b)}), cross_neg(a, b)})));
            }
        return out;
    });
    add("dotmovesplits+merge", RelationGroup::Web, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                auto p = P({{"a", a}, {"b", b}});
                out.push_back(inst("dotmovesplits+merge", p + ",split", S({solid_dot(a + b), split(a, b)}), S({split(a, b), T({solid_dot(a), solid_dot(b)})})));
                out.push_back(inst("dotmovesplits+merge", p + ",merge", S({merge(a, b), solid_dot(a + b)}), S({T({solid_dot(a), solid_dot(b)}), merge(a, b)})));
            }
        return out;
    });
    add("intergralballon", RelationGroup::Web, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a) {
            out.push_back(inst("intergralballon", P({{"a", a}}) + ",solid", thin_balloon(a, solid_dot(1)), q_factorial(a) * LinComb(solid_dot(a))));
            out.push_back(inst("intergralballon", P({{"a", a}}) + ",hollow", thin_balloon(a, open_dot(1)), q_factorial(a) * LinComb(open_dot(a))));
        }
        return out;
    });
    add("inverses", RelationGroup::Web, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a) {
            out.push_back(inst("inverses", P({{"a", a}}) + ",dot", S({open_dot(a), solid_dot(a)}), I(a)));
            out.push_back(inst("inverses", P({{"a", a}}) + ",opendot", S({solid_dot(a), open_dot(a)}), I(a)));
            for (int b = 1; b <= n; ++b) {
                auto p = P({{"a", a}, {"b", b}});
                out.push_back(inst("inverses", p + ",negpos", S({cross_pos(a, b), cross_neg(b, a)}), T({I(a), I(b)})));
                out.push_back(inst("inverses", p + ",posneg", S({cross_neg(b, a), cross_pos(a, b)}), T({I(b), I(a)})));
            }
        }
        return out;
    });

    // ------------------------------------------------------------ additional relations with red strands
    add("redslider", RelationGroup::Schur, [](int n, const Laurent& u) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                auto p = P({{"a", a}, {"b", b}}, &u);
                out.push_back(inst("redslider", p + ",up-split", S({U(b + a, u), T({R(u), split(b, a)})}), S({T({split(b, a), R(u)}), T({I(b), U(a, u)}), T({U(b, u), I(a)})})));
                out.push_back(inst("redslider", p + ",down-split", S({D(a + b, u), T({split(a, b), R(u)})}), S({T({R(u), split(a, b)}), T({D(a, u), I(b)}), T({I(a), D(b, u)})})));
                out.push_back(inst("redslider", p + ",down-merge", S({T({R(u), merge(a, b)}), D(a + b, u)}), S({T({D(a, u), I(b)}), T({I(a), D(b, u)}), T({merge(a, b), R(u)})})));
                out.push_back(inst("redslider", p + ",up-merge", S({T({merge(a, b), R(u)}), U(a + b, u)}), S({T({I(a), U(b, u)}), T({U(a, u), I(b)}), T({R(u), merge(a, b)})})));
            }
        return out;
    });
    add("redcross2", RelationGroup::Schur, [](int n, const Laurent& u) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a) {
            LinComb left, right;
            for (int t = 0; t <= a; ++t) {
                Laurent c = sgn(t) * Q(-t * (a - t)) * u.pow(static_cast<unsigned>(t));
                left.add(c, T({omega(a, a - t), R(u)}));
                right.add(c, T({R(u), omega(a, a - t)}));
            }
            out.push_back(inst("redcross2", P({{"a", a}}, &u) + ",black-left", S({U(a, u), D(a, u)}), left));
            out.push_back(inst("redcross2", P({{"a", a}}, &u) + ",black-right", S({D(a, u), U(a, u)}), right));
        }
        return out;
    });
    add("redbraid", RelationGroup::Schur, [](int n, const Laurent& u) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                Term lhs = S({T({U(a, u), I(b)}), T({R(u), cross_pos(a, b)}), T({D(b, u), I(a)})});
                LinComb rhs;
                for (int s = 0; s <= std::min(a, b); ++s) {
                    Laurent c = sgn(s) * Q(s * (s - 1) / 2) * cross_coeff(s);
                    rhs.add(c, S({T({split(s, a - s), R(u), split(b - s, s)}), T({I(s), I(a - s), D(b - s, u), I(s)}), T({I(s), cross_pos(a - s, b - s), R(u), I(s)}),
                                  T({I(s), I(b - s), U(a - s, u), I(s)}), T({I(s), I(b - s), R(u), I(a - s), solid_dot(s)}), T({merge(s, b - s), R(u), merge(a - s, s)})}));
                }
                out.push_back(inst("redbraid", P({{"a", a}, {"b", b}}, &u), lhs, rhs));
            }
        return out;
    });

    // ------------------------------------------------------------ derived relations
    auto squareswitch = [](bool mirrored) {
        return [mirrored](int n, const Laurent&) {
            std::vector<RelationInstance> out;
            std::string id = mirrored ? "squareswitch2" : "squareswitch";
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int d = 0; d <= a; ++d)
                        for (int c = 0; c <= std::min(n, b + d); ++c) {
                            LinComb rhs;
                            Term lhs;
                            if (!mirrored) {
                                lhs = S({T({split(a - d, d), I(b)}), T({I(a - d), merge(d, b)}), T({I(a - d), split(c, b + d - c)}), T({merge(a - d, c), I(b + d - c)})});
                                for (int s = std::max(0, c - b); s <= std::min(c, d); ++s)
                                    rhs.add(q_binom(a - b + c - d, s),
                                            S({T({I(a), split(c - s, b - c + s)}), T({merge(a, c - s), I(b - c + s)}), T({split(a - d + c, d - s), I(b - c + s)}), T({I(a - d + c), merge(d - s, b - c + s)})}));
                            } else {
                                lhs = S({T({I(b), split(d, a - d)}), T({merge(b, d), I(a - d)}), T({split(b + d - c, c), I(a - d)}), T({I(b + d - c), merge(c, a - d)})});
                                for (int s = std::max(0, c - b); s <= std::min(c, d); ++s)
                                    rhs.add(q_binom(a - b + c - d, s),
                                            S({T({split(b - c + s, c - s), I(a)}), T({I(b - c + s), merge(c - s, a)}), T({I(b - c + s), split(d - s, a - d + c)}), T({merge(b - c + s, d - s), I(a - d + c)})}));
                            }
                            out.push_back(inst(id, P({{"a", a}, {"b", b}, {"c", c}, {"d", d}}), lhs, rhs));
                        }
            return out;
        };
    };
    add("squareswitch", RelationGroup::Derived, squareswitch(false));
    add("squareswitch2", RelationGroup::Derived, squareswitch(true));
    add("cross via square", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int sign : {1, -1}) {
                    LinComb r1, r2;
                    for (int s = 0; s <= std::min(a, b); ++s) {
                        Laurent c = sgn(s) * Q(sign * s);
                        r1.add(c, S({T({split(s, a - s), I(b)}), T({I(s), merge(a - s, b)}), T({I(s), split(b - s, a)}), T({merge(s, b - s), I(a)})}));
                        r2.add(c, S({T({I(a), split(b - s, s)}), T({merge(a, b - s), I(s)}), T({split(b, a - s), I(s)}), T({I(b), merge(a - s, s)})}));
                    }
                    Term cr = sign > 0 ? cross_pos(a, b) : cross_neg(a, b);
                    auto p = P({{"a", a}, {"b", b}}) + (sign > 0 ? ",pos" : ",neg");
                    out.push_back(inst("cross via square", p + ",left", cr, r1));
                    out.push_back(inst("cross via square", p + ",right", cr, r2));
                }
        return out;
    });
    add("sliders", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c) {
                    auto p = P({{"a", a}, {"b", b}, {"c", c}});
                    out.push_back(inst("sliders", p + ",1", S({cross_pos(b + c, a), T({I(a), split(b, c)})}), S({T({split(b, c), I(a)}), T({I(b), cross_pos(c, a)}), T({cross_pos(b, a), I(c)})})));
                    out.push_back(inst("sliders", p + ",2", S({cross_pos(c, a + b), T({split(a, b), I(c)})}), S({T({I(c), split(a, b)}), T({cross_pos(c, a), I(b)}), T({I(a), cross_pos(c, b)})})));
                    out.push_back(inst("sliders", p + ",3", S({T({I(a), merge(b, c)}), cross_pos(a, b + c)}), S({T({cross_pos(a, b), I(c)}), T({I(b), cross_pos(a, c)}), T({merge(b, c), I(a)})})));
                    out.push_back(inst("sliders", p + ",4", S({T({merge(a, b), I(c)}), cross_pos(a + b, c)}), S({T({I(a), cross_pos(b, c)}), T({cross_pos(a, c), I(b)}), T({I(c), merge(a, b)})})));
                }
        return out;
    });
    add("unfold", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                auto p = P({{"a", a}, {"b", b}});
                out.push_back(inst("unfold", p + ",merge", S({cross_neg(a, b), merge(b, a)}), Q(a * b) * LinComb(merge(a, b))));
                out.push_back(inst("unfold", p + ",split", S({split(b, a), cross_neg(b, a)}), Q(a * b) * LinComb(split(a, b))));
            }
        return out;
    });
    add("cross2", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                LinComb rhs;
                for (int s = 0; s <= std::min(a, b); ++s)
                    rhs.add(Q(-s * (s - 1) / 2 - s * (a + b - 2 * s)) * cross_coeff(s),
                            S({T({split(a - s, s), split(s, b - s)}), T({I(a - s), cross_pos(s, s), I(b - s)}), T({merge(a - s, s), merge(s, b - s)})}));
                out.push_back(inst("cross2", P({{"a", a}, {"b", b}}), S({cross_pos(a, b), cross_pos(b, a)}), rhs));
            }
        return out;
    });
    add("braid", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    for (bool pos : {true, false}) {
                        auto X = [pos](int x, int y) { return pos ? cross_pos(x, y) : cross_neg(x, y); };
                        out.push_back(inst("braid", P({{"a", a}, {"b", b}, {"c", c}}) + (pos ? ",pos" : ",neg"), S({T({X(a, b), I(c)}), T({I(b), X(a, c)}), T({X(b, c), I(a)})}),
                                           S({T({I(a), X(b, c)}), T({X(a, c), I(b)}), T({I(c), X(a, b)})})));
                    }
        return out;
    });
    add("Hecke", RelationGroup::Derived, [](int, const Laurent&) {
        LinComb rhs = (Q(-1) - Q(1)) * LinComb(cross_pos(1, 1));
        rhs += LinComb(T({I(1), I(1)}));
        return std::vector<RelationInstance>{inst("Hecke", "", S({cross_pos(1, 1), cross_pos(1, 1)}), rhs)};
    });
    add("zdotmovecrossing", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                auto p = P({{"a", a}, {"b", b}});
                out.push_back(inst("zdotmovecrossing", p + ",bottom", S({T({open_dot(a), I(b)}), cross_neg(a, b)}), S({cross_pos(a, b), T({I(b), open_dot(a)})})));
                out.push_back(inst("zdotmovecrossing", p + ",top", S({cross_neg(a, b), T({open_dot(b), I(a)})}), S({T({I(a), open_dot(b)}), cross_pos(a, b)})));
            }
        return out;
    });
    add("dotSM2", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                auto p = P({{"a", a}, {"b", b}});
                out.push_back(inst("dotSM2", p + ",split", S({open_dot(a + b), split(a, b)}), S({split(a, b), T({open_dot(a), open_dot(b)})})));
                out.push_back(inst("dotSM2", p + ",merge", S({merge(a, b), open_dot(a + b)}), S({T({open_dot(a), open_dot(b)}), merge(a, b)})));
            }
        return out;
    });
    add("rightdot", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                auto p = P({{"a", a}, {"b", b}});
                out.push_back(inst("rightdot", p + ",solid", S({split(a, b), T({I(a), solid_dot(b)}), merge(a, b)}), Q(-2 * a * b) * LinComb(omega(a + b, b))));
                out.push_back(inst("rightdot", p + ",hollow", S({split(a, b), T({open_dot(a), I(b)}), merge(a, b)}), Q(-2 * a * b) * LinComb(omega(a + b, -a))));
            }
        return out;
    });
    add("dots2strands", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int r = 0; r <= a; ++r)
                    for (int u = 0; u <= b; ++u)
                        out.push_back(inst("dots2strands", P({{"a", a}, {"b", b}, {"r", r}, {"u", u}}), S({split(a, b), T({omega(a, r), omega(b, u)}), merge(a, b)}),
                                           Q(-2 * u * (a - r)) * q_binom(r + u, r) * q_binom(a + b - r - u, a - r) * LinComb(omega(a + b, r + u))));
        return out;
    });
    add("splitmerge", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int r = 0; r <= a; ++r)
                    out.push_back(inst("splitmerge", P({{"a", a}, {"b", b}, {"r", r}}), S({split(a, b), T({omega(a, r), I(b)}), merge(a, b)}), q_binom(a + b - r, b) * LinComb(omega(a + b, r))));
        return out;
    });
    add("dotmovesplitabr", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int r = 0; r <= a + b; ++r)
                    for (int sign : {1, -1}) {
                        LinComb sp, mg;
                        for (int s = std::max(0, r - b); s <= std::min(a, r); ++s) {
                            Laurent c = Q(s * (s + b - r) + (a - s) * (r - s));
                            sp.add(c, S({split(a, b), T({omega(a, sign * s), omega(b, sign * (r - s))})}));
                            mg.add(c, S({T({omega(a, sign * s), omega(b, sign * (r - s))}), merge(a, b)}));
                        }
                        auto p = P({{"a", a}, {"b", b}, {"r", r}}) + (sign > 0 ? ",solid" : ",hollow");
                        out.push_back(inst("dotmovesplitabr", p + ",split", S({omega(a + b, sign * r), split(a, b)}), sp));
                        out.push_back(inst("dotmovesplitabr", p + ",merge", S({merge(a, b), omega(a + b, sign * r)}), mg));
                    }
        return out;
    });
    add("dotcommutative", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int r = -a; r <= a; ++r)
                for (int t = r + 1; t <= a; ++t)
                    out.push_back(inst("dotcommutative", P({{"a", a}, {"r", r}, {"t", t}}), S({omega(a, t), omega(a, r)}), S({omega(a, r), omega(a, t)})));
        return out;
    });
    add("cross+=-", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                LinComb rhs;
                for (int s = 0; s <= std::min(a, b); ++s)
                    rhs.add(Q(-s * (s - 1) / 2) * cross_coeff(s), S({T({split(s, b - s), split(a - s, s)}), T({I(s), cross_neg(b - s, a - s), I(s)}), T({merge(s, a - s), merge(b - s, s)})}));
                out.push_back(inst("cross+=-", P({{"a", a}, {"b", b}}), cross_pos(b, a), rhs));
            }
        return out;
    });
    add("wrdotcross", RelationGroup::Derived, [](int n, const Laurent&) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                for (int r = 0; r <= a; ++r) {
                    LinComb rhs;
                    for (int s = 0; s <= std::min(a - r, b); ++s)
                        rhs.add(Q(r * s - s * (s - 1) / 2) * cross_coeff(s), S({T({split(s, a - s), split(b - s, s)}), T({I(s), cross_neg(a - s, b - s), I(s)}), T({I(s), I(b - s), omega(a - s, r), I(s)}),
                                                                                   T({merge(s, b - s), merge(a - s, s)})}));
                    out.push_back(inst("wrdotcross", P({{"a", a}, {"b", b}, {"r", r}}) + ",below", S({T({omega(a, r), I(b)}), cross_pos(a, b)}), rhs));
                }
                for (int r = 0; r <= b; ++r) {
                    LinComb rhs;
                    for (int s = 0; s <= std::min(a, b - r); ++s)
                        rhs.add(Q(r * s - s * (s - 1) / 2) * cross_coeff(s), S({T({split(s, a - s), split(b - s, s)}), T({I(s), I(a - s), omega(b - s, r), I(s)}), T({I(s), cross_neg(a - s, b - s), I(s)}),
                                                                                   T({merge(s, b - s), merge(a - s, s)})}));
                    out.push_back(inst("wrdotcross", P({{"a", a}, {"b", b}, {"r", r}}) + ",above", S({cross_pos(a, b), T({omega(b, r), I(a)})}), rhs));
                }
            }
        return out;
    });
    add("adamovecrossings", RelationGroup::Derived, [](int n, const Laurent& u) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (bool pos : {true, false}) {
                    auto X = [pos](int x, int y) { return pos ? cross_pos(x, y) : cross_neg(x, y); };
                    auto p = P({{"a", a}, {"b", b}}, &u) + (pos ? ",pos" : ",neg");
                    out.push_back(inst("adamovecrossings", p + ",down", S({T({D(a, u), I(b)}), T({I(a), D(b, u)}), T({X(a, b), R(u)})}), S({T({R(u), X(a, b)}), T({D(b, u), I(a)}), T({I(b), D(a, u)})})));
                    out.push_back(inst("adamovecrossings", p + ",up", S({T({I(a), U(b, u)}), T({U(a, u), I(b)}), T({R(u), X(a, b)})}), S({T({X(a, b), R(u)}), T({I(b), U(a, u)}), T({U(b, u), I(a)})})));
                }
        return out;
    });
    add("dotmoveadaptor", RelationGroup::Derived, [](int n, const Laurent& u) {
        std::vector<RelationInstance> out;
        for (int a = 1; a <= n; ++a)
            for (int r = -a; r <= a; ++r) {
                auto p = P({{"a", a}, {"r", r}}, &u);
                out.push_back(inst("dotmoveadaptor", p + ",up", S({T({omega(a, r), R(u)}), U(a, u)}), S({U(a, u), T({R(u), omega(a, r)})})));
                out.push_back(inst("dotmoveadaptor", p + ",down", S({T({R(u), omega(a, r)}), D(a, u)}), S({D(a, u), T({omega(a, r), R(u)})})));
            }
        return out;
    });
    add("balloon", RelationGroup::Derived, [](int n, const Laurent& u) {
        std::vector<RelationInstance> out;
        for (int r = 1; r <= n; ++r) {
            LinComb g1 = LinComb(solid_dot(1)) - u * LinComb(I(1));
            out.push_back(inst("balloon", P({{"r", r}}, &u), thin_balloon(r, g1), q_factorial(r) * g_diagram(r, {u})));
        }
        return out;
    });
    return cat;
}

inline const RelationSpec& find_relation(const std::string& id) {
    static const std::vector<RelationSpec> cat = relation_catalog();
    for (auto& r : cat)
        if (r.id == id) return r;
    throw std::invalid_argument("unknown relation '" + id + "'");
}

inline std::vector<std::string> relation_ids(std::optional<RelationGroup> g = std::nullopt) {
    std::vector<std::string> out;
    for (auto& r : relation_catalog())
        if (!g || r.group == *g) out.push_back(r.id);
    return out;
}

inline Laurent default_red_parameter() { return Laurent::parse("q+2"); }

inline std::vector<RelationReport> verify_relation(const std::string& id, int max_thick, const Laurent& u = default_red_parameter(), std::size_t max_complete = 24) {
    std::vector<RelationReport> out;
    for (auto& in : find_relation(id).instances(max_thick, u)) out.push_back(check_equal(in.id, in.params, in.lhs, in.rhs, max_complete));
    return out;
}

}  // namespace qschur
