#include <doctest.h>

#include <qschur/diagram.hpp>

#include <random>

using namespace qschur;

namespace {

Object blacks(std::initializer_list<int> xs) {
    Object o;
    for (int x : xs) o.push_back(Strand::black(x));
    return o;
}

// random well-typed term on black strands of total weight <= 3, plus one red strand sometimes
Term random_term(std::mt19937& g, int depth) {
    std::uniform_int_distribution<int> pick(0, 9), th(1, 2);
    int k = depth <= 0 ? pick(g) % 7 : pick(g);
    int a = th(g), b = th(g);
    Laurent u = Laurent::parse(std::to_string(1 + pick(g) % 3) + "q");
    switch (k) {
        case 0: return merge(a, b);
        case 1: return split(a, b);
        case 2: return cross_pos(a, b);
        case 3: return cross_neg(a, b);
        case 4: return pick(g) % 2 ? solid_dot(a) : open_dot(a);
        case 5: return traverse_up(a, u);
        case 6: return traverse_down(a, u);
        case 7:
        case 8: return tensor(random_term(g, depth - 1), random_term(g, depth - 1));
        default: {
            Term bot = random_term(g, depth - 1);
            // put something typed on top of bot
            const Object& t = bot.target();
            if (t.size() >= 2 && !t[0].red && !t[1].red) return compose(tensor(merge(t[0].a, t[1].a), identity(Object(t.begin() + 2, t.end()))), bot);
            if (!t.empty() && !t[0].red) return compose(tensor(solid_dot(t[0].a), identity(Object(t.begin() + 1, t.end()))), bot);
            return compose(identity(t), bot);
        }
    }
}

}  // namespace

TEST_CASE("typing") {
    auto m = merge(1, 1);
    CHECK(m.source() == blacks({1, 1}));
    CHECK(m.target() == blacks({2}));
    auto sm = compose(split(2, 1), merge(1, 2));
    CHECK(sm.source() == blacks({1, 2}));
    CHECK(sm.target() == blacks({2, 1}));
    CHECK_THROWS_AS(compose(merge(1, 1), merge(1, 1)), boundary_error);
    CHECK(validate(sm).first == blacks({1, 2}));
    Laurent u(3);
    auto up = traverse_up(2, u);
    CHECK(up.source() == Object{Strand::black(2), Strand::red_strand(u)});
    CHECK(up.target() == Object{Strand::red_strand(u), Strand::black(2)});
    CHECK(traverse_down(2, u).source() == up.target());
    // identity is neutral, thickness zero collapses
    CHECK(same_term(compose(identity(blacks({2})), m), m));
    CHECK(merge(0, 2).is_identity());
    CHECK(split(3, 0).target() == blacks({3}));
    CHECK(tensor(identity({}), m).ptr() == m.ptr());
}

TEST_CASE("parse errors name the node") {
    CHECK_THROWS_WITH_AS(parse_sexpr("(compose (merge 1 1) (merge 1 1))"), "boundary mismatch at root.compose[1]", boundary_error);
    CHECK_THROWS(parse_sexpr("(merge 1)"));
    CHECK_THROWS(parse_sexpr("(frob 1 1)"));
    CHECK_THROWS(parse_sexpr("(merge 1 1) x"));
}

TEST_CASE("dot packets") {
    CHECK(same_term(omega_packet(3, {3}), solid_dot(3)));
    CHECK(same_term(omega_packet(1, {1, 1}), compose(solid_dot(1), solid_dot(1))));
    CHECK(to_sexpr(omega(2, 1)) == "(compose (merge 1 1) (compose (tensor (dot 1) (id 1)) (split 1 1)))");
    CHECK(to_sexpr(omega(2, -1)) == "(compose (merge 1 1) (compose (tensor (id 1) (opendot 1)) (split 1 1)))");
    CHECK(omega_packet(2, {}).is_identity());
    CHECK_THROWS_WITH(omega_packet(2, {3}), "dot out of range");
    CHECK_THROWS_WITH(omega(1, -2), "dot out of range");
}

TEST_CASE("g polynomials") {
    Laurent u = Laurent::parse("5");
    auto g1 = g_diagram(1, {u});
    REQUIRE(g1.terms.size() == 2);
    CHECK(same_term(g1.terms[0].second, solid_dot(1)));
    CHECK(g1.terms[1].first == Laurent(-5));
    CHECK(g1.terms[1].second.is_identity());
    auto g2 = g_diagram(2, {u});
    REQUIRE(g2.terms.size() == 3);
    CHECK(g2.terms[0].first == Laurent(1));
    CHECK(same_term(g2.terms[0].second, solid_dot(2)));
    CHECK(g2.terms[1].first == Laurent(-5) * Laurent::q(-1));
    CHECK(same_term(g2.terms[1].second, omega(2, 1)));
    CHECK(g2.terms[2].first == Laurent(25));
    auto g0 = g_diagram(1, {});
    REQUIRE(g0.terms.size() == 1);
    CHECK(g0.terms[0].second.is_identity());
    CHECK(g_diagram(1, {u, u}).terms.size() == 4);
}

TEST_CASE("transpose and degrees") {
    CHECK(same_term(transpose(merge(2, 3)), split(2, 3)));
    CHECK(same_term(transpose(cross_pos(1, 2)), cross_pos(2, 1)));
    Laurent u(2);
    CHECK(same_term(transpose(traverse_up(2, u)), traverse_down(2, u)));
    CHECK(degrees(cross_pos(2, 3)) == DegreeReport{5, 0});
    CHECK(degrees(traverse_down(3, u)) == DegreeReport{0, 3});
    CHECK(degrees(traverse_up(3, u)) == DegreeReport{0, 0});
    CHECK(degrees(identity(blacks({1, 2}))) == DegreeReport{0, 0});
    std::mt19937 g(5);
    for (int i = 0; i < 300; ++i) {
        Term t = random_term(g, 3);
        Term f = transpose(t);
        CHECK(f.source() == t.target());
        CHECK(f.target() == t.source());
        CHECK(same_term(transpose(f), t));
        CHECK(degrees(f).crossing_degree == degrees(t).crossing_degree);
        validate(f);
    }
}

TEST_CASE("text and json round trips") {
    CHECK(to_sexpr(parse_sexpr("(compose (merge 1 1) (tensor (dot 1) (id 1)))")) == "(compose (merge 1 1) (tensor (dot 1) (id 1)))");
    auto r = parse_sexpr("(tensor (id 1 (red q^2-1)) (up 2 3q))");
    CHECK(r.source()[1].u == Laurent::parse("q^2 - 1"));
    std::mt19937 g(9);
    for (int i = 0; i < 300; ++i) {
        Term t = random_term(g, 3);
        std::string s = to_sexpr(t);
        CHECK(to_sexpr(parse_sexpr(s)) == s);
        CHECK(to_sexpr(term_from_json(nlohmann::json::parse(to_json(t).dump()))) == s);
    }
}

TEST_CASE("elaboration") {
    ElementaryRibbon rb;
    rb.source = {{1, 1}};
    rb.target = {{1, 1}};
    rb.label.A = {{1, 0}, {0, 1}};
    rb.label.P.assign(2, std::vector<Packet>(2));
    CHECK(elaborate(rb).is_identity());
    rb.label.A = {{0, 1}, {1, 0}};
    CHECK(same_term(elaborate(rb), cross_pos(1, 1)));

    Laurent u(4);
    ElementaryRibbon red;
    red.source = {{}, {1}};
    red.target = {{}, {1}};
    red.reds = {u};
    red.label.kind = LabelKind::ParMatFlat;
    red.label.A = {{1}};
    red.label.P = {{{}}};
    Term t = elaborate(red);
    CHECK(t.is_identity());
    CHECK(t.source() == Object{Strand::red_strand(u), Strand::black(1)});

    // every label elaborates to a well-typed term with the predicted degrees, injectively
    for (int m = 1; m <= 3; ++m)
        for (auto& x : enumerate_objects(m, 1))
            for (auto& y : enumerate_objects(m, 1)) {
                std::vector<Laurent> us{u};
                std::vector<std::string> seen;
                for (auto& lab : enumerate_basis_labels(LabelKind::RParMat, x.comps, y.comps, 2)) {
                    ElementaryRibbon e{y.comps, x.comps, lab, us};
                    Term el = elaborate(e);
                    validate(el);
                    CHECK(el.source() == schur_object(y.comps, us));
                    CHECK(el.target() == schur_object(x.comps, us));
                    // predicted dot degree: packets plus legs moving across the red strand
                    auto pc = block_components(x.comps), qc = block_components(y.comps);
                    int expect = 0;
                    for (std::size_t i = 0; i < lab.A.size(); ++i)
                        for (std::size_t j = 0; j < lab.A[i].size(); ++j) {
                            if (lab.A[i][j] == 0) continue;
                            expect += packet_degree(lab.P[i][j]);
                            if (pc[i] < qc[j]) expect += lab.A[i][j] * (qc[j] - pc[i]);
                        }
                    CHECK(degrees(el).dot_degree == expect);
                    std::string s = to_sexpr(el);
                    CHECK(std::find(seen.begin(), seen.end(), s) == seen.end());
                    seen.push_back(s);
                    CHECK(same_term(transpose(transpose(el)), el));
                }
            }
}

TEST_CASE("sst ribbons") {
    auto one = enumerate_sst({{2}}, {{1, 1}});
    REQUIRE(one.size() == 1);
    auto rb = sst_to_ribbon(one[0], {{2}}, {{1, 1}}, {Laurent(1)});
    CHECK(rb.label.A == Matrix{{1}, {1}});
    Term t = elaborate(rb);
    CHECK(t.source() == Object{Strand::red_strand(Laurent(1)), Strand::black(2)});
    CHECK(t.target() == Object{Strand::red_strand(Laurent(1)), Strand::black(1), Strand::black(1)});
    auto id = enumerate_sst({{1, 1}}, {{1, 1}});
    REQUIRE(id.size() == 1);
    CHECK(sst_to_ribbon(id[0], {{1, 1}}, {{1, 1}}, {Laurent(1)}).label.A == Matrix{{1, 0}, {0, 1}});
    for (auto& lam : multipartitions(3, 2)) {
        auto s = enumerate_sst(lam, lam);
        REQUIRE(s.size() >= 1);
        auto lab = sst_to_ribbon(s[0], lam, lam, {Laurent(1), Laurent(2)}).label;
        Composition f = flatten(lam);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j) CHECK(lab.A[i][j] == (i == j ? f[i] : 0));
    }
}
