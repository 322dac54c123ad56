#include <doctest.h>

#include <qschur/polyrep.hpp>
#include <qschur/relations.hpp>

#include <random>

using namespace qschur;

namespace {

const Laurent q = Laurent::q(1);

MultiLaurent X(int m, int i, int p = 1) { return MultiLaurent::var(m, i, p); }
MultiLaurent C(int m, const Laurent& c) { return MultiLaurent(m, c); }

MultiLaurent random_poly(std::mt19937& g, int m) {
    std::uniform_int_distribution<int> e(-2, 3), c(-3, 3), n(1, 4);
    MultiLaurent f(m);
    int k = n(g);
    for (int t = 0; t < k; ++t) {
        Exps ex(static_cast<std::size_t>(m));
        for (auto& x : ex) x = e(g);
        f.add_term(ex, Laurent(c(g)) * Laurent::q(c(g)));
    }
    return f;
}

MultiLaurent swapped(const MultiLaurent& f, int i) { return f.swapped(i, i + 1); }

}  // namespace

TEST_CASE("Hecke action examples") {
    CHECK(hecke_action(X(2, 1), {1}) == Laurent::q(1) * X(2, 2));
    CHECK(hecke_action(C(2, Laurent(1)), {1}) == C(2, Laurent::q(-1)));
    MultiLaurent twice = hecke_action(X(2, 1), {1, 1});
    CHECK(twice == X(2, 1) + (Laurent(1) - q * q) * X(2, 2));
    CHECK(twice == (Laurent::q(-1) - q) * hecke_action(X(2, 1), {1}) + X(2, 1));
    CHECK(hecke_action(hecke_action(X(3, 2), {2}), {-2}) == X(3, 2));
}

TEST_CASE("Hecke action against the defining identity") {
    // (X_i - X_{i+1}) (H_i f - q^-1 f) = (q X_{i+1} - q^-1 X_i)(f - f^s): multiplication and swaps only
    std::mt19937 g(17);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 2 + trial % 3;
        int i = 1 + trial % (m - 1);
        MultiLaurent f = random_poly(g, m);
        MultiLaurent lhs = (X(m, i) - X(m, i + 1)) * (apply_H(f, i) - Laurent::q(-1) * f);
        MultiLaurent rhs = (q * X(m, i + 1) - Laurent::q(-1) * X(m, i)) * (f - swapped(f, i));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quadratic and braid relations on random polynomials") {
    std::mt19937 g(23);
    for (int trial = 0; trial < 60; ++trial) {
        MultiLaurent f = random_poly(g, 3);
        for (int i = 1; i <= 2; ++i) CHECK(hecke_action(f, {i, i}) == (Laurent::q(-1) - q) * hecke_action(f, {i}) + f);
        CHECK(hecke_action(f, {1, 2, 1}) == hecke_action(f, {2, 1, 2}));
        MultiLaurent h = random_poly(g, 4);
        CHECK(hecke_action(h, {1, 3}) == hecke_action(h, {3, 1}));
    }
}

TEST_CASE("generator images") {
    MultiLaurent one2 = C(2, Laurent(1));
    CHECK(evaluate(compose(merge(1, 1), split(1, 1)), C(2, Laurent(1))) == C(2, q + Laurent::q(-1)));
    CHECK(evaluate(solid_dot(2), one2) == X(2, 1) * X(2, 2));
    Laurent u(5);
    CHECK(evaluate(traverse_down(1, u), C(1, Laurent(1))) == X(1, 1) - C(1, u));
    CHECK(evaluate(traverse_up(1, u), X(1, 1)) == X(1, 1));
    CHECK_THROWS_WITH(evaluate(merge(2, 1), X(3, 1)), "input not in Sym_mu");
    CHECK_THROWS_WITH(evaluate(split(2, 1), X(3, 1)), "input not in Sym_mu");
    // sigma_{1,1} = q + H_1
    CHECK(evaluate(merge(1, 1), X(2, 1, 2)) == q * X(2, 1, 2) + hecke_action(X(2, 1, 2), {1}));
}

TEST_CASE("functoriality and image symmetry") {
    std::mt19937 g(31);
    std::vector<Term> pieces = {merge(1, 2), split(2, 1), cross_pos(1, 2), cross_neg(2, 1), solid_dot(3), omega(3, 1), omega(3, -2)};
    for (int trial = 0; trial < 40; ++trial) {
        // random composable chain on thickness 3 through (1,2)/(2,1)/(3)
        Term t = identity({Strand::black(3)});
        for (int k = 0; k < 4; ++k) {
            std::vector<Term> ok;
            for (auto& p : pieces)
                if (p.source() == t.target()) ok.push_back(p);
            Term p = ok[g() % ok.size()];
            auto ps = make_probes(t.source(), 100);
            MultiLaurent f = ps.probes[g() % ps.probes.size()];
            MultiLaurent before = evaluate(t, f);
            Term tp = compose(p, t);
            CHECK(evaluate(tp, f) == evaluate(p, before));
            CHECK(symmetric_in_blocks(evaluate(tp, f), black_blocks(tp.target())));
            t = tp;
        }
    }
    // tensor acts block-diagonally
    MultiLaurent f = X(4, 1) * X(4, 2) * X(4, 3, 2) * X(4, 4, 2);
    Term l = merge(1, 1), r = cross_pos(1, 1);
    CHECK(evaluate(tensor(l, r), f) == evaluate(tensor(l, identity({Strand::black(1), Strand::black(1)})), evaluate(tensor(identity({Strand::black(1), Strand::black(1)}), r), f)));
}

TEST_CASE("complete probe sets") {
    for (auto blocks : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2, 1}, {2, 2}, {3}, {1, 1, 1}}) {
        ProbeSet ps = make_probes(blocks);
        CHECK(ps.complete);
        Int expect = detail::multinomial(blocks);
        CHECK(Int(ps.probes.size()) == expect);
        for (auto& f : ps.probes) CHECK(symmetric_in_blocks(f, blocks));
    }
    ProbeSet big = make_probes(std::vector<int>{3, 3, 3});
    CHECK(!big.complete);
    CHECK(big.probes.size() >= 3);
    for (auto& f : big.probes) CHECK(symmetric_in_blocks(f, {3, 3, 3}));
}

TEST_CASE("equality") {
    Term cp = cross_pos(2, 1);
    CHECK(equals(cp, cp));
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            Object ab{Strand::black(a), Strand::black(b)};
            CHECK(equals(compose(cross_pos(b, a), cross_neg(a, b)), identity(ab)));
            CHECK(equals(compose(cross_neg(b, a), cross_pos(a, b)), identity(ab)));
        }
    CHECK(equals(compose(solid_dot(1), open_dot(1)), id_black(1)));
    CHECK(!equals(cross_pos(1, 1), cross_neg(1, 1)));
    CHECK_THROWS_AS(equals(merge(1, 1), split(1, 1)), boundary_error);
}

TEST_CASE("basis expansion") {
    auto id2 = expand_in_basis(LinComb(id_black(2)));
    REQUIRE(id2.coeffs.size() == 1);
    CHECK(id2.coeffs[0].first.A == Matrix{{2}});
    CHECK(id2.coeffs[0].second == RatFunc(Laurent(1)));

    auto label_of = [](const Expansion& e, const Matrix& A) {
        for (auto& [l, c] : e.coeffs)
            if (l.A == A && l.degree() == 0) return c;
        return RatFunc();
    };
    // split o merge on (1,1): q times the identity plus the crossing
    auto sm = expand_in_basis(LinComb(compose(split(1, 1), merge(1, 1))));
    CHECK(sm.coeffs.size() == 2);
    CHECK(label_of(sm, {{1, 0}, {0, 1}}) == RatFunc(q));
    CHECK(label_of(sm, {{0, 1}, {1, 0}}) == RatFunc(Laurent(1)));
    auto cn = expand_in_basis(LinComb(cross_neg(1, 1)));
    CHECK(cn.coeffs.size() == 2);
    CHECK(label_of(cn, {{0, 1}, {1, 0}}) == RatFunc(Laurent(1)));
    CHECK(label_of(cn, {{1, 0}, {0, 1}}) == RatFunc(q - Laurent::q(-1)));
    // a dotted composite needs dot packets
    auto dd = expand_in_basis(LinComb(compose(merge(1, 1), tensor(solid_dot(1), id_black(1)))));
    CHECK(!dd.coeffs.empty());
    // with a red strand
    Laurent u(3);
    auto rc = expand_in_basis(LinComb(compose(traverse_down(1, u), traverse_up(1, u))));
    CHECK(rc.coeffs.size() == 2);
}

TEST_CASE("relation catalog at thickness two") {
    Laurent u = default_red_parameter();
    for (auto& id : relation_ids()) {
        auto reports = verify_relation(id, 2, u);
        CHECK_MESSAGE(!reports.empty(), id);
        for (auto& r : reports) CHECK_MESSAGE(r.pass, r.id << " " << r.params << " " << r.residual);
    }
    CHECK_THROWS(find_relation("nope"));
}

TEST_CASE("a wrong coefficient is caught") {
    LinComb lhs(compose(merge(1, 1), split(1, 1)));
    auto rep = check_equal("bad", "", lhs, q * LinComb(id_black(2)));
    CHECK(!rep.pass);
    CHECK(!rep.residual.empty());
    auto j = to_json(rep);
    CHECK(j["pass"] == false);
}

TEST_CASE("RParMat independence") {
    auto r = rparmat_rank({{1}}, {{1}}, 2);
    CHECK(r.labels == rational_partitions(1, 2).size());
    CHECK(r.full());
    auto r2 = rparmat_rank({{1, 1}}, {{2}}, 1);
    CHECK(r2.labels == enumerate_basis_labels(LabelKind::RParMat, {{2}}, {{1, 1}}, 1).size());
    CHECK(r2.full());
    // with a red strand
    CHECK(rparmat_rank({{1}, {}}, {{}, {1}}, 1, {Laurent(3)}).full());
}

TEST_CASE("End(1_a) generators") {
    // a = 1: the dot packets are the powers X^k, |k| <= 3
    auto e1 = end_identity(1, 3);
    std::set<int> powers;
    for (auto& f : e1.images) {
        REQUIRE(f.terms().size() == 1);
        powers.insert(f.leading_exponent()[0]);
    }
    CHECK(powers == std::set<int>{-3, -2, -1, 0, 1, 2, 3});
    CHECK(e1.distinct_leading);
    CHECK(e1.commuting);
    auto e2 = end_identity(2, 3);
    CHECK(e2.packets.size() == rational_partitions(2, 3).size());
    CHECK(e2.distinct_leading);
    CHECK(e2.commuting);
    for (auto& f : e2.images) CHECK(f.symmetric_in(1, 2));
}
