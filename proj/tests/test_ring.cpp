#include <doctest.h>

#include <qschur/linalg.hpp>
#include <qschur/ring.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <random>

using namespace qschur;
using Rat = boost::multiprecision::cpp_rational;

namespace {

// evaluate at a rational point
Rat at(const Laurent& f, const Rat& x) {
    Rat r = 0;
    for (auto& [e, c] : f.terms()) {
        Rat p = 1;
        for (int k = 0; k < std::abs(e); ++k) p *= x;
        r += Rat(c) * (e >= 0 ? p : 1 / p);
    }
    return r;
}

Laurent random_laurent(std::mt19937& g, int span = 4) {
    std::uniform_int_distribution<int> c(-5, 5), lo(-3, 3), len(0, span);
    int l = lo(g), n = len(g);
    std::vector<Int> v;
    for (int i = 0; i < n; ++i) v.push_back(c(g));
    return Laurent::from_coeffs(l, v);
}

}  // namespace

TEST_CASE("q-integers") {
    CHECK(q_int(2) == Laurent::parse("q + q^-1"));
    CHECK(q_int(0).is_zero());
    CHECK(q_int(5).str() == "q^4 + q^2 + 1 + q^-2 + q^-4");
    CHECK(q_int(-3) == -q_int(3));
    // oracle: the closed form evaluated at q = 2 and q = 3/5
    for (Rat x : {Rat(2), Rat(3, 5)})
        for (int n = -6; n <= 9; ++n) {
            Rat qn = 1;
            for (int k = 0; k < std::abs(n); ++k) qn *= x;
            if (n < 0) qn = 1 / qn;
            CHECK(at(q_int(n), x) == (qn - 1 / qn) / (x - 1 / x));
        }
    for (int n = 1; n <= 12; ++n) {
        CHECK(q_int(n) * (Laurent::q(1) - Laurent::q(-1)) == Laurent::q(n) - Laurent::q(-n));
        CHECK(q_int(n).bar() == q_int(n));
    }
}

TEST_CASE("q-binomials") {
    CHECK(q_binom(7, 0).is_one());
    CHECK(q_binom(-4, 0).is_one());
    CHECK(q_binom(2, 1) == Laurent::parse("q + q^-1"));
    CHECK(q_binom(4, 2).str() == "q^4 + q^2 + 2 + q^-2 + q^-4");
    CHECK(q_binom(3, 5).is_zero());
    for (int n = 1; n <= 12; ++n)
        for (int a = 0; a <= n; ++a) {
            Laurent rhs = Laurent::q(a) * q_binom(n - 1, a);
            if (a > 0) rhs += Laurent::q(-(n - a)) * q_binom(n - 1, a - 1);
            CHECK(q_binom(n, a) == rhs);
            CHECK(q_binom(n, a).bar() == q_binom(n, a));
            CHECK(q_binom(n, a) == q_binom(n, n - a));
        }
    // negative upper index: [-n, a] = (-1)^a [n+a-1, a]
    for (int n = 1; n <= 5; ++n)
        for (int a = 0; a <= 4; ++a) CHECK(q_binom(-n, a) == (a % 2 ? -q_binom(n + a - 1, a) : q_binom(n + a - 1, a)));
}

TEST_CASE("Laurent text round trip") {
    std::mt19937 g(7);
    for (int i = 0; i < 200; ++i) {
        Laurent f = random_laurent(g, 6);
        CHECK(Laurent::parse(f.str()) == f);
    }
    CHECK(Laurent::parse("-3q^2 + q - 1 + 2*q^-1").str() == "-3q^2 + q - 1 + 2q^-1");
    CHECK_THROWS(Laurent::parse("q^"));
    CHECK_THROWS(Laurent::parse("x"));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 g(11);
    for (int i = 0; i < 200; ++i) {
        Laurent a = random_laurent(g), b = random_laurent(g), c = random_laurent(g);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Laurent());
        if (!b.is_zero()) {
            auto d = Laurent::div_exact(a * b, b);
            REQUIRE(d);
            CHECK(*d == a);
        }
    }
    auto rnd = [&](int m) {
        MultiLaurent f(m);
        std::uniform_int_distribution<int> e(-2, 2), n(0, 4);
        int k = n(g);
        for (int t = 0; t < k; ++t) {
            MultiLaurent::Exps ex(m);
            for (auto& x : ex) x = e(g);
            f.add_term(ex, random_laurent(g, 2));
        }
        return f;
    };
    for (int i = 0; i < 100; ++i) {
        auto a = rnd(3), b = rnd(3), c = rnd(3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("rational functions stay reduced") {
    Laurent q = Laurent::q(1);
    RatFunc x(q * q - Laurent(1), q - Laurent(1));
    CHECK(x == RatFunc(q + Laurent(1)));
    CHECK(x.is_laurent());
    RatFunc y(Laurent(1), q + Laurent(1));
    CHECK((y * RatFunc(q + Laurent(1))).is_one());
    CHECK(RatFunc(Laurent(2), Laurent(4)) == RatFunc(Laurent(1), Laurent(2)));
    CHECK(RatFunc(Laurent(-1), -q) == RatFunc(Laurent::q(-1)));
    std::mt19937 g(3);
    for (int i = 0; i < 100; ++i) {
        Laurent a = random_laurent(g), b = random_laurent(g), c = random_laurent(g);
        if (b.is_zero() || c.is_zero()) continue;
        RatFunc u(a, b), v(c, b * c + Laurent(1) + b);
        if (v.is_zero()) continue;
        CHECK((u / v) * v == u);
        CHECK(u + v - v == u);
        CHECK(RatFunc(a * c, b * c) == RatFunc(a, b));
    }
}

TEST_CASE("polynomial substitution") {
    auto X1 = MultiLaurent::var(2, 1), X2 = MultiLaurent::var(2, 2);
    auto f = X1 * MultiLaurent::var(2, 2, -1);
    CHECK(poly_substitute(f, {{1, X1}, {2, X2}}) == f);
    CHECK(poly_substitute(X1 + X2, {{1, X2}, {2, X1}}) == X1 + X2);
    CHECK(poly_substitute(X1 * X1, {{1, MultiLaurent(2, Laurent(2))}}) == MultiLaurent(2, Laurent(4)));
    CHECK_THROWS_WITH(poly_substitute(f, {{2, MultiLaurent(2, Laurent(2))}}), "non-unit substitution");
    CHECK(poly_substitute(f, {{2, MultiLaurent(2, Laurent::q(1))}}) == Laurent::q(-1) * X1);
}

TEST_CASE("modular rank and solving") {
    Laurent q = Laurent::q(1);
    using V = std::map<int, RatFunc>;
    Reducer<int, RatFunc> r;
    CHECK(r.add(V{{0, RatFunc(q)}, {1, RatFunc(Laurent(1))}}));
    CHECK(r.add(V{{0, RatFunc(Laurent(1))}, {1, RatFunc(q)}}));
    CHECK(!r.add(V{{0, RatFunc(q + Laurent(1))}, {1, RatFunc(q + Laurent(1))}}));
    auto sol = r.solve(V{{0, RatFunc(q * q + Laurent(1))}, {1, RatFunc(q + q)}});
    REQUIRE(sol);
    CHECK((*sol)[0] == RatFunc(q));
    CHECK((*sol)[1] == RatFunc(Laurent(1)));
    Fp x(12345);
    CHECK(eval_mod(q * q - Laurent(1), x) == x * x - Fp(1));
    CHECK((x / x) == Fp(1));
    auto ker = kernel<int, Fp>({{{0, Fp(1)}}, {{0, Fp(2)}}, {{1, Fp(1)}}});
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == Fp(-2));
    CHECK(ker[0][1] == Fp(1));
}
