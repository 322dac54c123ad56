#include <doctest.h>

#include <qschur/hecke.hpp>
#include <qschur/polyrep.hpp>

#include <random>

using namespace qschur;

namespace {

const Laurent q = Laurent::q(1);
const RatFunc Q1(q), Qm(Laurent::q(-1));

std::vector<Letter> random_word(std::mt19937& g, int m, int len) {
    std::vector<Letter> w;
    for (int k = 0; k < len; ++k) {
        bool h = m > 1 && g() % 2;
        Letter l;
        l.kind = h ? 'H' : 'X';
        l.i = h ? 1 + static_cast<int>(g() % static_cast<unsigned>(m - 1)) : 1 + static_cast<int>(g() % static_cast<unsigned>(m));
        l.power = g() % 4 == 0 ? -1 : 1;
        w.push_back(l);
    }
    return w;
}

MultiLaurent random_poly(std::mt19937& g, int m) {
    MultiLaurent f(m);
    for (int t = 0; t < 3; ++t) {
        Exps e(static_cast<std::size_t>(m));
        for (auto& x : e) x = static_cast<int>(g() % 5) - 2;
        f.add_term(e, Laurent(static_cast<long long>(g() % 7) - 3) * Laurent::q(static_cast<int>(g() % 3) - 1));
    }
    return f;
}

// the word acting letter by letter on polynomials; rightmost letter first
MultiLaurent act_word(const std::vector<Letter>& w, MultiLaurent f) {
    for (std::size_t k = w.size(); k-- > 0;) {
        const Letter& l = w[k];
        if (l.kind == 'H')
            f = l.power > 0 ? apply_H(f, l.i) : apply_H_inv(f, l.i);
        else
            f = MultiLaurent::var(f.nvars(), l.i, l.power) * f;
    }
    return f;
}

MultiLaurent act_affine(const AffineElement& a, const MultiLaurent& f) {
    MultiLaurent out(f.nvars());
    for (auto& [w, c] : a.terms) out += c * apply_Hw(f, reduced_word(w));
    return out;
}

HVec add(HVec a, const HVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}
HVec scale(const RatFunc& c, HVec a) {
    for (auto& x : a) x = c * x;
    return a;
}

MultiComposition mc(const std::string& s) { return parse_multicomposition(s); }

}  // namespace

TEST_CASE("straightening examples") {
    auto h = CycHecke::get(1, 2, {Laurent(3)});
    AKElement H1 = AKElement::H(h, 1);
    CHECK(H1 * H1 == RatFunc(Laurent::q(-1) - q) * H1 + AKElement::unit(h));
    CHECK(AKElement::X(h, 1) == AKElement::scalar(h, RatFunc(Laurent(3))));
    auto h2 = CycHecke::get(2, 2, {Laurent(1), Laurent(2)});
    CHECK(AKElement::word(h2, parse_word("H1 X1 H1")) == AKElement::X(h2, 2));
    CHECK(AKElement::word(h2, parse_word("X1 X1")) == RatFunc(3) * AKElement::X(h2, 1) - RatFunc(2) * AKElement::unit(h2));
    CHECK(AKElement::word(h2, parse_word("X2 X2^-1 H1^-1 H1")) == AKElement::unit(h2));
    CHECK(word_text(parse_word("H1 X2^-1")) == "H1 X2^-1");
    CHECK_THROWS(parse_word("Y1"));
    CHECK_THROWS_AS(h2->left({'H', 2, 1}, h2->unit()), std::out_of_range);
}

TEST_CASE("symbol count") {
    for (auto [ell, m, n] : std::vector<std::tuple<int, int, int>>{{1, 2, 2}, {1, 3, 6}, {2, 2, 8}, {2, 3, 48}, {3, 2, 18}}) {
        auto h = CycHecke::get(ell, m, CycHecke::default_parameters(ell));
        CHECK(h->dim() == n);
    }
}

TEST_CASE("affine normal form against the polynomial module") {
    std::mt19937 g(41);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 2 + trial % 2;
        auto w = random_word(g, m, 5);
        AffineElement a = affine_straighten(m, w);
        for (int k = 0; k < 3; ++k) {
            MultiLaurent f = random_poly(g, m);
            CHECK_MESSAGE(act_affine(a, f) == act_word(w, f), word_text(w));
        }
    }
}

TEST_CASE("cyclotomic straightening agrees with the reduced affine form") {
    std::mt19937 g(43);
    for (auto [ell, m] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
        auto h = CycHecke::get(ell, m, CycHecke::default_parameters(ell));
        for (int trial = 0; trial < 10; ++trial) {
            auto w = random_word(g, m, 4);
            CHECK_MESSAGE(h->straighten(w) == reduce_affine(*h, affine_straighten(m, w)), word_text(w));
        }
    }
}

TEST_CASE("defining relations on the regular representation") {
    for (auto [ell, m] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
        auto h = CycHecke::get(ell, m, CycHecke::default_parameters(ell));
        auto L = [&](const std::string& w, const HVec& v) { return h->left_word(parse_word(w), v); };
        for (int s = 0; s < h->dim(); ++s) {
            HVec e = h->basis_vector(s);
            for (int i = 1; i < m; ++i) {
                std::string Hi = "H" + std::to_string(i), Xi = "X" + std::to_string(i), Xj = "X" + std::to_string(i + 1);
                CHECK(L(Hi + " " + Hi, e) == add(scale(RatFunc(Laurent::q(-1) - q), L(Hi, e)), e));
                CHECK(L(Hi + " " + Xi + " " + Hi, e) == L(Xj, e));
                CHECK(L(Hi + "^-1 " + Hi, e) == e);
                for (int j = 1; j <= m; ++j)
                    if (j != i && j != i + 1) CHECK(L(Hi + " X" + std::to_string(j), e) == L("X" + std::to_string(j) + " " + Hi, e));
                if (i + 1 < m) {
                    std::string Hk = "H" + std::to_string(i + 1);
                    CHECK(L(Hi + " " + Hk + " " + Hi, e) == L(Hk + " " + Hi + " " + Hk, e));
                }
            }
            for (int j = 1; j <= m; ++j) {
                CHECK(L("X" + std::to_string(j) + "^-1 X" + std::to_string(j), e) == e);
                for (int k = j + 1; k <= m; ++k) CHECK(L("X" + std::to_string(j) + " X" + std::to_string(k), e) == L("X" + std::to_string(k) + " X" + std::to_string(j), e));
            }
            // prod (X_1 - u_i) = 0
            HVec v = e;
            for (auto& u : h->parameters()) v = add(L("X1", v), scale(RatFunc(-u), v));
            CHECK(v == h->zero());
        }
    }
}

TEST_CASE("multiplication and the anti-involution") {
    std::mt19937 g(47);
    auto h = CycHecke::get(2, 2, {Laurent(1), Laurent::parse("q+1")});
    for (int trial = 0; trial < 10; ++trial) {
        AKElement a = AKElement::word(h, random_word(g, 2, 3)), b = AKElement::word(h, random_word(g, 2, 3)), c = AKElement::word(h, random_word(g, 2, 2));
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).star() == b.star() * a.star());
        CHECK(a.star().star() == a);
    }
    CHECK(AKElement::Hw(h, {2, 1}).star() == AKElement::H(h, 1));
}

TEST_CASE("m_lambda") {
    auto h = CycHecke::get(1, 2, {Laurent(1)});
    HVec expect = h->unit();
    expect[static_cast<std::size_t>(h->perm_index({2, 1}))] = Qm;
    CHECK(m_lambda(*h, mc("1,1")) == h->unit());
    CHECK(m_lambda(*h, mc("2")) == expect);
    auto h2 = CycHecke::get(2, 1, {Laurent(1), Laurent(2)});
    CHECK(m_lambda(*h2, mc("|1")) == h2->unit());
    CHECK(AKElement(h2, m_lambda(*h2, mc("1|"))) == AKElement::X(h2, 1) - RatFunc(2) * AKElement::unit(h2));
    for (int m = 1; m <= 3; ++m) {
        auto h3 = CycHecke::get(2, m, CycHecke::default_parameters(2));
        for (auto& lam : schur_weights(*h3)) {
            HVec ml = m_lambda(*h3, lam);
            CHECK(h3->star(ml) == ml);
        }
    }
}

TEST_CASE("permutation modules") {
    auto h = CycHecke::get(1, 2, {Laurent(1)});
    CHECK(module_basis(*h, mc("1,1")).rank() == 2);
    CHECK(module_basis(*h, mc("2")).rank() == 1);
    auto h2 = CycHecke::get(2, 1, {Laurent(1), Laurent(2)});
    CHECK(module_basis(*h2, mc("|1")).rank() == 2);
    CHECK(module_basis(*h2, mc("1|")).rank() == 1);
    // level one: dim M^mu = m! / prod mu_i!
    for (int m = 1; m <= 4; ++m) {
        auto hm = CycHecke::get(1, m, {Laurent(1)});
        for (auto& mu : schur_weights(*hm)) {
            long long expect = 1;
            for (int k = 2; k <= m; ++k) expect *= k;
            for (int x : mu[0])
                for (int k = 2; k <= x; ++k) expect /= k;
            CHECK(static_cast<long long>(module_basis(*hm, mu).rank()) == expect);
        }
    }
}

TEST_CASE("homomorphisms") {
    auto h = CycHecke::get(1, 2, {Laurent(1)});
    MultiComposition two = mc("2"), ones = mc("1,1");
    HomMap split = make_hom(h, two, ones, m_lambda(*h, two));
    // merge: left multiplication by sigma^* = q + H_1
    HVec sig = h->zero();
    sig[0] = Q1;
    sig[static_cast<std::size_t>(h->perm_index({2, 1}))] = RatFunc(1);
    HomMap merge = make_hom(h, ones, two, h->mult(sig, m_lambda(*h, ones)));
    CHECK(compose_hom(merge, split) == RatFunc(q_int(2)) * identity_hom(h, two));
    CHECK(compose_hom(merge, identity_hom(h, ones)) == merge);
    CHECK_THROWS(compose_hom(split, split));
    CHECK_THROWS_AS(make_hom(h, ones, two, h->unit()), hom_error);
    CHECK(hom_dim(h, ones, ones) == 2);
    for (int m = 1; m <= 3; ++m) {
        auto hm = CycHecke::get(1, m, {Laurent(1)});
        for (auto& a : schur_weights(*hm))
            for (auto& b : schur_weights(*hm)) CHECK(hom_dim(hm, a, b) == enumerate_matrices(b[0], a[0]).size());
    }
    // associativity on random composable triples of hom basis elements
    auto h3 = CycHecke::get(2, 2, CycHecke::default_parameters(2));
    auto ws = schur_weights(*h3);
    std::mt19937 g(3);
    for (int t = 0; t < 6; ++t) {
        auto a = ws[g() % ws.size()], b = ws[g() % ws.size()], c = ws[g() % ws.size()], d = ws[g() % ws.size()];
        auto f = hom_basis(h3, c, d), gg = hom_basis(h3, b, c), k = hom_basis(h3, a, b);
        if (f.empty() || gg.empty() || k.empty()) continue;
        CHECK(compose_hom(compose_hom(f[0], gg.back()), k[0]) == compose_hom(f[0], compose_hom(gg.back(), k[0])));
    }
}

TEST_CASE("cellular basis") {
    auto h0 = CycHecke::get(1, 0, {Laurent(1)});
    CHECK(phi_basis(h0).size() == 1);
    auto h = CycHecke::get(1, 2, {Laurent(1)});
    auto basis = phi_basis(h);
    CHECK(basis.size() == 5);
    CHECK(phi_basis(h, {mc("1,1")}, {mc("1,1")}).size() == 2);
    CHECK(cellular_rank(basis) == 5);
    for (auto [ell, m] : std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {2, 2}}) {
        auto hh = CycHecke::get(ell, m, CycHecke::default_parameters(ell));
        auto b = phi_basis(hh);
        auto ws = schur_weights(*hh);
        CHECK(b.size() == sst_pair_count(m, ell, ws, ws));
        CHECK(cellular_rank(b) == b.size());
        // the phi_ST of a fixed (mu, nu) span the whole Hom space
        for (auto& mu : ws)
            for (auto& nu : ws) {
                std::size_t n = 0;
                for (auto& e : b) n += (e.mu == mu && e.nu == nu) ? 1 : 0;
                CHECK(n == hom_dim(hh, nu, mu));
            }
    }
    auto j = to_json(basis[0]);
    CHECK(j.contains("image"));
}
