#pragma once

#include "combinat.hpp"
#include "linalg.hpp"
#include "ring.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qschur {

// Coefficient vector over the Ariki-Koike symbols X^c H_w, 0 <= c_i < ell.
using HVec = std::vector<RatFunc>;
using Cols = std::vector<std::vector<std::pair<int, RatFunc>>>;

// A generator H_i^{+-1} or X_j^{+-1}.
struct Letter {
    char kind = 'H';
    int i = 1;
    int power = 1;
    friend bool operator==(const Letter& a, const Letter& b) { return a.kind == b.kind && a.i == b.i && a.power == b.power; }
};

inline std::string word_text(const std::vector<Letter>& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        s += k ? " " : "";
        s += w[k].kind + std::to_string(w[k].i);
        if (w[k].power != 1) s += "^" + std::to_string(w[k].power);
    }
    return s;
}

// "H1 X2^-1 H2"; an empty string is the unit
inline std::vector<Letter> parse_word(const std::string& s) {
    std::vector<Letter> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 'H' && tok[0] != 'X')) throw std::invalid_argument("bad letter: " + tok);
        Letter l;
        l.kind = tok[0];
        auto hat = tok.find('^');
        try {
            l.i = std::stoi(tok.substr(1, hat == std::string::npos ? std::string::npos : hat - 1));
            if (hat != std::string::npos) l.power = std::stoi(tok.substr(hat + 1));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad letter: " + tok);
        }
        if (l.power != 1 && l.power != -1) throw std::invalid_argument("letter powers must be 1 or -1: " + tok);
        out.push_back(l);
    }
    return out;
}

inline Laurent elementary_symmetric(const std::vector<Laurent>& u, int k) {
    std::vector<Laurent> e(u.size() + 1);
    e[0] = Laurent(1);
    for (std::size_t j = 0; j < u.size(); ++j)
        for (std::size_t t = j + 1; t-- > 0;) e[t + 1] += e[t] * u[j];
    return k < 0 || k > static_cast<int>(u.size()) ? Laurent() : e[static_cast<std::size_t>(k)];
}

class CycHecke;
using HeckePtr = std::shared_ptr<const CycHecke>;

// Cyclotomic Hecke algebra H_{m,u}: affine Hecke algebra of rank m modulo prod (X_1 - u_i).
class CycHecke {
public:
    CycHecke(int ell, int m, std::vector<Laurent> u) : ell_(ell), m_(m), u_(std::move(u)) {
        if (ell < 1 || m < 0) throw std::invalid_argument("need level >= 1 and rank >= 0");
        if (static_cast<int>(u_.size()) != ell) throw std::invalid_argument("need one parameter per level");
        perms_ = all_perms(m);
        for (std::size_t k = 0; k < perms_.size(); ++k) perm_index_.emplace(perms_[k], static_cast<int>(k));
        std::vector<int> c(static_cast<std::size_t>(m), 0);
        while (true) {
            exps_index_.emplace(c, static_cast<int>(exps_.size()));
            exps_.push_back(c);
            int j = m - 1;
            while (j >= 0 && c[static_cast<std::size_t>(j)] == ell - 1) c[static_cast<std::size_t>(j--)] = 0;
            if (j < 0) break;
            ++c[static_cast<std::size_t>(j)];
        }
        P_ = static_cast<int>(perms_.size());
        N_ = P_ * static_cast<int>(exps_.size());
        for (int s = 0; s < N_; ++s) {
            std::vector<Letter> lets;
            const Perm& w = perm(s % P_);
            auto word = reduced_word(w);
            for (std::size_t k = word.size(); k-- > 0;) lets.push_back({'H', word[k], 1});
            const auto& e = exponents(s / P_);
            for (int j = 1; j <= m; ++j)
                for (int t = 0; t < e[static_cast<std::size_t>(j - 1)]; ++t) lets.push_back({'X', j, 1});
            apply_order_.push_back(std::move(lets));
        }
        build();
    }

    static HeckePtr get(int ell, int m, const std::vector<Laurent>& u) {
        static std::map<std::tuple<int, int, std::vector<std::string>>, HeckePtr> cache;
        static std::mutex mu;
        std::vector<std::string> key;
        for (auto& x : u) key.push_back(x.str());
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({ell, m, key});
        if (it != cache.end()) return it->second;
        auto p = std::make_shared<const CycHecke>(ell, m, u);
        cache.emplace(std::make_tuple(ell, m, key), p);
        return p;
    }
    static std::vector<Laurent> default_parameters(int ell) {
        std::vector<Laurent> u;
        for (int i = 1; i <= ell; ++i) u.emplace_back(i);
        return u;
    }

    int level() const { return ell_; }
    int rank() const { return m_; }
    int dim() const { return N_; }
    const std::vector<Laurent>& parameters() const { return u_; }

    int nperms() const { return P_; }
    const Perm& perm(int wi) const { return perms_[static_cast<std::size_t>(wi)]; }
    int perm_index(const Perm& w) const { return perm_index_.at(w); }
    const std::vector<int>& exponents(int ci) const { return exps_[static_cast<std::size_t>(ci)]; }
    int symbol(const std::vector<int>& c, const Perm& w) const { return exps_index_.at(c) * P_ + perm_index(w); }

    std::string symbol_text(int s) const {
        std::string out;
        const auto& e = exponents(s / P_);
        for (int j = 0; j < m_; ++j) {
            int x = e[static_cast<std::size_t>(j)];
            if (x == 0) continue;
            out += (out.empty() ? "" : "*") + std::string("X") + std::to_string(j + 1);
            if (x > 1) out += "^" + std::to_string(x);
        }
        const Perm& w = perm(s % P_);
        if (perm_length(w) > 0) {
            out += out.empty() ? "H[" : "*H[";
            for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + std::to_string(w[k]);
            out += "]";
        }
        return out.empty() ? "1" : out;
    }

    HVec zero() const { return HVec(static_cast<std::size_t>(N_)); }
    HVec basis_vector(int s) const {
        HVec v = zero();
        v[static_cast<std::size_t>(s)] = RatFunc(1);
        return v;
    }
    HVec unit() const { return basis_vector(0); }
    HVec Hw(const Perm& w) const { return basis_vector(perm_index(w)); }

    static HVec apply(const Cols& M, const HVec& v) {
        HVec out(v.size());
        for (std::size_t s = 0; s < v.size(); ++s) {
            if (v[s].is_zero()) continue;
            for (auto& [k, c] : M[s]) out[static_cast<std::size_t>(k)] += v[s] * c;
        }
        return out;
    }

    HVec left(const Letter& g, const HVec& v) const {
        check_letter(g);
        if (g.kind == 'X') return apply(g.power > 0 ? LX_[static_cast<std::size_t>(g.i)] : LXi_[static_cast<std::size_t>(g.i)], v);
        HVec out = apply(LH_[static_cast<std::size_t>(g.i)], v);
        if (g.power < 0) {
            RatFunc d(Laurent::q(1) - Laurent::q(-1));
            for (std::size_t s = 0; s < v.size(); ++s)
                if (!v[s].is_zero()) out[s] += d * v[s];
        }
        return out;
    }
    // word[0] * word[1] * ... * v
    HVec left_word(const std::vector<Letter>& word, HVec v) const {
        for (std::size_t k = word.size(); k-- > 0;) v = left(word[k], v);
        return v;
    }
    HVec straighten(const std::vector<Letter>& word) const { return left_word(word, unit()); }

    // v * H_i, cheap: only the H part of each symbol changes
    HVec right_H(const HVec& v, int i) const {
        if (i < 1 || i >= m_) throw std::out_of_range("Hecke generator index out of range");
        HVec out = zero();
        RatFunc d(Laurent::q(-1) - Laurent::q(1));
        for (int s = 0; s < N_; ++s) {
            const RatFunc& x = v[static_cast<std::size_t>(s)];
            if (x.is_zero()) continue;
            int ci = s / P_, wi = s % P_;
            const Perm& w = perm(wi);
            Perm ws = right_mult_s(w, i);
            out[static_cast<std::size_t>(ci * P_ + perm_index(ws))] += x;
            if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) out[static_cast<std::size_t>(s)] += d * x;
        }
        return out;
    }
    // v * H_w
    HVec right_Hw(HVec v, const Perm& w) const {
        for (int i : reduced_word(w)) v = right_H(v, i);
        return v;
    }

    HVec symbol_times(int s, const HVec& v) const {
        HVec r = v;
        for (auto& l : apply_order_[static_cast<std::size_t>(s)]) r = left(l, r);
        return r;
    }
    HVec mult(const HVec& x, const HVec& y) const {
        HVec out = zero();
        for (int s = 0; s < N_; ++s) {
            if (x[static_cast<std::size_t>(s)].is_zero()) continue;
            HVec t = symbol_times(s, y);
            for (int k = 0; k < N_; ++k)
                if (!t[static_cast<std::size_t>(k)].is_zero()) out[static_cast<std::size_t>(k)] += x[static_cast<std::size_t>(s)] * t[static_cast<std::size_t>(k)];
        }
        return out;
    }
    // anti-involution fixing every H_i and X_j: (X^c H_w)* = H_{w^-1} X^c
    HVec star(const HVec& x) const {
        HVec out = zero();
        for (int s = 0; s < N_; ++s) {
            if (x[static_cast<std::size_t>(s)].is_zero()) continue;
            int ci = s / P_;
            HVec t = basis_vector(ci * P_);
            auto word = reduced_word(perm_inverse(perm(s % P_)));
            std::vector<Letter> lets;
            for (int i : word) lets.push_back({'H', i, 1});
            t = left_word(lets, t);
            for (int k = 0; k < N_; ++k)
                if (!t[static_cast<std::size_t>(k)].is_zero()) out[static_cast<std::size_t>(k)] += x[static_cast<std::size_t>(s)] * t[static_cast<std::size_t>(k)];
        }
        return out;
    }
    // f(X) * v for a Laurent polynomial f in X_1..X_m
    HVec poly_times(const MultiLaurent& f, const HVec& v) const {
        if (f.nvars() != m_) throw std::invalid_argument("polynomial in the wrong number of variables");
        HVec out = zero();
        for (auto& [e, c] : f.terms()) {
            HVec t = v;
            for (int j = 1; j <= m_; ++j) {
                int x = e[static_cast<std::size_t>(j - 1)];
                for (int k = 0; k < std::abs(x); ++k) t = left({'X', j, x > 0 ? 1 : -1}, t);
            }
            RatFunc rc(c);
            for (int k = 0; k < N_; ++k)
                if (!t[static_cast<std::size_t>(k)].is_zero()) out[static_cast<std::size_t>(k)] += rc * t[static_cast<std::size_t>(k)];
        }
        return out;
    }
    // column a holds sym_a * g
    Cols right_matrix(const HVec& g) const {
        Cols M(static_cast<std::size_t>(N_));
        for (int a = 0; a < N_; ++a) {
            HVec t = symbol_times(a, g);
            for (int k = 0; k < N_; ++k)
                if (!t[static_cast<std::size_t>(k)].is_zero()) M[static_cast<std::size_t>(a)].emplace_back(k, t[static_cast<std::size_t>(k)]);
        }
        return M;
    }

    std::string text(const HVec& v) const {
        std::string s;
        for (int k = 0; k < N_; ++k) {
            const RatFunc& c = v[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            s += s.empty() ? "" : " + ";
            s += "(" + c.str() + ")*" + symbol_text(k);
        }
        return s.empty() ? "0" : s;
    }
    nlohmann::json to_json(const HVec& v) const {
        nlohmann::json j = nlohmann::json::array();
        for (int k = 0; k < N_; ++k)
            if (!v[static_cast<std::size_t>(k)].is_zero()) j.push_back({{"symbol", symbol_text(k)}, {"coeff", v[static_cast<std::size_t>(k)].str()}});
        return j;
    }

    // caches filled by the permutation-module layer
    template <class T>
    T& cached(const std::string& key, const std::function<T()>& make) const {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, std::make_shared<T>(make())).first;
        return *std::static_pointer_cast<T>(it->second);
    }

private:
    void check_letter(const Letter& g) const {
        if (g.kind == 'H' && (g.i < 1 || g.i >= m_)) throw std::out_of_range("Hecke generator index out of range");
        if (g.kind == 'X' && (g.i < 1 || g.i > m_)) throw std::out_of_range("X index out of range");
        if (g.kind != 'H' && g.kind != 'X') throw std::invalid_argument("unknown generator");
    }

    void build() {
        const Laurent qq = Laurent::q(1) - Laurent::q(-1);
        LH_.assign(static_cast<std::size_t>(std::max(m_, 1)), Cols{});
        LX_.assign(static_cast<std::size_t>(m_ + 1), Cols{});
        LXi_.assign(static_cast<std::size_t>(m_ + 1), Cols{});
        // H_i X^c H_w = X^{s_i c} H_i H_w + (q - q^-1) X_{i+1} (X^c - X^{s_i c}) / (X_i - X_{i+1}) H_w
        for (int i = 1; i < m_; ++i) {
            Cols M(static_cast<std::size_t>(N_));
            for (int s = 0; s < N_; ++s) {
                auto& col = M[static_cast<std::size_t>(s)];
                std::vector<int> c = exponents(s / P_);
                const Perm& w = perm(s % P_);
                std::vector<int> sc = c;
                std::swap(sc[static_cast<std::size_t>(i - 1)], sc[static_cast<std::size_t>(i)]);
                Perm sw = left_mult_s(w, i);
                col.emplace_back(symbol(sc, sw), RatFunc(1));
                if (perm_length(sw) < perm_length(w)) col.emplace_back(symbol(sc, w), RatFunc(Laurent::q(-1) - Laurent::q(1)));
                int a = c[static_cast<std::size_t>(i - 1)], b = c[static_cast<std::size_t>(i)];
                int lo = std::min(a, b), d = std::abs(a - b);
                RatFunc coef(a > b ? qq : -qq);
                for (int t = 0; t < d; ++t) {
                    std::vector<int> e = c;
                    e[static_cast<std::size_t>(i - 1)] = lo + t;
                    e[static_cast<std::size_t>(i)] = lo + d - t;
                    col.emplace_back(symbol(e, w), coef);
                }
            }
            LH_[static_cast<std::size_t>(i)] = merge_cols(M);
        }
        if (m_ == 0) return;
        // X_1^ell = sum_k (-1)^{k+1} e_k X_1^{ell-k}; X_1^-1 from the same relation
        Laurent eell = elementary_symmetric(u_, ell_);
        if (eell.is_zero()) throw std::domain_error("X_1 is not invertible when a parameter vanishes");
        RatFunc inv_const = RatFunc(ell_ % 2 ? Laurent(1) : Laurent(-1)) / RatFunc(eell);
        Cols X1(static_cast<std::size_t>(N_)), X1i(static_cast<std::size_t>(N_));
        for (int s = 0; s < N_; ++s) {
            std::vector<int> c = exponents(s / P_);
            const Perm& w = perm(s % P_);
            if (c[0] + 1 < ell_) {
                std::vector<int> e = c;
                ++e[0];
                X1[static_cast<std::size_t>(s)].emplace_back(symbol(e, w), RatFunc(1));
            } else {
                for (int k = 1; k <= ell_; ++k) {
                    std::vector<int> e = c;
                    e[0] = ell_ - k;
                    Laurent co = elementary_symmetric(u_, k);
                    if (k % 2 == 0) co = -co;
                    if (!co.is_zero()) X1[static_cast<std::size_t>(s)].emplace_back(symbol(e, w), RatFunc(co));
                }
            }
            if (c[0] > 0) {
                std::vector<int> e = c;
                --e[0];
                X1i[static_cast<std::size_t>(s)].emplace_back(symbol(e, w), RatFunc(1));
            } else {
                for (int k = 0; k < ell_; ++k) {
                    std::vector<int> e = c;
                    e[0] = ell_ - 1 - k;
                    Laurent co = elementary_symmetric(u_, k);
                    if (k % 2) co = -co;
                    if (!co.is_zero()) X1i[static_cast<std::size_t>(s)].emplace_back(symbol(e, w), RatFunc(co) * inv_const);
                }
            }
        }
        LX_[1] = merge_cols(X1);
        LXi_[1] = merge_cols(X1i);
        // X_j = H_{j-1} X_{j-1} H_{j-1}
        for (int j = 2; j <= m_; ++j) {
            Cols M(static_cast<std::size_t>(N_)), Mi(static_cast<std::size_t>(N_));
            for (int s = 0; s < N_; ++s) {
                HVec e = basis_vector(s);
                HVec t = left({'H', j - 1, 1}, left({'X', j - 1, 1}, left({'H', j - 1, 1}, e)));
                HVec ti = left({'H', j - 1, -1}, left({'X', j - 1, -1}, left({'H', j - 1, -1}, e)));
                for (int k = 0; k < N_; ++k) {
                    if (!t[static_cast<std::size_t>(k)].is_zero()) M[static_cast<std::size_t>(s)].emplace_back(k, t[static_cast<std::size_t>(k)]);
                    if (!ti[static_cast<std::size_t>(k)].is_zero()) Mi[static_cast<std::size_t>(s)].emplace_back(k, ti[static_cast<std::size_t>(k)]);
                }
            }
            LX_[static_cast<std::size_t>(j)] = std::move(M);
            LXi_[static_cast<std::size_t>(j)] = std::move(Mi);
        }
    }

    static Cols merge_cols(const Cols& M) {
        Cols out(M.size());
        for (std::size_t s = 0; s < M.size(); ++s) {
            std::map<int, RatFunc> acc;
            for (auto& [k, c] : M[s]) acc[k] += c;
            for (auto& [k, c] : acc)
                if (!c.is_zero()) out[s].emplace_back(k, c);
        }
        return out;
    }

    int ell_, m_;
    std::vector<Laurent> u_;
    std::vector<Perm> perms_;
    std::map<Perm, int> perm_index_;
    std::vector<std::vector<int>> exps_;
    std::map<std::vector<int>, int> exps_index_;
    int P_ = 1, N_ = 1;
    std::vector<std::vector<Letter>> apply_order_;
    std::vector<Cols> LH_, LX_, LXi_;
    mutable std::mutex cache_mu_;
    mutable std::map<std::string, std::shared_ptr<void>> cache_;
};

// ---------------------------------------------------------------- elements

class AKElement {
public:
    AKElement() = default;
    AKElement(HeckePtr a, HVec v) : a_(std::move(a)), v_(std::move(v)) {}

    static AKElement unit(const HeckePtr& a) { return {a, a->unit()}; }
    static AKElement scalar(const HeckePtr& a, const RatFunc& c) {
        HVec v = a->zero();
        v[0] = c;
        return {a, v};
    }
    static AKElement H(const HeckePtr& a, int i) { return {a, a->straighten({{'H', i, 1}})}; }
    static AKElement X(const HeckePtr& a, int j, int power = 1) {
        HVec v = a->unit();
        for (int k = 0; k < std::abs(power); ++k) v = a->left({'X', j, power > 0 ? 1 : -1}, v);
        return {a, v};
    }
    static AKElement Hw(const HeckePtr& a, const Perm& w) { return {a, a->Hw(w)}; }
    static AKElement word(const HeckePtr& a, const std::vector<Letter>& w) { return {a, a->straighten(w)}; }

    const CycHecke& algebra() const { return *a_; }
    const HeckePtr& algebra_ptr() const { return a_; }
    const HVec& coeffs() const { return v_; }
    bool is_zero() const {
        for (auto& c : v_)
            if (!c.is_zero()) return false;
        return true;
    }
    std::size_t support() const {
        std::size_t n = 0;
        for (auto& c : v_) n += c.is_zero() ? 0 : 1;
        return n;
    }

    friend AKElement operator+(const AKElement& x, const AKElement& y) {
        same(x, y);
        HVec v = x.v_;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += y.v_[k];
        return {x.a_, v};
    }
    friend AKElement operator-(const AKElement& x, const AKElement& y) {
        same(x, y);
        HVec v = x.v_;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= y.v_[k];
        return {x.a_, v};
    }
    friend AKElement operator*(const RatFunc& c, const AKElement& x) {
        HVec v = x.v_;
        for (auto& e : v) e = c * e;
        return {x.a_, v};
    }
    friend AKElement operator*(const AKElement& x, const AKElement& y) {
        same(x, y);
        return {x.a_, x.a_->mult(x.v_, y.v_)};
    }
    friend bool operator==(const AKElement& x, const AKElement& y) { return x.a_ == y.a_ && x.v_ == y.v_; }
    friend bool operator!=(const AKElement& x, const AKElement& y) { return !(x == y); }

    AKElement star() const { return {a_, a_->star(v_)}; }
    std::string str() const { return a_->text(v_); }

private:
    static void same(const AKElement& x, const AKElement& y) {
        if (x.a_ != y.a_) throw std::invalid_argument("elements of different algebras");
    }
    HeckePtr a_;
    HVec v_;
};

// ---------------------------------------------------------------- affine normal form

// sum_w f_w(X) H_w in the affine Hecke algebra; no cyclotomic reduction.
struct AffineElement {
    int m = 0;
    std::map<Perm, MultiLaurent> terms;

    static AffineElement unit(int m) {
        AffineElement a;
        a.m = m;
        a.terms.emplace(identity_perm(m), MultiLaurent(m, Laurent(1)));
        return a;
    }
    void add(const Perm& w, const MultiLaurent& f) {
        auto it = terms.find(w);
        if (it == terms.end())
            terms.emplace(w, f);
        else
            it->second += f;
        it = terms.find(w);
        if (it->second.is_zero()) terms.erase(it);
    }
};

// g * a for a single generator
inline AffineElement affine_left(const Letter& g, const AffineElement& a) {
    AffineElement out;
    out.m = a.m;
    if (g.kind == 'X') {
        MultiLaurent x = MultiLaurent::var(a.m, g.i, g.power);
        for (auto& [w, f] : a.terms) out.add(w, x * f);
        return out;
    }
    int i = g.i;
    const Laurent qq = Laurent::q(1) - Laurent::q(-1);
    for (auto& [w, f] : a.terms) {
        MultiLaurent sf = f.swapped(i, i + 1);
        // divided difference X_{i+1} (f - s f) / (X_i - X_{i+1})
        MultiLaurent dd(a.m);
        for (auto& [e, c] : f.terms()) {
            int x = e[static_cast<std::size_t>(i - 1)], y = e[static_cast<std::size_t>(i)];
            if (x == y) continue;
            int lo = std::min(x, y), d = std::abs(x - y);
            Laurent cc = x > y ? c : -c;
            for (int t = 0; t < d; ++t) {
                auto f2 = e;
                f2[static_cast<std::size_t>(i - 1)] = lo + t;
                f2[static_cast<std::size_t>(i)] = lo + d - t;
                dd.add_term(f2, cc);
            }
        }
        Perm sw = left_mult_s(w, i);
        out.add(sw, sf);
        if (perm_length(sw) < perm_length(w)) out.add(w, (Laurent::q(-1) - Laurent::q(1)) * sf);
        if (!dd.is_zero()) out.add(w, qq * dd);
        if (g.power < 0) out.add(w, qq * f);
    }
    return out;
}

inline AffineElement affine_straighten(int m, const std::vector<Letter>& word) {
    AffineElement a = AffineElement::unit(m);
    for (std::size_t k = word.size(); k-- > 0;) a = affine_left(word[k], a);
    return a;
}

// image in the cyclotomic quotient
inline HVec reduce_affine(const CycHecke& h, const AffineElement& a) {
    HVec out = h.zero();
    for (auto& [w, f] : a.terms) {
        HVec t = h.poly_times(f, h.Hw(w));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += t[k];
    }
    return out;
}

// ---------------------------------------------------------------- DJM elements

class hom_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// X_lambda = sum over the Young subgroup of q^{-l(w)} H_w
inline HVec x_lambda(const CycHecke& h, const MultiComposition& lambda) {
    HVec v = h.zero();
    for (auto& w : young_subgroup(flatten(lambda))) v[static_cast<std::size_t>(h.perm_index(w))] += RatFunc(Laurent::q(-perm_length(w)));
    return v;
}

// pi_lambda = prod_{i < ell} prod_{j <= a_i} (X_j - u_{i+1}), a_i = |lambda^(1)| + ... + |lambda^(i)|
inline MultiLaurent pi_polynomial(const CycHecke& h, const MultiComposition& lambda) {
    int m = h.rank();
    MultiLaurent p(m, Laurent(1));
    int a = 0;
    for (int i = 1; i < h.level(); ++i) {
        a += weight(lambda[static_cast<std::size_t>(i - 1)]);
        for (int j = 1; j <= a; ++j) p = p * (MultiLaurent::var(m, j) - MultiLaurent(m, h.parameters()[static_cast<std::size_t>(i)]));
    }
    return p;
}

inline void check_multicomposition(const CycHecke& h, const MultiComposition& lambda) {
    if (static_cast<int>(lambda.size()) != h.level()) throw std::invalid_argument("multicomposition has the wrong number of components");
    if (weight(lambda) != h.rank()) throw std::invalid_argument("multicomposition has the wrong size");
    for (auto& c : lambda)
        for (int x : c)
            if (x <= 0) throw std::invalid_argument("multicomposition parts must be positive");
}

inline HVec m_lambda(const CycHecke& h, const MultiComposition& lambda) {
    check_multicomposition(h, lambda);
    return h.cached<HVec>("m:" + to_text(lambda), [&] {
        HVec x = x_lambda(h, lambda);
        MultiLaurent p = pi_polynomial(h, lambda);
        HVec left = h.poly_times(p, x);
        HVec right = h.mult(x, h.poly_times(p, h.unit()));
        if (left != right) throw std::logic_error("pi_lambda does not commute with X_lambda");
        return left;
    });
}

// Echelonised basis of M^mu = m_mu H: the vectors m_mu * sym_k, k ascending, that are new.
struct ModuleBasis {
    MultiComposition mu;
    HVec generator;
    std::vector<int> symbols;
    std::vector<HVec> vectors;
    Reducer<int, RatFunc> reducer;  // fed with m_mu * sym_k for every k
    std::vector<HVec> kernel;       // h with m_mu h = 0
    std::vector<HVec> annihilator;  // generators of that right ideal
    std::vector<Cols> right;        // right multiplication by each annihilator generator
    std::size_t rank() const { return symbols.size(); }
};

inline std::map<int, RatFunc> sparse(const HVec& v) {
    std::map<int, RatFunc> s;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) s.emplace(static_cast<int>(k), v[k]);
    return s;
}

inline const ModuleBasis& module_basis(const CycHecke& h, const MultiComposition& mu) {
    HVec gen = m_lambda(h, mu);
    return h.cached<ModuleBasis>("M:" + to_text(mu), [&] {
        ModuleBasis b;
        b.mu = mu;
        b.generator = gen;
        std::vector<std::map<int, RatFunc>> cols;
        for (int s = 0; s < h.dim(); ++s) {
            HVec v = h.mult(gen, h.basis_vector(s));
            auto sv = sparse(v);
            cols.push_back(sv);
            if (b.reducer.add(sv)) {
                b.symbols.push_back(s);
                b.vectors.push_back(v);
            }
        }
        for (auto& k : qschur::kernel(cols)) b.kernel.push_back(k);
        // pick right-ideal generators of the annihilator until they span it
        Reducer<int, RatFunc> span;
        for (auto& k : b.kernel) {
            if (span.reduce(sparse(k)).residual.empty()) continue;
            b.annihilator.push_back(k);
            for (int s = 0; s < h.dim(); ++s) span.add(sparse(h.mult(k, h.basis_vector(s))));
            if (span.rank() == b.kernel.size()) break;
        }
        if (span.rank() != b.kernel.size()) throw std::logic_error("annihilator generators do not close");
        for (auto& g : b.annihilator) b.right.push_back(h.right_matrix(g));
        return b;
    });
}

inline HVec times_right(const Cols& R, const HVec& y) { return CycHecke::apply(R, y); }

// h with x = m_mu h, or nothing when x is outside M^mu
inline std::optional<HVec> solve_in_module(const CycHecke& h, const ModuleBasis& b, const HVec& x) {
    auto sol = b.reducer.solve(sparse(x));
    if (!sol) return std::nullopt;
    HVec out = h.zero();
    for (std::size_t k = 0; k < sol->size(); ++k) out[k] = (*sol)[k];
    return out;
}

// ---------------------------------------------------------------- homomorphisms

// M^source -> M^target, m_source h -> image h
struct HomMap {
    HeckePtr alg;
    MultiComposition source, target;
    HVec image;

    bool is_zero() const {
        for (auto& c : image)
            if (!c.is_zero()) return false;
        return true;
    }
    friend bool operator==(const HomMap& f, const HomMap& g) { return f.source == g.source && f.target == g.target && f.image == g.image; }
    friend bool operator!=(const HomMap& f, const HomMap& g) { return !(f == g); }
    HomMap operator+(const HomMap& o) const {
        if (o.source != source || o.target != target) throw std::invalid_argument("boundary mismatch");
        HomMap r = *this;
        for (std::size_t k = 0; k < image.size(); ++k) r.image[k] += o.image[k];
        return r;
    }
    friend HomMap operator*(const RatFunc& c, const HomMap& f) {
        HomMap r = f;
        for (auto& x : r.image) x = c * x;
        return r;
    }
};

// Is m_source h -> y h well defined with values in M^target?
inline bool well_defined(const CycHecke& h, const MultiComposition& source, const MultiComposition& target, const HVec& y) {
    const ModuleBasis& t = module_basis(h, target);
    if (!t.reducer.solve(sparse(y))) return false;
    const ModuleBasis& s = module_basis(h, source);
    for (auto& R : s.right) {
        HVec z = times_right(R, y);
        for (auto& c : z)
            if (!c.is_zero()) return false;
    }
    return true;
}

inline HomMap make_hom(const HeckePtr& h, const MultiComposition& source, const MultiComposition& target, HVec image, bool check = true) {
    if (check && !well_defined(*h, source, target, image)) throw hom_error("assignment m_" + to_text(source) + " -> y is not a homomorphism into M^" + to_text(target));
    return {h, source, target, std::move(image)};
}

inline HomMap identity_hom(const HeckePtr& h, const MultiComposition& mu) { return {h, mu, mu, m_lambda(*h, mu)}; }
inline HomMap zero_hom(const HeckePtr& h, const MultiComposition& source, const MultiComposition& target) { return {h, source, target, h->zero()}; }

// f(x) for x in M^{f.source}
inline HVec apply_hom(const HomMap& f, const HVec& x) {
    const ModuleBasis& b = module_basis(*f.alg, f.source);
    auto sol = solve_in_module(*f.alg, b, x);
    if (!sol) throw hom_error("element is not in M^" + to_text(f.source));
    return f.alg->mult(f.image, *sol);
}

// f o g
inline HomMap compose_hom(const HomMap& f, const HomMap& g) {
    if (g.target != f.source) throw std::invalid_argument("boundary mismatch: " + to_text(g.target) + " vs " + to_text(f.source));
    return {f.alg, g.source, f.target, apply_hom(f, g.image)};
}

// Basis of Hom(M^source, M^target): y in M^target with y * ann(m_source) = 0.
inline std::vector<HomMap> hom_basis(const HeckePtr& h, const MultiComposition& source, const MultiComposition& target) {
    const ModuleBasis& t = module_basis(*h, target);
    const ModuleBasis& s = module_basis(*h, source);
    std::vector<std::map<std::pair<int, int>, RatFunc>> cols;
    for (auto& v : t.vectors) {
        std::map<std::pair<int, int>, RatFunc> col;
        for (std::size_t g = 0; g < s.right.size(); ++g) {
            HVec z = times_right(s.right[g], v);
            for (std::size_t k = 0; k < z.size(); ++k)
                if (!z[k].is_zero()) col.emplace(std::make_pair(static_cast<int>(g), static_cast<int>(k)), z[k]);
        }
        cols.push_back(std::move(col));
    }
    std::vector<HomMap> out;
    for (auto& c : kernel(cols)) {
        HVec y = h->zero();
        for (std::size_t b = 0; b < c.size(); ++b)
            if (!c[b].is_zero())
                for (std::size_t k = 0; k < y.size(); ++k) y[k] += c[b] * t.vectors[b][k];
        out.push_back({h, source, target, y});
    }
    return out;
}
inline std::size_t hom_dim(const HeckePtr& h, const MultiComposition& source, const MultiComposition& target) { return hom_basis(h, source, target).size(); }

// ---------------------------------------------------------------- cellular basis

// d(t): t = t^lambda d(t) with permutations acting on entries from the right
inline Perm tableau_perm(const StdTableau& t) { return perm_inverse(coset_word_perm(t)); }

// sum over s in mu^{-1}(S), t in nu^{-1}(T) of H_{d(s)}^* m_lambda H_{d(t)}
inline HVec m_ST(const CycHecke& h, const MultiTableau& S, const MultiComposition& mu, const MultiTableau& T, const MultiComposition& nu) {
    if (S.shape != T.shape) throw std::invalid_argument("tableaux of different shapes");
    HVec ml = m_lambda(h, S.shape);
    HVec right = h.zero();
    for (auto& t : preimages(T, nu)) {
        Perm d = tableau_perm(t);
        HVec x = h.right_Hw(ml, d);
        RatFunc c(Laurent::q(-perm_length(d)));
        for (std::size_t k = 0; k < x.size(); ++k) right[k] += c * x[k];
    }
    HVec out = h.zero();
    for (auto& s : preimages(S, mu)) {
        auto word = reduced_word(perm_inverse(tableau_perm(s)));
        std::vector<Letter> lets;
        for (int i : word) lets.push_back({'H', i, 1});
        HVec x = h.left_word(lets, right);
        RatFunc c(Laurent::q(-static_cast<int>(word.size())));
        for (std::size_t k = 0; k < x.size(); ++k) out[k] += c * x[k];
    }
    return out;
}

struct CellularElement {
    MultiComposition lambda, mu, nu;
    MultiTableau S, T;
    HomMap phi;  // M^nu -> M^mu, m_nu h -> m_ST h
};

inline std::vector<MultiComposition> schur_weights(const CycHecke& h) { return multicompositions(h.rank(), h.level()); }

// All phi_ST with S of type mu and T of type nu; every map is checked to be well defined.
inline std::vector<CellularElement> phi_basis(const HeckePtr& h, const std::vector<MultiComposition>& mus, const std::vector<MultiComposition>& nus) {
    std::vector<CellularElement> out;
    for (auto& lambda : multipartitions(h->rank(), h->level()))
        for (auto& mu : mus)
            for (auto& S : enumerate_sst(lambda, mu))
                for (auto& nu : nus)
                    for (auto& T : enumerate_sst(lambda, nu)) {
                        HVec y = m_ST(*h, S, mu, T, nu);
                        if (!well_defined(*h, nu, mu, y)) throw hom_error("phi_ST is not well defined for S = " + S.str() + ", T = " + T.str());
                        out.push_back({lambda, mu, nu, S, T, {h, nu, mu, y}});
                    }
    return out;
}
inline std::vector<CellularElement> phi_basis(const HeckePtr& h) {
    auto ws = schur_weights(*h);
    return phi_basis(h, ws, ws);
}

inline std::size_t sst_pair_count(int m, int ell, const std::vector<MultiComposition>& mus, const std::vector<MultiComposition>& nus) {
    std::size_t n = 0;
    for (auto& lambda : multipartitions(m, ell)) {
        std::size_t a = 0, b = 0;
        for (auto& mu : mus) a += enumerate_sst(lambda, mu).size();
        for (auto& nu : nus) b += enumerate_sst(lambda, nu).size();
        n += a * b;
    }
    return n;
}

// rank of the images m_ST, grouped by (mu, nu)
inline std::size_t cellular_rank(const std::vector<CellularElement>& basis) {
    std::map<std::pair<std::string, std::string>, Reducer<int, RatFunc>> groups;
    for (auto& e : basis) groups[{to_text(e.mu), to_text(e.nu)}].add(sparse(e.phi.image));
    std::size_t r = 0;
    for (auto& [k, red] : groups) r += red.rank();
    return r;
}

// coordinates of f in the given maps (all Hom(M^nu, M^mu) for the same pair), or nothing
inline std::optional<std::vector<RatFunc>> coordinates(const HomMap& f, const std::vector<const HomMap*>& basis) {
    Reducer<int, RatFunc> red;
    for (auto* b : basis) red.add(sparse(b->image));
    auto sol = red.solve(sparse(f.image));
    if (!sol) return std::nullopt;
    sol->resize(basis.size(), RatFunc());
    return sol;
}

inline nlohmann::json to_json(const CellularElement& e) {
    return {{"lambda", to_text(e.lambda)}, {"mu", to_text(e.mu)}, {"nu", to_text(e.nu)}, {"S", e.S.str()}, {"T", e.T.str()}, {"image", e.phi.alg->to_json(e.phi.image)}};
}

}  // namespace qschur
