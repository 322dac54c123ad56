#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Element of Z[q, q^-1].  Dense storage: c_[k] is the coefficient of q^(lo_+k).
// Both ends trimmed, so the zero polynomial is the empty vector.
class Laurent {
public:
    Laurent() = default;
    Laurent(long long v) {
        if (v != 0) c_.push_back(Int(v));
    }
    Laurent(const Int& v) {
        if (v != 0) c_.push_back(v);
    }

    static Laurent q(int k = 1) {
        Laurent r;
        r.lo_ = k;
        r.c_.push_back(1);
        return r;
    }
    static Laurent term(const Int& c, int k) {
        Laurent r;
        if (c != 0) {
            r.lo_ = k;
            r.c_.push_back(c);
        }
        return r;
    }
    static Laurent from_coeffs(int lo, std::vector<Int> c) {
        Laurent r;
        r.lo_ = lo;
        r.c_ = std::move(c);
        r.trim();
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0] == 1; }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && lo_ == 0); }
    // single term with coefficient +-1
    bool is_unit() const { return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int k) const {
        if (c_.empty() || k < lo_ || k > hi()) return 0;
        return c_[k - lo_];
    }
    const Int& lead() const { return c_.back(); }
    const Int& trail() const { return c_.front(); }
    Int constant_value() const { return coeff(0); }

    std::map<int, Int> terms() const {
        std::map<int, Int> r;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) r[lo_ + static_cast<int>(i)] = c_[i];
        return r;
    }

    Laurent& operator+=(const Laurent& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        int nlo = std::min(lo_, o.lo_), nhi = std::max(hi(), o.hi());
        if (nlo < lo_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - nlo), Int(0));
            lo_ = nlo;
        }
        if (static_cast<int>(c_.size()) < nhi - lo_ + 1) c_.resize(nhi - lo_ + 1);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[o.lo_ - lo_ + i] += o.c_[i];
        trim();
        return *this;
    }
    Laurent& operator-=(const Laurent& o) { return *this += -o; }
    Laurent operator-() const {
        Laurent r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        if (a.is_zero() || b.is_zero()) return r;
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent& scale(const Int& k) {
        if (k == 0) {
            c_.clear();
            lo_ = 0;
            return *this;
        }
        for (auto& x : c_) x *= k;
        return *this;
    }
    Laurent shifted(int k) const {
        Laurent r = *this;
        if (!r.is_zero()) r.lo_ += k;
        return r;
    }
    Laurent pow(unsigned n) const {
        Laurent r(1), b = *this;
        while (n) {
            if (n & 1) r *= b;
            n >>= 1;
            if (n) b *= b;
        }
        return r;
    }
    // q -> q^-1
    Laurent bar() const {
        Laurent r;
        if (is_zero()) return r;
        r.lo_ = -hi();
        r.c_.assign(c_.rbegin(), c_.rend());
        return r;
    }
    Int content() const {
        Int g = 0;
        for (auto& x : c_) g = int_gcd(g, x);
        return g;
    }
    Laurent divided_by(const Int& k) const {
        Laurent r = *this;
        for (auto& x : r.c_) {
            if (x % k != 0) throw std::logic_error("inexact integer division");
            x /= k;
        }
        return r;
    }

    // Exact quotient in Z[q,q^-1], or nothing if b does not divide a.
    static std::optional<Laurent> div_exact(const Laurent& a, const Laurent& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (a.is_zero()) return Laurent();
        if (a.c_.size() < b.c_.size()) return std::nullopt;
        std::vector<Int> rem = a.c_;
        std::size_t n = a.c_.size() - b.c_.size() + 1;
        std::vector<Int> quo(n);
        const Int& bl = b.c_.back();
        for (std::size_t k = n; k-- > 0;) {
            Int& top = rem[k + b.c_.size() - 1];
            if (top == 0) continue;
            if (top % bl != 0) return std::nullopt;
            Int f = top / bl;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
            quo[k] = std::move(f);
        }
        for (auto& x : rem)
            if (x != 0) return std::nullopt;
        return from_coeffs(a.lo_ - b.lo_, std::move(quo));
    }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    // arbitrary total order, for use as map keys
    friend bool operator<(const Laurent& a, const Laurent& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
        return a.c_ < b.c_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
            const Int& x = c_[i];
            if (x == 0) continue;
            int e = lo_ + i;
            Int ax = x < 0 ? Int(-x) : x;
            if (first)
                out += x < 0 ? "-" : "";
            else
                out += x < 0 ? " - " : " + ";
            first = false;
            if (e == 0) {
                out += ax.str();
                continue;
            }
            if (ax != 1) out += ax.str();
            out += "q";
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    // Inverse of str(); also accepts '*' between coefficient and q.
    static Laurent parse(const std::string& s) {
        std::string t;
        for (char ch : s)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.empty()) throw std::invalid_argument("empty Laurent polynomial");
        Laurent r;
        std::size_t i = 0;
        while (i < t.size()) {
            int sign = 1;
            if (t[i] == '+' || t[i] == '-') {
                sign = t[i] == '-' ? -1 : 1;
                ++i;
            }
            std::size_t j = i;
            while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
            bool had_digits = j > i;
            Int c = had_digits ? Int(t.substr(i, j - i)) : Int(1);
            i = j;
            if (had_digits && i < t.size() && t[i] == '*') ++i;
            int e = 0;
            bool had_q = false;
            if (i < t.size() && t[i] == 'q') {
                had_q = true;
                ++i;
                e = 1;
                if (i < t.size() && t[i] == '^') {
                    ++i;
                    std::size_t k = i;
                    if (k < t.size() && t[k] == '-') ++k;
                    std::size_t st = k;
                    while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
                    if (k == st) throw std::invalid_argument("bad exponent in '" + s + "'");
                    e = std::stoi(t.substr(i, k - i));
                    i = k;
                }
            }
            if (!had_digits && !had_q) throw std::invalid_argument("malformed Laurent polynomial '" + s + "'");
            if (i < t.size() && t[i] != '+' && t[i] != '-')
                throw std::invalid_argument("unexpected '" + std::string(1, t[i]) + "' in '" + s + "'");
            r += term(sign * c, e);
        }
        return r;
    }

private:
    void trim() {
        std::size_t a = 0;
        while (a < c_.size() && c_[a] == 0) ++a;
        if (a == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        std::size_t b = c_.size();
        while (c_[b - 1] == 0) --b;
        c_.resize(b);
        if (a) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(a));
            lo_ += static_cast<int>(a);
        }
    }

    int lo_ = 0;
    std::vector<Int> c_;
};

using IntLaurent = Laurent;

inline std::ostream& operator<<(std::ostream& os, const Laurent& f) { return os << f.str(); }

namespace detail {

// polynomial remainder helpers on coefficient vectors (index = degree)
inline std::vector<Int> prem(std::vector<Int> a, const std::vector<Int>& b) {
    // pseudo-remainder of a by b
    const Int& lb = b.back();
    while (a.size() >= b.size()) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        Int la = a.back();
        std::size_t sh = a.size() - b.size();
        for (auto& x : a) x *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[sh + j] -= la * b[j];
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline std::vector<Int> primitive(std::vector<Int> a) {
    Int g = 0;
    for (auto& x : a) g = int_gcd(g, x);
    if (g > 1)
        for (auto& x : a) x /= g;
    if (!a.empty() && a.back() < 0)
        for (auto& x : a) x = -x;
    return a;
}

}  // namespace detail

// gcd in Z[q,q^-1], normalised to have no negative powers, trailing term q^0
// and positive leading coefficient.
inline Laurent gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero()) return Laurent();
    if (a.is_zero()) return gcd(b, b);
    if (b.is_zero()) return gcd(a, a);
    Int cg = int_gcd(a.content(), b.content());
    std::vector<Int> x = detail::primitive(a.coeffs()), y = detail::primitive(b.coeffs());
    if (x.size() < y.size()) std::swap(x, y);
    while (y.size() > 1) {
        auto r = detail::prem(x, y);
        x = std::move(y);
        y = detail::primitive(std::move(r));
        if (y.empty()) break;
    }
    std::vector<Int> g;
    if (y.empty())
        g = detail::primitive(x);
    else
        g = {1};  // constant remainder: coprime up to content
    for (auto& v : g) v *= cg;
    return Laurent::from_coeffs(0, std::move(g));
}

// Fraction field element num/den; den has no negative powers, nonzero constant
// term and positive leading coefficient, and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long long v) : num_(v), den_(1) {}
    RatFunc(const Int& v) : num_(v), den_(1) {}
    RatFunc(Laurent n) : num_(std::move(n)), den_(1) {}
    RatFunc(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        return RatFunc(den_, num_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Laurent(1);
            return;
        }
        int s = den_.lo();
        num_ = num_.shifted(-s);
        den_ = den_.shifted(-s);
        if (!den_.is_constant() || den_.lead() != 1) {
            Laurent g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = *Laurent::div_exact(num_, g);
                den_ = *Laurent::div_exact(den_, g);
            }
            int t = den_.lo();
            num_ = num_.shifted(-t);
            den_ = den_.shifted(-t);
        }
        if (den_.lead() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    Laurent num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

// Procedure: q-integer [n] = (q^n - q^-n)/(q - q^-1)
inline Laurent q_int(int n) {
    if (n == 0) return Laurent();
    if (n < 0) return -q_int(-n);
    Laurent r;
    for (int k = -(n - 1); k <= n - 1; k += 2) r += Laurent::q(k);
    return r;
}

inline Laurent q_factorial(int n) {
    Laurent r(1);
    for (int k = 2; k <= n; ++k) r *= q_int(k);
    return r;
}

// [n choose a] for any integer n and a >= 0, via the product formula.
inline Laurent q_binom(int n, int a) {
    if (a < 0) throw std::invalid_argument("q_binom: negative lower index");
    Laurent num(1);
    for (int k = 0; k < a; ++k) num *= q_int(n - k);
    auto r = Laurent::div_exact(num, q_factorial(a));
    if (!r) throw std::logic_error("q_binom: inexact division");
    return *r;
}

// Laurent polynomial in X_1..X_m with coefficients in Z[q,q^-1].
class MultiLaurent {
public:
    using Exps = std::vector<int>;
    using Terms = std::map<Exps, Laurent>;

    MultiLaurent() = default;
    explicit MultiLaurent(int m) : m_(m) {}
    MultiLaurent(int m, const Laurent& c) : m_(m) {
        if (!c.is_zero()) t_[Exps(m, 0)] = c;
    }

    static MultiLaurent monomial(const Exps& e, const Laurent& c = Laurent(1)) {
        MultiLaurent r(static_cast<int>(e.size()));
        if (!c.is_zero()) r.t_[e] = c;
        return r;
    }
    // X_i, 1-based
    static MultiLaurent var(int m, int i, int power = 1) {
        Exps e(m, 0);
        e.at(i - 1) = power;
        return monomial(e);
    }

    int nvars() const { return m_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    void add_term(const Exps& e, const Laurent& c) {
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
    void add_term(Exps&& e, Laurent&& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(std::move(e), std::move(c));
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }

    MultiLaurent& operator+=(const MultiLaurent& o) {
        check(o);
        for (auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    MultiLaurent& operator-=(const MultiLaurent& o) {
        check(o);
        for (auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    MultiLaurent operator-() const {
        MultiLaurent r = *this;
        for (auto& kv : r.t_) kv.second = -kv.second;
        return r;
    }
    friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
    friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
        a.check(b);
        MultiLaurent r(a.m_);
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) {
                Exps e(ea);
                for (int i = 0; i < a.m_; ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    friend MultiLaurent operator*(const Laurent& k, const MultiLaurent& a) {
        MultiLaurent r(a.m_);
        if (k.is_zero()) return r;
        for (auto& [e, c] : a.t_) r.t_.emplace(e, k * c);
        return r;
    }
    MultiLaurent& operator*=(const MultiLaurent& o) { return *this = *this * o; }
    // multiply by the monomial X^e
    MultiLaurent times_monomial(const Exps& e) const {
        MultiLaurent r(m_);
        for (auto& [f, c] : t_) {
            Exps g(f);
            for (int i = 0; i < m_; ++i) g[i] += e[i];
            r.t_.emplace(std::move(g), c);
        }
        return r;
    }

    // swap X_i and X_j (1-based)
    MultiLaurent swapped(int i, int j) const {
        MultiLaurent r(m_);
        for (auto& [e, c] : t_) {
            Exps g(e);
            std::swap(g[i - 1], g[j - 1]);
            r.t_.emplace(std::move(g), c);
        }
        return r;
    }
    bool symmetric_in(int i, int j) const {
        for (auto& [e, c] : t_) {
            if (e[i - 1] == e[j - 1]) continue;
            Exps g(e);
            std::swap(g[i - 1], g[j - 1]);
            auto it = t_.find(g);
            if (it == t_.end() || it->second != c) return false;
        }
        return true;
    }
    // symmetric in variables first..last (1-based, inclusive)
    bool symmetric_on(int first, int last) const {
        for (int i = first; i < last; ++i)
            if (!symmetric_in(i, i + 1)) return false;
        return true;
    }

    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) { return a.m_ == b.m_ && a.t_ == b.t_; }
    friend bool operator!=(const MultiLaurent& a, const MultiLaurent& b) { return !(a == b); }

    // lexicographically largest exponent vector
    Exps leading_exponent() const {
        if (t_.empty()) throw std::domain_error("leading term of zero");
        return t_.rbegin()->first;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (int i = 0; i < m_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "X" + std::to_string(i + 1);
                if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            }
            std::string cs = c.str();
            bool simple = c.size() == 1;
            if (!first) out += " + ";
            first = false;
            if (mono.empty())
                out += simple ? cs : "(" + cs + ")";
            else if (c.is_one())
                out += mono;
            else
                out += (simple ? cs : "(" + cs + ")") + "*" + mono;
        }
        return out;
    }

private:
    void check(const MultiLaurent& o) const {
        if (m_ != o.m_) throw std::invalid_argument("variable count mismatch");
    }

    int m_ = 0;
    Terms t_;
};

inline std::ostream& operator<<(std::ostream& os, const MultiLaurent& f) { return os << f.str(); }

// Substitute X_i -> assignment[i] (1-based keys); unassigned variables stay.
// Results live in `target_vars` variables (defaults to f's count).
inline MultiLaurent poly_substitute(const MultiLaurent& f, const std::map<int, MultiLaurent>& assignment, int target_vars = -1) {
    int m = f.nvars();
    int tm = target_vars < 0 ? m : target_vars;
    for (auto& [i, v] : assignment)
        if (i < 1 || i > m || v.nvars() != tm) throw std::invalid_argument("bad substitution");
    auto value_power = [&](int i, int e) -> MultiLaurent {
        auto it = assignment.find(i);
        MultiLaurent base = it != assignment.end() ? it->second : MultiLaurent::var(tm, i);
        if (e >= 0) {
            MultiLaurent r(tm, Laurent(1));
            for (int k = 0; k < e; ++k) r *= base;
            return r;
        }
        if (base.size() != 1 || !base.terms().begin()->second.is_unit()) throw std::domain_error("non-unit substitution");
        const auto& [be, bc] = *base.terms().begin();
        MultiLaurent::Exps ne(be);
        for (auto& x : ne) x = -x;
        // (c q^k)^-1 = c q^-k for c = +-1
        Laurent inv = Laurent::term(bc.lead(), -bc.lo());
        MultiLaurent r(tm, Laurent(1));
        MultiLaurent invm = MultiLaurent::monomial(ne, inv);
        for (int k = 0; k < -e; ++k) r *= invm;
        return r;
    };
    MultiLaurent out(tm);
    for (auto& [e, c] : f.terms()) {
        MultiLaurent term(tm, c);
        for (int i = 0; i < m; ++i)
            if (e[i] != 0) term *= value_power(i + 1, e[i]);
        out += term;
    }
    return out;
}

}  // namespace qschur
