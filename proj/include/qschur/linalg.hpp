#pragma once

#include "ring.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qschur {

// Prime field F_p, p = 2^31 - 1.  Used to certify ranks: a specialisation
// q -> r (mod p) can only lower the rank of a matrix over Q(q).
struct Fp {
    static constexpr std::uint64_t P = 2147483647ULL;
    std::uint64_t v = 0;

    Fp() = default;
    Fp(long long x) {
        long long r = x % static_cast<long long>(P);
        v = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(P) : r);
    }
    static Fp from_int(const Int& x) {
        Int r = x % Int(P);
        if (r < 0) r += Int(P);
        Fp f;
        f.v = static_cast<std::uint64_t>(r);
        return f;
    }
    bool is_zero() const { return v == 0; }
    friend Fp operator+(Fp a, Fp b) {
        Fp r;
        r.v = (a.v + b.v) % P;
        return r;
    }
    friend Fp operator-(Fp a, Fp b) {
        Fp r;
        r.v = (a.v + P - b.v) % P;
        return r;
    }
    Fp operator-() const { return Fp() - *this; }
    friend Fp operator*(Fp a, Fp b) {
        Fp r;
        r.v = (a.v * b.v) % P;
        return r;
    }
    Fp pow(std::uint64_t e) const {
        Fp r(1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    Fp inverse() const {
        if (v == 0) throw std::domain_error("F_p division by zero");
        return pow(P - 2);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
};

inline Fp eval_mod(const Laurent& f, Fp q) {
    if (f.is_zero()) return Fp();
    Fp acc;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * q + Fp::from_int(c[i]);
    int lo = f.lo();
    return lo >= 0 ? acc * q.pow(static_cast<std::uint64_t>(lo)) : acc * q.inverse().pow(static_cast<std::uint64_t>(-lo));
}

// Throws std::domain_error when the denominator vanishes at q.
inline Fp eval_mod(const RatFunc& f, Fp q) { return eval_mod(f.num(), q) / eval_mod(f.den(), q); }

template <class F>
inline bool field_is_zero(const F& x) {
    return x.is_zero();
}

// Incremental row reduction of sparse vectors (maps key -> field element).
// Each stored row remembers its expression in terms of the vectors added so far,
// so reduce() doubles as a linear solver.
template <class K, class F>
class Reducer {
public:
    using Vec = std::map<K, F>;

    std::size_t added() const { return count_; }
    std::size_t rank() const { return rows_.size(); }

    struct Reduced {
        Vec residual;
        std::vector<F> combo;  // input - residual = sum combo[j] * (j-th added vector)
    };

    Reduced reduce(Vec v) const {
        std::vector<F> combo(count_, F(0));
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            K key = it->first;
            F f = it->second;
            const Row& row = rows_[p->second];
            for (auto& [k, x] : row.v) {
                auto jt = v.find(k);
                if (jt == v.end())
                    v.emplace(k, -(f * x));
                else {
                    jt->second = jt->second - f * x;
                    if (field_is_zero(jt->second)) v.erase(jt);
                }
            }
            for (std::size_t j = 0; j < row.combo.size(); ++j)
                if (!field_is_zero(row.combo[j])) combo[j] = combo[j] + f * row.combo[j];
            it = v.upper_bound(key);
        }
        return {std::move(v), std::move(combo)};
    }

    // Returns true when v is independent of the vectors added before.
    bool add(const Vec& v) {
        Reduced r = reduce(v);
        std::size_t idx = count_++;
        if (r.residual.empty()) return false;
        F piv = r.residual.begin()->second;
        F inv = F(1) / piv;
        Row row;
        for (auto& [k, x] : r.residual) row.v.emplace(k, x * inv);
        row.combo.assign(count_, F(0));
        for (std::size_t j = 0; j < r.combo.size(); ++j) row.combo[j] = -(r.combo[j] * inv);
        row.combo[idx] = inv;
        // keep rows reduced against the new pivot
        K pk = row.v.begin()->first;
        for (auto& other : rows_) {
            auto jt = other.v.find(pk);
            if (jt == other.v.end()) continue;
            F f = jt->second;
            for (auto& [k, x] : row.v) {
                auto kt = other.v.find(k);
                if (kt == other.v.end())
                    other.v.emplace(k, -(f * x));
                else {
                    kt->second = kt->second - f * x;
                    if (field_is_zero(kt->second)) other.v.erase(kt);
                }
            }
            other.combo.resize(count_, F(0));
            for (std::size_t j = 0; j < row.combo.size(); ++j) other.combo[j] = other.combo[j] - f * row.combo[j];
        }
        pivots_.emplace(pk, rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    // Solve sum c_j v_j = b over the added vectors; nothing if b is outside the span.
    std::optional<std::vector<F>> solve(const Vec& b) const {
        Reduced r = reduce(b);
        if (!r.residual.empty()) return std::nullopt;
        return r.combo;
    }

private:
    struct Row {
        Vec v;
        std::vector<F> combo;
    };
    std::vector<Row> rows_;
    std::map<K, std::size_t> pivots_;
    std::size_t count_ = 0;
};

template <class K, class F>
std::size_t rank_of(const std::vector<std::map<K, F>>& vecs) {
    Reducer<K, F> r;
    for (auto& v : vecs) r.add(v);
    return r.rank();
}

// Basis of the null space of the linear map sending e_j to cols[j].
template <class K, class F>
std::vector<std::vector<F>> kernel(const std::vector<std::map<K, F>>& cols) {
    Reducer<K, F> r;
    std::vector<std::vector<F>> out;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto red = r.reduce(cols[j]);
        if (red.residual.empty()) {
            std::vector<F> k(cols.size(), F(0));
            for (std::size_t i = 0; i < red.combo.size(); ++i) k[i] = -red.combo[i];
            k[j] = F(1);
            out.push_back(std::move(k));
        }
        r.add(cols[j]);
    }
    return out;
}

}  // namespace qschur
