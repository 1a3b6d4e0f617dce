#pragma once

#include "nlie/poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace nlie {

inline void require_arity(const std::vector<Poly>& fs, int nv) {
    for (auto& f : fs)
        if (f.arity() != nv) throw ArityError("bracket argument arity");
}

// rows: (f_1..f_n), (D_1 f_1..D_1 f_n), ...
inline PolyMatrix w_matrix(const std::vector<Poly>& fs) {
    int n = static_cast<int>(fs.size());
    PolyMatrix M;
    M.push_back(fs);
    for (int i = 1; i < n; ++i) {
        std::vector<Poly> row;
        for (auto& f : fs) row.push_back(f.deriv(i));
        M.push_back(std::move(row));
    }
    return M;
}

inline Poly bracket_w(const std::vector<Poly>& fs) {
    int n = static_cast<int>(fs.size());
    if (n < 2) throw std::invalid_argument("bracket needs at least two arguments");
    require_arity(fs, n - 1);
    return det(w_matrix(fs), n - 1);
}

// sign of the first cofactor flipped; only used to check that the residual detects a broken bracket
inline Poly bracket_w_corrupted(const std::vector<Poly>& fs) {
    int n = static_cast<int>(fs.size());
    require_arity(fs, n - 1);
    PolyMatrix M = w_matrix(fs);
    PolyMatrix minor;
    for (int i = 1; i < n; ++i) minor.emplace_back(M[i].begin() + 1, M[i].end());
    Poly first = M[0][0] * det(minor, n - 1);
    return det(M, n - 1) - first - first;
}

inline Poly bracket_s(const std::vector<Poly>& fs) {
    int n = static_cast<int>(fs.size());
    require_arity(fs, n);
    PolyMatrix M(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i].push_back(fs[j].deriv(i + 1));
    return det(M, n);
}

inline Poly adjoint_action(const std::vector<Poly>& fs, const Poly& h) {
    std::vector<Poly> all = fs;
    all.push_back(h);
    return bracket_w(all);
}

// vectors in F^{n+1}
struct CVector {
    std::vector<Q> coords;

    CVector() = default;
    explicit CVector(std::size_t len) : coords(len, Q(0)) {}
    explicit CVector(std::vector<Q> c) : coords(std::move(c)) {}
    static CVector basis(std::size_t len, std::size_t i) {
        CVector v(len);
        v.coords.at(i - 1) = 1;
        return v;
    }
    std::size_t size() const { return coords.size(); }
    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](const Q& q) { return q == 0; });
    }
    CVector& operator+=(const CVector& o) {
        if (o.size() != size()) throw ArityError("vector length mismatch");
        for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    CVector& operator-=(const CVector& o) {
        if (o.size() != size()) throw ArityError("vector length mismatch");
        for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    friend CVector operator+(CVector a, const CVector& b) { return a += b; }
    friend CVector operator-(CVector a, const CVector& b) { return a -= b; }
    friend bool operator==(const CVector& a, const CVector& b) { return a.coords == b.coords; }
};

namespace detail {
inline Q det_q(std::vector<std::vector<Q>> M) {
    std::size_t n = M.size();
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(M[p], M[c]);
            d = -d;
        }
        d *= M[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M[i][c] == 0) continue;
            Q f = M[i][c] / M[c][c];
            for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
        }
    }
    return d;
}
} // namespace detail

// component i is (-1)^{n+i-1} times the minor without column i
inline CVector bracket_vp(const std::vector<CVector>& vs) {
    std::size_t n = vs.size();
    for (auto& v : vs)
        if (v.size() != n + 1) throw ArityError("vector-product argument length");
    CVector r(n + 1);
    for (std::size_t i = 1; i <= n + 1; ++i) {
        std::vector<std::vector<Q>> M(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 1; c <= n + 1; ++c)
                if (c != i) M[a].push_back(vs[a].coords[c - 1]);
        Q d = detail::det_q(std::move(M));
        r.coords[i - 1] = ((n + i - 1) % 2 == 0) ? d : Q(-d);
    }
    return r;
}

// one series in copy `copy` (1-based), single variable
struct TaggedSeries {
    int copy;
    Poly series;
};

// element of the direct sum of n-1 copies of F[[x]]
struct SWElement {
    std::vector<Poly> parts;

    SWElement() = default;
    explicit SWElement(int copies) : parts(copies, Poly(1)) {}
    static SWElement of(int copies, const TaggedSeries& t) {
        if (t.copy < 1 || t.copy > copies) throw std::out_of_range("copy tag out of range");
        SWElement e(copies);
        e.parts[t.copy - 1] = t.series;
        return e;
    }
    int copies() const { return static_cast<int>(parts.size()); }
    bool is_zero() const {
        return std::all_of(parts.begin(), parts.end(), [](const Poly& p) { return p.is_zero(); });
    }
    SWElement& operator+=(const SWElement& o) {
        if (o.copies() != copies()) throw ArityError("copy count mismatch");
        for (int i = 0; i < copies(); ++i) parts[i] += o.parts[i];
        return *this;
    }
    SWElement& operator-=(const SWElement& o) {
        if (o.copies() != copies()) throw ArityError("copy count mismatch");
        for (int i = 0; i < copies(); ++i) parts[i] -= o.parts[i];
        return *this;
    }
    friend SWElement operator+(SWElement a, const SWElement& b) { return a += b; }
    friend SWElement operator-(SWElement a, const SWElement& b) { return a -= b; }
    friend bool operator==(const SWElement& a, const SWElement& b) { return a.parts == b.parts; }
};

inline int permutation_sign(std::vector<int> p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            s = -s;
        }
    return s;
}

// returns copy 0 when the bracket vanishes
inline TaggedSeries bracket_sw(const std::vector<TaggedSeries>& fs) {
    int n = static_cast<int>(fs.size());
    for (auto& f : fs) {
        if (f.copy < 1 || f.copy > n - 1) throw std::out_of_range("copy tag out of range");
        if (f.series.arity() != 1) throw ArityError("series must be univariate");
    }
    std::vector<int> count(n, 0);
    for (auto& f : fs) ++count[f.copy];
    int k = 0;
    for (int t = 1; t < n; ++t) {
        if (count[t] == 0 || count[t] > 2) return {0, Poly(1)};
        if (count[t] == 2) k = t;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return fs[a].copy < fs[b].copy; });
    int sign = permutation_sign(perm);
    std::vector<Poly> g;
    for (int i : perm) g.push_back(fs[i].series);
    // slots k, k+1 hold the repeated copy (1-based), i.e. indices k-1, k
    Poly core = g[k - 1].deriv(1) * g[k] - g[k].deriv(1) * g[k - 1];
    for (int i = 0; i < n; ++i)
        if (i != k - 1 && i != k) core *= g[i];
    if ((k + n) % 2) sign = -sign;
    return {k, scale(sign, core)};
}

// multilinear extension over the direct-sum decomposition
inline SWElement bracket_sw(const std::vector<SWElement>& es) {
    int n = static_cast<int>(es.size());
    int copies = n - 1;
    for (auto& e : es)
        if (e.copies() != copies) throw ArityError("copy count mismatch");
    SWElement out(copies);
    std::vector<int> count(n, 0);
    std::vector<TaggedSeries> pick(n, TaggedSeries{0, Poly(1)});
    std::function<void(int, int)> rec = [&](int pos, int doubles) {
        if (pos == n) {
            TaggedSeries r = bracket_sw(pick);
            if (r.copy) out.parts[r.copy - 1] += r.series;
            return;
        }
        for (int t = 1; t <= copies; ++t) {
            const Poly& p = es[pos].parts[t - 1];
            if (p.is_zero() || count[t] == 2) continue;
            if (count[t] == 1 && doubles == 1) continue;
            ++count[t];
            pick[pos] = {t, p};
            rec(pos + 1, doubles + (count[t] == 2));
            --count[t];
        }
    };
    rec(0, 0);
    return out;
}

// [a, [b_1..b_n]] - sum_i [b_1, .., [a, b_i], .., b_n], with a = (a_1..a_{n-1})
template <class T, class Bracket>
T filippov_residual(const Bracket& br, const std::vector<T>& as, const std::vector<T>& bs) {
    if (as.size() + 1 != bs.size()) throw std::invalid_argument("need n-1 and n arguments");
    auto with = [&](const T& last) {
        std::vector<T> v = as;
        v.push_back(last);
        return br(v);
    };
    T r = with(br(bs));
    for (std::size_t i = 0; i < bs.size(); ++i) {
        std::vector<T> v = bs;
        v[i] = with(bs[i]);
        r -= br(v);
    }
    return r;
}

} // namespace nlie
