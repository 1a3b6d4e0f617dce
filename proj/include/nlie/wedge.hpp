#pragma once

#include "nlie/brackets.hpp"
#include "nlie/cartan.hpp"
#include "nlie/linalg.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlie {

struct ChainLess {
    bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
        GrlexLess lt;
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (lt(a[i], b[i])) return true;
            if (lt(b[i], a[i])) return false;
        }
        return a.size() < b.size();
    }
};

// rational combination of normal-form chains f_1 ^ ... ^ f_{n-1}, factors strictly increasing
class WedgeElement {
public:
    using Chains = std::map<std::vector<Monomial>, Q, ChainLess>;

    WedgeElement() = default;
    explicit WedgeElement(int n) : n_(n) {}

    int n() const { return n_; }
    const Chains& chains() const { return chains_; }
    bool is_zero() const { return chains_.empty(); }

    // sorts with sign; repeated factors vanish
    void add_chain(std::vector<Monomial> f, Q c) {
        if (static_cast<int>(f.size()) != n_ - 1) throw std::invalid_argument("wrong chain length");
        if (c == 0) return;
        GrlexLess lt;
        for (std::size_t i = 1; i < f.size(); ++i)
            for (std::size_t j = i; j > 0 && !lt(f[j - 1], f[j]); --j) {
                if (f[j - 1] == f[j]) return;
                std::swap(f[j - 1], f[j]);
                c = -c;
            }
        auto [it, fresh] = chains_.try_emplace(std::move(f), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) chains_.erase(it);
        }
    }

    WedgeElement& operator+=(const WedgeElement& o) {
        check(o);
        for (auto& [f, c] : o.chains_) add_chain(f, c);
        return *this;
    }
    WedgeElement& operator-=(const WedgeElement& o) {
        check(o);
        for (auto& [f, c] : o.chains_) add_chain(f, -c);
        return *this;
    }
    friend WedgeElement operator+(WedgeElement a, const WedgeElement& b) { return a += b; }
    friend WedgeElement operator-(WedgeElement a, const WedgeElement& b) { return a -= b; }
    friend WedgeElement operator*(const Q& c, const WedgeElement& a) {
        WedgeElement r(a.n_);
        if (c == 0) return r;
        for (auto& [f, v] : a.chains_) r.chains_.emplace(f, c * v);
        return r;
    }
    friend bool operator==(const WedgeElement& a, const WedgeElement& b) {
        return a.n_ == b.n_ && a.chains_ == b.chains_;
    }

    std::string to_string() const {
        if (chains_.empty()) return "0";
        std::string out;
        for (auto& [f, c] : chains_) {
            if (!out.empty()) out += " + ";
            out += nlie::to_string(c) + " *";
            for (std::size_t i = 0; i < f.size(); ++i)
                out += (i ? " ^ " : " ") + Poly::mono(f[i]).to_string();
        }
        return out;
    }

private:
    void check(const WedgeElement& o) const {
        if (o.n_ != n_) throw ArityError("wedge arity mismatch");
    }
    int n_ = 0;
    Chains chains_;
};

// multilinear expansion of p_1 ^ ... ^ p_{n-1}
inline WedgeElement wedge_normalize(const std::vector<Poly>& raw, const Q& coef = 1) {
    int n = static_cast<int>(raw.size()) + 1;
    require_arity(raw, n - 1);
    WedgeElement out(n);
    std::vector<Monomial> cur;
    std::function<void(std::size_t, Q)> rec = [&](std::size_t i, Q c) {
        if (i == raw.size()) {
            out.add_chain(cur, c);
            return;
        }
        for (auto& [m, v] : raw[i].terms()) {
            cur.push_back(m);
            rec(i + 1, c * v);
            cur.pop_back();
        }
    };
    rec(0, coef);
    return out;
}

inline std::vector<Poly> chain_polys(const std::vector<Monomial>& f) {
    std::vector<Poly> out;
    for (auto& m : f) out.push_back(Poly::mono(m));
    return out;
}

inline WedgeElement lie_bracket(const WedgeElement& a, const WedgeElement& b) {
    if (a.n() != b.n()) throw ArityError("wedge arity mismatch");
    WedgeElement out(a.n());
    for (auto& [fa, ca] : a.chains()) {
        std::vector<Poly> as = chain_polys(fa);
        for (auto& [fb, cb] : b.chains()) {
            std::vector<Poly> bs = chain_polys(fb);
            for (std::size_t i = 0; i < bs.size(); ++i) {
                std::vector<Poly> v = bs;
                v[i] = adjoint_action(as, bs[i]);
                if (v[i].is_zero()) continue;
                out += wedge_normalize(v, ca * cb);
            }
        }
    }
    return out;
}

// coefficient of D_i is (-1)^{n+1-i} times the minor omitting the D_i row
inline VectorField ad_field(const std::vector<Poly>& fs) {
    int n = static_cast<int>(fs.size()) + 1;
    require_arity(fs, n - 1);
    PolyMatrix rows = w_matrix(fs);
    // w_matrix builds n-1 derivative rows for n-1 arguments; add the missing last one
    std::vector<Poly> last;
    for (auto& f : fs) last.push_back(f.deriv(n - 1));
    rows.push_back(std::move(last));
    VectorField X(n - 1);
    for (int i = 1; i < n; ++i) {
        PolyMatrix M;
        for (int r = 0; r < n; ++r)
            if (r != i) M.push_back(rows[r]);
        Poly d = det(M, n - 1);
        X[i - 1] = ((n + 1 - i) % 2 == 0) ? d : -d;
    }
    return X;
}

inline VectorField ad_to_field(const WedgeElement& a) {
    VectorField X(a.n() - 1);
    for (auto& [f, c] : a.chains()) X += c * ad_field(chain_polys(f));
    return X;
}

struct TailTerm {
    int sign;
    VectorField first;   // acts second
    VectorField second;  // acts first
};

struct UGenerator {
    VectorField head;
    std::vector<TailTerm> tail;

    friend bool operator==(const UGenerator& a, const UGenerator& b) {
        if (a.head != b.head || a.tail.size() != b.tail.size()) return false;
        for (std::size_t i = 0; i < a.tail.size(); ++i)
            if (a.tail[i].sign != b.tail[i].sign || a.tail[i].first != b.tail[i].first ||
                a.tail[i].second != b.tail[i].second)
                return false;
        return true;
    }
};

inline UGenerator abstract_qgen(const std::vector<Poly>& fs) {
    int m = static_cast<int>(fs.size());
    if (m < 4 || m % 2) throw std::invalid_argument("need 2n-2 arguments with n >= 3");
    int n = m / 2 + 1;
    require_arity(fs, n - 1);
    std::vector<Poly> head_args{bracket_w({fs.begin(), fs.begin() + n})};
    head_args.insert(head_args.end(), fs.begin() + n, fs.end());
    UGenerator g{ad_field(head_args), {}};
    for (int i = 1; i <= n; ++i) {
        std::vector<Poly> a, b{fs[i - 1]};
        for (int t = 1; t <= n; ++t)
            if (t != i) a.push_back(fs[t - 1]);
        b.insert(b.end(), fs.begin() + n, fs.end());
        g.tail.push_back({(i + n) % 2 ? -1 : 1, ad_field(a), ad_field(b)});
    }
    return g;
}

inline UGenerator abstract_qgen(const std::vector<Monomial>& fs) { return abstract_qgen(chain_polys(fs)); }

// generator acting on the adjoint module
inline Poly density_apply(const UGenerator& g, const Poly& h) {
    Poly r = density_action(g.head, h);
    for (auto& t : g.tail) {
        Poly u = density_action(t.first, density_action(t.second, h));
        r -= scale(t.sign, u);
    }
    return r;
}

// all exponent vectors of nv variables with total degree <= maxd, graded-lex ascending
inline std::vector<Monomial> monomials_up_to(int nv, int maxd) {
    std::vector<Monomial> out;
    Monomial cur(nv, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nv - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
    };
    for (int d = 0; d <= maxd; ++d) {
        if (nv == 0) {
            if (d == 0) out.push_back(cur);
            continue;
        }
        rec(0, d);
    }
    std::sort(out.begin(), out.end(), GrlexLess());
    return out;
}

struct KernelReport {
    std::size_t chains = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
};

// injectivity of ad on chains with factor degrees <= max_degree
inline KernelReport ker_ad_injectivity(int n, int max_degree) {
    if (n < 3 || max_degree < 1) throw std::invalid_argument("need n >= 3 and max_degree >= 1");
    auto ms = monomials_up_to(n - 1, max_degree);
    std::vector<std::vector<Monomial>> chains;
    std::vector<Monomial> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == n - 1) {
            chains.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < ms.size(); ++i) {
            cur.push_back(ms[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    // coordinates: (D index, monomial)
    std::map<std::pair<int, Monomial>, std::size_t> coord;
    std::vector<std::vector<std::pair<std::size_t, Q>>> cols;
    for (auto& f : chains) {
        VectorField X = ad_field(chain_polys(f));
        std::vector<std::pair<std::size_t, Q>> col;
        for (int i = 0; i < n - 1; ++i)
            for (auto& [m, c] : X[i].terms()) {
                auto it = coord.try_emplace({i, m}, coord.size()).first;
                col.push_back({it->second, c});
            }
        cols.push_back(std::move(col));
    }
    Span span(coord.size());
    for (auto& col : cols) {
        QVec v(coord.size(), Q(0));
        for (auto& [i, c] : col) v[i] = c;
        span.insert(v);
    }
    return {chains.size(), span.rank(), chains.size() - span.rank()};
}

} // namespace nlie
