#pragma once

#include "nlie/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nlie {

struct ArityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Monomial = std::vector<int>;

inline int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// graded lex, x1 > x2 > ... ; ascending
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

class Poly {
public:
    using Terms = std::map<Monomial, Q, GrlexLess>;

    Poly() = default;
    explicit Poly(int nv) : nv_(nv) {
        if (nv < 0) throw ArityError("negative arity");
    }

    static Poly zero(int nv) { return Poly(nv); }
    static Poly constant(int nv, const Q& c) {
        Poly p(nv);
        if (c != 0) p.terms_[Monomial(nv, 0)] = c;
        return p;
    }
    static Poly mono(const Monomial& I, const Q& c = 1) {
        for (int e : I)
            if (e < 0) throw std::invalid_argument("negative exponent");
        Poly p(static_cast<int>(I.size()));
        if (c != 0) p.terms_[I] = c;
        return p;
    }
    static Poly mono(int nv, const Monomial& I, const Q& c = 1) {
        if (static_cast<int>(I.size()) != nv) throw ArityError("multi-index arity");
        return mono(I, c);
    }
    // x_i, 1-based
    static Poly var(int nv, int i) {
        if (i < 1 || i > nv) throw std::out_of_range("variable index");
        Monomial m(nv, 0);
        m[i - 1] = 1;
        return mono(m);
    }

    int arity() const { return nv_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Q coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Q(0) : it->second;
    }

    int total_degree() const { return terms_.empty() ? -1 : degree(terms_.rbegin()->first); }

    const std::pair<const Monomial, Q>& leading() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero");
        return *terms_.rbegin();
    }

    void add_term(const Monomial& m, const Q& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly homogeneous_part(int d) const {
        Poly r(nv_);
        for (auto& [m, c] : terms_)
            if (degree(m) == d) r.terms_.emplace(m, c);
        return r;
    }

    Poly& operator+=(const Poly& q) {
        check(q);
        for (auto& [m, c] : q.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& q) {
        check(q);
        for (auto& [m, c] : q.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return scale(-1, a); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.nv_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend Poly scale(const Q& c, const Poly& p) {
        Poly r(p.nv_);
        if (c == 0) return r;
        for (auto& [m, v] : p.terms_) r.terms_.emplace(m, c * v);
        return r;
    }
    friend Poly operator*(const Q& c, const Poly& p) { return scale(c, p); }

    Poly mul_mono(const Monomial& m, const Q& c) const {
        Poly r(nv_);
        if (c == 0) return r;
        for (auto& [mm, v] : terms_) r.terms_.emplace(mono_mul(mm, m), c * v);
        return r;
    }

    // 1-based axis
    Poly deriv(int i) const {
        if (i < 1 || i > nv_) throw std::out_of_range("derivative axis out of range");
        Poly r(nv_);
        for (auto& [m, c] : terms_) {
            if (m[i - 1] == 0) continue;
            Monomial mm = m;
            mm[i - 1] -= 1;
            r.add_term(mm, c * m[i - 1]);
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nv_ == b.nv_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const;
    static Poly parse(int nv, const std::string& s);

private:
    void check(const Poly& q) const {
        if (q.nv_ != nv_) throw ArityError("polynomial arity mismatch");
    }

    int nv_ = 0;
    Terms terms_;
};

inline Poly add(const Poly& p, const Poly& q) { return p + q; }
inline Poly mul(const Poly& p, const Poly& q) { return p * q; }
inline Poly deriv(const Poly& p, int i) { return p.deriv(i); }
inline Poly mono(const Monomial& I) { return Poly::mono(I); }

// terms in descending graded-lex order: "c * x1^a1*x2^a2 + ..."
inline std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out += " + ";
        first = false;
        out += nlie::to_string(it->second);
        std::string vars;
        for (int i = 0; i < nv_; ++i) {
            if (it->first[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1) + "^" + std::to_string(it->first[i]);
        }
        if (!vars.empty()) out += " * " + vars;
    }
    return out;
}

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// split on top-level '+' and binary '-' (a '-' directly after '/', '*', '^' or at start is unary)
inline std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    char prev = 0;
    for (char ch : s) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
            continue;
        }
        bool binary = prev != 0 && prev != '*' && prev != '/' && prev != '^' && prev != '+' && prev != '-';
        if (ch == '+' && binary) {
            parts.push_back(cur);
            cur.clear();
        } else if (ch == '-' && binary) {
            parts.push_back(cur);
            cur = "-";
        } else {
            cur += ch;
        }
        prev = ch;
    }
    parts.push_back(cur);
    return parts;
}

} // namespace detail

// accepts the serialized form plus lenient variants: "x1", "-x2^3", "3/2*x1*x3", "x1*x1"
inline Poly Poly::parse(int nv, const std::string& text) {
    Poly p(nv);
    std::string s = detail::strip(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    for (std::string term : detail::split_terms(s)) {
        term = detail::strip(term);
        if (term.empty()) throw std::invalid_argument("empty term in: " + text);
        Q coef = 1;
        if (term[0] == '-') {
            coef = -1;
            term = detail::strip(term.substr(1));
        }
        Monomial m(nv, 0);
        std::stringstream ss(term);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            factor = detail::strip(factor);
            if (factor.empty()) throw std::invalid_argument("empty factor in: " + text);
            if (factor[0] == 'x') {
                std::size_t caret = factor.find('^');
                int idx = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
                int e = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
                if (idx < 1 || idx > nv) throw ArityError("variable x" + std::to_string(idx) + " out of range");
                if (e < 0) throw std::invalid_argument("negative exponent");
                m[idx - 1] += e;
            } else {
                coef *= parse_rational(factor);
            }
        }
        p.add_term(m, coef);
    }
    return p;
}

// exact division; throws if q does not divide p
inline Poly divide_exact(Poly p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    const auto& [lm, lc] = q.leading();
    Poly quot(p.arity());
    while (!p.is_zero()) {
        const auto& [pm, pc] = p.leading();
        if (!mono_divides(lm, pm)) throw std::domain_error("inexact polynomial division");
        Monomial m(pm.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = pm[i] - lm[i];
        Q c = pc / lc;
        quot.add_term(m, c);
        p -= q.mul_mono(m, c);
    }
    return quot;
}

using PolyMatrix = std::vector<std::vector<Poly>>;

inline void check_square(const PolyMatrix& M) {
    for (auto& row : M)
        if (row.size() != M.size()) throw std::invalid_argument("non-square matrix");
}

inline Poly det_cofactor(const PolyMatrix& M, int nv) {
    check_square(M);
    std::size_t n = M.size();
    if (n == 0) return Poly::constant(nv, 1);
    if (n == 1) return M[0][0];
    if (n == 2) return M[0][0] * M[1][1] - M[0][1] * M[1][0];
    Poly r(nv);
    for (std::size_t c = 0; c < n; ++c) {
        if (M[0][c].is_zero()) continue;
        PolyMatrix minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(M[i][j]);
            minor.push_back(std::move(row));
        }
        Poly t = M[0][c] * det_cofactor(minor, nv);
        if (c % 2) r -= t;
        else r += t;
    }
    return r;
}

// fraction-free elimination with row pivoting
inline Poly det_bareiss(PolyMatrix M, int nv) {
    check_square(M);
    std::size_t n = M.size();
    if (n == 0) return Poly::constant(nv, 1);
    int sign = 1;
    Poly prev = Poly::constant(nv, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && M[r][k].is_zero()) ++r;
            if (r == n) return Poly::zero(nv);
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
        prev = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

inline Poly det(const PolyMatrix& M, int nv) {
    return M.size() <= 4 ? det_cofactor(M, nv) : det_bareiss(M, nv);
}

inline Poly det(const PolyMatrix& M) {
    if (M.empty()) throw std::invalid_argument("arity of empty determinant is unknown");
    return det(M, M[0].empty() ? 0 : M[0][0].arity());
}

} // namespace nlie
