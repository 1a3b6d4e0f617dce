#pragma once

#include "nlie/cartan.hpp"
#include "nlie/glrep.hpp"
#include "nlie/linalg.hpp"
#include "nlie/wedge.hpp"

#include <deque>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nlie {

struct DegreeOverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IncompleteSliceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// D-multi-index and F basis index
using VKey = std::pair<Monomial, int>;

class VermaElement {
public:
    using Terms = std::map<VKey, Q>;

    VermaElement() = default;
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const VKey& key, const Q& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    VermaElement& operator+=(const VermaElement& o) {
        for (auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    VermaElement& operator-=(const VermaElement& o) {
        for (auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend VermaElement operator+(VermaElement a, const VermaElement& b) { return a += b; }
    friend VermaElement operator-(VermaElement a, const VermaElement& b) { return a -= b; }
    friend VermaElement operator*(const Q& c, const VermaElement& v) {
        VermaElement r;
        if (c == 0) return r;
        for (auto& [k, x] : v.terms_) r.terms_.emplace(k, c * x);
        return r;
    }
    friend bool operator==(const VermaElement& a, const VermaElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const VermaElement& a, const VermaElement& b) { return !(a == b); }

    int max_degree() const {
        int d = -1;
        for (auto& [k, c] : terms_) d = std::max(d, degree(k.first));
        return d;
    }
    VermaElement degree_part(int d) const {
        VermaElement r;
        for (auto& [k, c] : terms_)
            if (degree(k.first) == d) r.terms_.emplace(k, c);
        return r;
    }

    // "c * D1^a*D2^b (x) v3 + ..."
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += nlie::to_string(c) + " * ";
            std::string ds;
            for (std::size_t i = 0; i < k.first.size(); ++i) {
                if (k.first[i] == 0) continue;
                if (!ds.empty()) ds += "*";
                ds += "D" + std::to_string(i + 1) + "^" + std::to_string(k.first[i]);
            }
            out += (ds.empty() ? "1" : ds) + " (x) v" + std::to_string(k.second);
        }
        return out;
    }

private:
    Terms terms_;
};

inline VermaElement basis_element(int nv, int f, const Monomial& d = {}) {
    VermaElement v;
    v.add({d.empty() ? Monomial(nv, 0) : d, f}, 1);
    return v;
}

// M(F) restricted to degrees <= maxdeg
class VermaSlice {
public:
    VermaSlice(std::shared_ptr<const GLModuleSlice> F, int maxdeg) : F_(std::move(F)), maxdeg_(maxdeg) {
        if (!F_) throw std::invalid_argument("missing module");
    }
    VermaSlice(GLModuleSlice F, int maxdeg)
        : VermaSlice(std::make_shared<const GLModuleSlice>(std::move(F)), maxdeg) {}

    const GLModuleSlice& F() const { return *F_; }
    int nv() const { return F_->k; }
    int maxdeg() const { return maxdeg_; }

    std::vector<VKey> basis(int d) const {
        std::vector<VKey> out;
        for (auto& m : monomials_up_to(nv(), d)) {
            if (degree(m) != d) continue;
            for (int f = 0; f < F_->dim(); ++f) out.push_back({m, f});
        }
        return out;
    }

    VermaElement act(const VectorField& X, const VermaElement& v) const {
        if (X.arity() != nv()) throw ArityError("field arity does not match module");
        VermaElement r;
        for (auto& [key, c] : v.terms()) {
            if (degree(key.first) > maxdeg_) throw DegreeOverflowError("input beyond maximal degree");
            r += c * act_basis(X, key.first, key.second);
        }
        return r;
    }

    // rightmost acts first
    VermaElement act_word(const std::vector<VectorField>& Xs, VermaElement v) const {
        for (auto it = Xs.rbegin(); it != Xs.rend(); ++it) v = act(*it, v);
        return v;
    }

private:
    void emit(VermaElement& r, Monomial d, int f, const Q& c) const {
        if (c == 0) return;
        if (degree(d) > maxdeg_) throw DegreeOverflowError("result exceeds maximal degree " + std::to_string(maxdeg_));
        r.add({std::move(d), f}, c);
    }

    // X (D^a (x) v_b) via X D_p u = D_p (X u) + [X, D_p] u
    VermaElement act_basis(const VectorField& X, const Monomial& a, int b) const {
        int k = nv();
        VermaElement r;
        if (degree(a) == 0) {
            for (int l = 0; l < k; ++l)
                for (auto& [m, c] : X[l].terms()) {
                    int dm = degree(m);
                    if (dm == 0) {
                        Monomial d(k, 0);
                        d[l] = 1;
                        emit(r, d, b, c);
                    } else if (dm == 1) {
                        int i = 0;
                        while (m[i] == 0) ++i;
                        for (auto& [row, x] : F_->column(i, l, b)) emit(r, a, row, c * x);
                    }
                }
            return r;
        }
        int p = 0;
        while (a[p] == 0) ++p;
        Monomial a2 = a;
        a2[p] -= 1;
        VermaElement inner = act_basis(X, a2, b);
        for (auto& [key, c] : inner.terms()) {
            Monomial d = key.first;
            d[p] += 1;
            emit(r, d, key.second, c);
        }
        VectorField C(k);
        for (int l = 0; l < k; ++l) C[l] = -X[l].deriv(p + 1);
        if (!C.is_zero()) r += act_basis(C, a2, b);
        return r;
    }

    std::shared_ptr<const GLModuleSlice> F_;
    int maxdeg_;
};

// x_i x_j D_l, i <= j
inline std::vector<VectorField> positive_generators(int nv) {
    std::vector<VectorField> out;
    for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j)
            for (int l = 1; l <= nv; ++l) {
                Monomial m(nv, 0);
                m[i] += 1;
                m[j] += 1;
                out.push_back(VectorField::term(m, l));
            }
    return out;
}

inline std::vector<VectorField> degree_zero_generators(int nv) {
    std::vector<VectorField> out;
    for (int i = 0; i < nv; ++i)
        for (int l = 1; l <= nv; ++l) {
            Monomial m(nv, 0);
            m[i] = 1;
            out.push_back(VectorField::term(m, l));
        }
    return out;
}

inline std::vector<VermaElement> singular_vectors(const VermaSlice& S, int k) {
    if (!S.F().complete) throw IncompleteSliceError("singular vectors need a complete module");
    if (k < 0 || k > S.maxdeg()) throw std::out_of_range("degree outside slice");
    auto basis = S.basis(k);
    auto gens = positive_generators(S.nv());
    std::map<std::pair<std::size_t, VKey>, std::size_t> rows;
    std::vector<std::vector<std::pair<std::size_t, Q>>> cols(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        VermaElement e;
        e.add(basis[c], 1);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            VermaElement img = S.act(gens[g], e);
            for (auto& [key, x] : img.terms()) {
                auto it = rows.try_emplace({g, key}, rows.size()).first;
                cols[c].push_back({it->second, x});
            }
        }
    }
    QMat M = zeros(rows.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (auto& [r, x] : cols[c]) M[r][c] += x;
    std::vector<VermaElement> out;
    for (auto& v : nullspace(M, basis.size())) {
        VermaElement e;
        for (std::size_t c = 0; c < basis.size(); ++c) e.add(basis[c], v[c]);
        out.push_back(e);
    }
    return out;
}

// degree-by-degree span of the submodule generated by the non-trivial singular vectors
class SingPlus {
public:
    explicit SingPlus(const VermaSlice& S) : nv_(S.nv()) {
        if (!S.F().complete) throw IncompleteSliceError("singular vectors need a complete module");
        int D = S.maxdeg();
        for (int d = 0; d <= D; ++d) {
            auto b = S.basis(d);
            std::map<VKey, std::size_t> idx;
            for (std::size_t i = 0; i < b.size(); ++i) idx[b[i]] = i;
            index_.push_back(std::move(idx));
            spans_.emplace_back(b.size());
        }
        std::deque<VermaElement> queue;
        for (int d = 1; d <= D; ++d)
            for (auto& v : singular_vectors(S, d))
                if (insert(v)) queue.push_back(v);
        auto gl = degree_zero_generators(nv_);
        auto pos = positive_generators(nv_);
        while (!queue.empty()) {
            VermaElement v = queue.front();
            queue.pop_front();
            int d = v.max_degree();
            std::vector<VermaElement> next;
            for (auto& X : gl) next.push_back(S.act(X, v));
            for (auto& X : pos) next.push_back(S.act(X, v));
            if (d < D)
                for (int i = 1; i <= nv_; ++i) next.push_back(S.act(VectorField::partial(nv_, i), v));
            for (auto& w : next)
                for (int e = 0; e <= D; ++e) {
                    VermaElement part = w.degree_part(e);
                    if (!part.is_zero() && insert(part)) queue.push_back(part);
                }
        }
    }

    std::size_t dim(int d) const { return spans_.at(d).rank(); }
    int maxdeg() const { return static_cast<int>(spans_.size()) - 1; }

    bool contains(const VermaElement& v) const {
        for (int d = 0; d <= maxdeg(); ++d) {
            VermaElement part = v.degree_part(d);
            if (part.is_zero()) continue;
            if (!spans_[d].contains(coords(part, d))) return false;
        }
        return v.max_degree() <= maxdeg();
    }

private:
    QVec coords(const VermaElement& v, int d) const {
        QVec x(spans_[d].dim(), Q(0));
        for (auto& [k, c] : v.terms()) x[index_[d].at(k)] = c;
        return x;
    }
    bool insert(const VermaElement& v) {
        int d = v.max_degree();
        return spans_[d].insert(coords(v, d));
    }

    int nv_;
    std::vector<std::map<VKey, std::size_t>> index_;
    std::vector<Span> spans_;
};

inline SingPlus singplus_span(const VermaSlice& S) { return SingPlus(S); }
inline bool in_singplus(const VermaElement& v, const SingPlus& spans) { return spans.contains(v); }

} // namespace nlie
