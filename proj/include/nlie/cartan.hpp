#pragma once

#include "nlie/poly.hpp"
#include "nlie/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace nlie {

// sum_i coeffs[i] D_{i+1}
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(int nv) : coeffs_(nv, Poly(nv)) {}
    explicit VectorField(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
        for (auto& p : coeffs_)
            if (p.arity() != arity()) throw ArityError("vector field coefficient arity");
    }

    // D_i, 1-based
    static VectorField partial(int nv, int i) {
        VectorField X(nv);
        X.coeffs_.at(i - 1) = Poly::constant(nv, 1);
        return X;
    }
    // c * x^m D_i
    static VectorField term(const Monomial& m, int i, const Q& c = 1) {
        int nv = static_cast<int>(m.size());
        VectorField X(nv);
        X.coeffs_.at(i - 1) = Poly::mono(m, c);
        return X;
    }

    int arity() const { return static_cast<int>(coeffs_.size()); }
    const Poly& operator[](int i) const { return coeffs_[i]; }
    Poly& operator[](int i) { return coeffs_[i]; }
    const std::vector<Poly>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (auto& p : coeffs_)
            if (!p.is_zero()) return false;
        return true;
    }

    VectorField& operator+=(const VectorField& o) {
        check(o);
        for (int i = 0; i < arity(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    VectorField& operator-=(const VectorField& o) {
        check(o);
        for (int i = 0; i < arity(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const Q& c, const VectorField& X) {
        VectorField r(X.arity());
        for (int i = 0; i < X.arity(); ++i) r.coeffs_[i] = scale(c, X.coeffs_[i]);
        return r;
    }
    friend bool operator==(const VectorField& a, const VectorField& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

    // X(h)
    Poly apply(const Poly& h) const {
        if (h.arity() != arity()) throw ArityError("field/polynomial arity mismatch");
        Poly r(arity());
        for (int i = 0; i < arity(); ++i)
            if (!coeffs_[i].is_zero()) r += coeffs_[i] * h.deriv(i + 1);
        return r;
    }

    // "p1 D1 + p2 D2", zero coefficients omitted
    std::string to_string() const {
        std::string out;
        for (int i = 0; i < arity(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + coeffs_[i].to_string() + ") D" + std::to_string(i + 1);
        }
        return out.empty() ? "0" : out;
    }

private:
    void check(const VectorField& o) const {
        if (o.arity() != arity()) throw ArityError("vector field arity mismatch");
    }
    std::vector<Poly> coeffs_;
};

inline VectorField commutator(const VectorField& X, const VectorField& Y) {
    if (X.arity() != Y.arity()) throw ArityError("vector field arity mismatch");
    int k = X.arity();
    VectorField r(k);
    for (int l = 0; l < k; ++l) r[l] = X.apply(Y[l]) - Y.apply(X[l]);
    return r;
}

inline Poly divergence(const VectorField& X) {
    Poly r(X.arity());
    for (int i = 0; i < X.arity(); ++i) r += X[i].deriv(i + 1);
    return r;
}

// part j collects coefficient terms of degree j+1
inline std::map<int, VectorField> graded_parts(const VectorField& X) {
    std::map<int, VectorField> out;
    int k = X.arity();
    for (int i = 0; i < k; ++i)
        for (auto& [m, c] : X[i].terms()) {
            int j = degree(m) - 1;
            auto it = out.try_emplace(j, VectorField(k)).first;
            it->second[i].add_term(m, c);
        }
    return out;
}

inline VectorField graded_part(const VectorField& X, int j) {
    VectorField r(X.arity());
    for (int i = 0; i < X.arity(); ++i) r[i] = X[i].homogeneous_part(j + 1);
    return r;
}

// x_i D_j -> E_{i,j}
inline QMat gl_of_degree0(const VectorField& X0) {
    int k = X0.arity();
    QMat M = zeros(k, k);
    for (int j = 0; j < k; ++j)
        for (auto& [m, c] : X0[j].terms()) {
            if (degree(m) != 1) throw std::invalid_argument("field is not of degree zero");
            int i = 0;
            while (m[i] == 0) ++i;
            M[i][j] += c;
        }
    return M;
}

// adjoint module: h -> X(h) - div(X) h / (n-1), with n-1 = arity
inline Poly density_action(const VectorField& X, const Poly& h) {
    return X.apply(h) - scale(Q(1) / X.arity(), divergence(X) * h);
}

} // namespace nlie
