#pragma once

#include "nlie/rational.hpp"

#include <stdexcept>
#include <vector>

namespace nlie {

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

inline QMat zeros(std::size_t r, std::size_t c) { return QMat(r, QVec(c, Q(0))); }

// in-place reduced row echelon form; returns pivot columns
inline std::vector<std::size_t> rref(QMat& M) {
    std::vector<std::size_t> piv;
    if (M.empty()) return piv;
    std::size_t rows = M.size(), cols = M[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        Q inv = 1 / M[r][c];
        for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Q f = M[i][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

inline std::size_t rank(QMat M) { return rref(M).size(); }

// basis of {x : M x = 0}
inline std::vector<QVec> nullspace(QMat M, std::size_t cols) {
    std::vector<QVec> out;
    if (M.empty()) {
        for (std::size_t c = 0; c < cols; ++c) {
            QVec v(cols, Q(0));
            v[c] = 1;
            out.push_back(v);
        }
        return out;
    }
    auto piv = rref(M);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        QVec v(cols, Q(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -M[i][f];
        out.push_back(v);
    }
    return out;
}

inline Q det(QMat M) {
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

inline QMat inverse(const QMat& M) {
    std::size_t n = M.size();
    QMat aug = zeros(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = M[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
    QMat inv = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

inline QVec matvec(const QMat& M, const QVec& v) {
    QVec r(M.size(), Q(0));
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (M[i][j] != 0 && v[j] != 0) r[i] += M[i][j] * v[j];
    return r;
}

// incremental span with membership tests; rows kept in echelon form
class Span {
public:
    explicit Span(std::size_t dim = 0) : dim_(dim) {}
    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<QVec>& rows() const { return rows_; }

    QVec reduce(QVec v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Q& c = v[lead_[i]];
            if (c == 0) continue;
            Q f = c;
            for (std::size_t j = lead_[i]; j < dim_; ++j)
                if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
        }
        return v;
    }
    bool contains(const QVec& v) const {
        QVec r = reduce(v);
        for (auto& x : r)
            if (x != 0) return false;
        return true;
    }
    // true if the span grew
    bool insert(const QVec& v) {
        QVec r = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && r[p] == 0) ++p;
        if (p == dim_) return false;
        Q inv = 1 / r[p];
        for (std::size_t j = p; j < dim_; ++j) r[j] *= inv;
        // keep fully reduced
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Q f = rows_[i][p];
            if (f == 0) continue;
            for (std::size_t j = p; j < dim_; ++j) rows_[i][j] -= f * r[j];
        }
        rows_.push_back(std::move(r));
        lead_.push_back(p);
        return true;
    }

private:
    std::size_t dim_;
    std::vector<QVec> rows_;
    std::vector<std::size_t> lead_;
};

} // namespace nlie
