#pragma once

#include "nlie/glrep.hpp"
#include "nlie/linalg.hpp"
#include "nlie/verma.hpp"
#include "nlie/wedge.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlie {

// f_1..f_n | f_{n+1}..f_{2n-2}
struct GeneratorSpec {
    std::vector<Monomial> fs;

    int n() const { return static_cast<int>(fs.size()) / 2 + 1; }
    int nv() const { return fs.empty() ? 0 : static_cast<int>(fs[0].size()); }

    void validate() const {
        if (fs.size() < 4 || fs.size() % 2) throw std::invalid_argument("need 2n-2 monomials with n >= 3");
        for (auto& m : fs) {
            if (static_cast<int>(m.size()) != n() - 1) throw ArityError("monomial arity must be n-1");
            for (int e : m)
                if (e < 0) throw std::invalid_argument("negative exponent");
        }
    }

    // sort each group; returns the permutation sign, 0 if a group repeats a monomial
    int canonicalize() {
        int n_ = n(), sign = 1;
        GrlexLess lt;
        auto sort_range = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo + 1; i < hi; ++i)
                for (std::size_t j = i; j > lo && !lt(fs[j - 1], fs[j]); --j) {
                    if (fs[j - 1] == fs[j]) {
                        sign = 0;
                        return;
                    }
                    std::swap(fs[j - 1], fs[j]);
                    sign = -sign;
                }
        };
        sort_range(0, n_);
        if (sign) sort_range(n_, fs.size());
        return sign;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (i) out += i == static_cast<std::size_t>(n()) ? " | " : ", ";
            out += Poly::mono(fs[i]).to_string();
        }
        return out;
    }

    friend bool operator==(const GeneratorSpec& a, const GeneratorSpec& b) { return a.fs == b.fs; }
    friend bool operator<(const GeneratorSpec& a, const GeneratorSpec& b) {
        return std::lexicographical_compare(a.fs.begin(), a.fs.end(), b.fs.begin(), b.fs.end(), GrlexLess());
    }
};

// 1 if i >= j
inline int kronecker_step(int i, int j) { return i >= j ? 1 : 0; }

// how the first column of B and the beta prefactor are read
enum class Reading {
    Corrected,  // I_0 = sum_{r<=n} I_r - (1..1); beta over f_1..^f_i..f_n
    Literal     // I_0 = sum_{r<=n-1} (I_r - 1); beta over f_1..^f_i..f_{n-1}
};

struct CoeffMatrices {
    QMat A;                                // n x n, column c = (1, I_c)
    std::vector<std::vector<QMat>> Aminor; // [q-1][i-1]: A without row q+1 and column i
    QMat B;                                // n x (n-1), columns (1, I_0), (1, I_{n+1}), ...
    std::vector<QMat> Bminor;              // [k-1]: B without row k+1
    std::vector<QMat> C;                   // [i-1]: n x (n-1), columns (1, I_i), (1, I_{n+1}), ...
    std::vector<std::vector<QMat>> Cminor; // [i-1][s-1]
    Monomial I0;
};

namespace detail {

inline QMat column_matrix(const std::vector<Monomial>& cols, int nv) {
    QMat M = zeros(nv + 1, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        M[0][c] = 1;
        for (int r = 0; r < nv; ++r) M[r + 1][c] = cols[c][r];
    }
    return M;
}

inline QMat drop(const QMat& M, int row, int col = -1) {
    QMat out;
    for (int r = 0; r < static_cast<int>(M.size()); ++r) {
        if (r == row) continue;
        QVec v;
        for (int c = 0; c < static_cast<int>(M[r].size()); ++c)
            if (c != col) v.push_back(M[r][c]);
        out.push_back(v);
    }
    return out;
}

inline Monomial msum(const std::vector<Monomial>& ms, int nv) {
    Monomial r(nv, 0);
    for (auto& m : ms)
        for (int i = 0; i < nv; ++i) r[i] += m[i];
    return r;
}

// c * num / den, zero when an exponent would be negative
inline Poly quotient_term(const Monomial& num, const Monomial& den, const Q& c) {
    int nv = static_cast<int>(num.size());
    if (c == 0) return Poly(nv);
    Monomial e(nv);
    for (int i = 0; i < nv; ++i) {
        e[i] = num[i] - den[i];
        if (e[i] < 0) return Poly(nv);
    }
    return Poly::mono(e, c);
}

inline int parity_sign(int e) { return e % 2 ? -1 : 1; }

} // namespace detail

inline CoeffMatrices coeff_matrices(const GeneratorSpec& spec, Reading reading = Reading::Corrected) {
    spec.validate();
    int n = spec.n(), nv = n - 1;
    const auto& I = spec.fs;
    CoeffMatrices cm;
    std::vector<Monomial> first(I.begin(), I.begin() + n), second(I.begin() + n, I.end());
    cm.A = detail::column_matrix(first, nv);
    cm.Aminor.assign(nv, std::vector<QMat>(n));
    for (int q = 1; q <= nv; ++q)
        for (int i = 1; i <= n; ++i) cm.Aminor[q - 1][i - 1] = detail::drop(cm.A, q, i - 1);

    cm.I0 = Monomial(nv, 0);
    int upto = reading == Reading::Corrected ? n : n - 1;
    for (int v = 0; v < nv; ++v) {
        int s = 0;
        for (int r = 0; r < upto; ++r) s += I[r][v] - (reading == Reading::Literal ? 1 : 0);
        cm.I0[v] = reading == Reading::Corrected ? s - 1 : s;
    }
    std::vector<Monomial> bcols{cm.I0};
    bcols.insert(bcols.end(), second.begin(), second.end());
    cm.B = detail::column_matrix(bcols, nv);
    for (int k = 1; k <= nv; ++k) cm.Bminor.push_back(detail::drop(cm.B, k));

    for (int i = 1; i <= n; ++i) {
        std::vector<Monomial> ccols{I[i - 1]};
        ccols.insert(ccols.end(), second.begin(), second.end());
        cm.C.push_back(detail::column_matrix(ccols, nv));
        std::vector<QMat> mins;
        for (int s = 1; s <= nv; ++s) mins.push_back(detail::drop(cm.C.back(), s));
        cm.Cminor.push_back(mins);
    }
    return cm;
}

inline UGenerator explicit_qgen(const GeneratorSpec& spec, Reading reading = Reading::Corrected) {
    CoeffMatrices cm = coeff_matrices(spec, reading);
    int n = spec.n(), nv = n - 1;
    const auto& I = spec.fs;
    Q detA = det(cm.A);
    Monomial total = detail::msum(I, nv);

    UGenerator g{VectorField(nv), {}};
    for (int k = 1; k <= nv; ++k) {
        Monomial den(nv, 2);
        den[k - 1] = 1;
        Q c = detail::parity_sign(n + 1 + k) * detA * det(cm.Bminor[k - 1]);
        g.head[k - 1] = detail::quotient_term(total, den, c);
    }
    Monomial second = detail::msum({I.begin() + n, I.end()}, nv);
    for (int i = 1; i <= n; ++i) {
        std::vector<Monomial> pf;
        int upto = reading == Reading::Corrected ? n : n - 1;
        for (int t = 1; t <= upto; ++t)
            if (t != i) pf.push_back(I[t - 1]);
        Monomial P = detail::msum(pf, nv);
        Monomial G = detail::msum({I[i - 1], second}, nv);
        VectorField beta(nv), gamma(nv);
        for (int q = 1; q <= nv; ++q) {
            Monomial den(nv, 1);
            den[q - 1] = 0;
            beta[q - 1] = detail::quotient_term(P, den, detail::parity_sign(n + 1 + q) * det(cm.Aminor[q - 1][i - 1]));
            gamma[q - 1] = detail::quotient_term(G, den, detail::parity_sign(n + 1 + q) * det(cm.Cminor[i - 1][q - 1]));
        }
        g.tail.push_back({detail::parity_sign(i + n), beta, gamma});
    }
    return g;
}

inline UGenerator abstract_qgen(const GeneratorSpec& spec) {
    spec.validate();
    return abstract_qgen(spec.fs);
}

// x_{f} . (1 (x) v_top), rightmost factor first
inline VermaElement apply_to_hw(const UGenerator& g, const VermaSlice& S, int top = 0) {
    VermaElement w = basis_element(S.nv(), top);
    VermaElement r = S.act(g.head, w);
    for (auto& t : g.tail) {
        VermaElement u = S.act(t.first, S.act(t.second, w));
        r -= Q(t.sign) * u;
    }
    return r;
}

// all canonical specs: distinct monomials inside each group, per-slot and total degree bounds
inline std::vector<GeneratorSpec> enumerate_specs(int n, int slot_deg, int total_deg) {
    auto ms = monomials_up_to(n - 1, slot_deg);
    std::vector<GeneratorSpec> out;
    std::vector<std::size_t> a, b;
    std::function<void(std::size_t, int)> rec_b = [&](std::size_t start, int used) {
        if (static_cast<int>(b.size()) == n - 2) {
            GeneratorSpec s;
            for (auto i : a) s.fs.push_back(ms[i]);
            for (auto i : b) s.fs.push_back(ms[i]);
            out.push_back(std::move(s));
            return;
        }
        for (std::size_t i = start; i < ms.size(); ++i) {
            int d = degree(ms[i]);
            if (used + d > total_deg) continue;
            b.push_back(i);
            rec_b(i + 1, used + d);
            b.pop_back();
        }
    };
    std::function<void(std::size_t, int)> rec_a = [&](std::size_t start, int used) {
        if (static_cast<int>(a.size()) == n) {
            rec_b(0, used);
            return;
        }
        for (std::size_t i = start; i < ms.size(); ++i) {
            int d = degree(ms[i]);
            if (used + d > total_deg) continue;
            a.push_back(i);
            rec_a(i + 1, used + d);
            a.pop_back();
        }
    };
    rec_a(0, 0);
    return out;
}

inline int default_depth(int n) { return std::max(2, 2 * (n - 2)); }

struct ConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ScenarioId {
    std::string label;  // e.g. "1a-i", "1b-ii", "2a-i"
    int j = 0, k = 0, l = 0, m = 0, t = 0;
};

namespace detail {

struct Builder {
    int nv;
    Monomial x(std::initializer_list<int> vars) const {
        Monomial e(nv, 0);
        for (int v : vars) {
            if (v < 1 || v > nv) throw ConstraintError("index out of range");
            e[v - 1] += 1;
        }
        return e;
    }
    Monomial one() const { return Monomial(nv, 0); }
    // variables in increasing order without `skip`, with some entries replaced
    std::vector<Monomial> group(std::vector<int> skip, std::map<int, Monomial> over) const {
        std::set<int> sk(skip.begin(), skip.end());
        if (sk.size() != skip.size()) throw ConstraintError("skipped indices must be distinct");
        for (int s : skip)
            if (s < 1 || s > nv) throw ConstraintError("index out of range");
        for (auto& [v, mm] : over)
            if (sk.count(v) || v < 1 || v > nv) throw ConstraintError("replaced index is not in the list");
        std::vector<Monomial> out;
        for (int v = 1; v <= nv; ++v) {
            if (sk.count(v)) continue;
            auto it = over.find(v);
            out.push_back(it == over.end() ? x({v}) : it->second);
        }
        return out;
    }
};

inline std::vector<Monomial> cat(std::vector<Monomial> a, const std::vector<Monomial>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw ConstraintError(what);
}

inline bool distinct(std::initializer_list<int> xs) {
    std::set<int> s(xs);
    return s.size() == xs.size();
}

} // namespace detail

inline int scenario_min_n(const std::string& label) {
    static const std::map<std::string, int> mins{
        {"1a-i", 3},   {"1a-ii", 4},   {"1a-iii", 5}, {"1a-iv", 4},  {"1a-v", 5},   {"1a-vi", 5},
        {"1a-vii", 6}, {"1a-viii", 4}, {"1a-ix", 4},  {"1a-x", 4},   {"1a-xi", 4},  {"1a-xii", 4},
        {"1a-xiii", 3}, {"1a-xiv", 4}, {"1b-i", 4},   {"1b-ii", 5},  {"2a-i", 4}};
    auto it = mins.find(label);
    if (it == mins.end()) throw std::invalid_argument("unknown scenario " + label);
    return it->second;
}

inline GeneratorSpec scenario(int n, const ScenarioId& id) {
    using detail::cat;
    using detail::distinct;
    using detail::require;
    require(n >= scenario_min_n(id.label), "scenario " + id.label + " needs n >= " + std::to_string(scenario_min_n(id.label)));
    detail::Builder b{n - 1};
    int j = id.j, k = id.k, l = id.l, m = id.m, t = id.t;
    auto one = b.one();
    std::vector<Monomial> A, B;
    const std::string& c = id.label;
    if (c == "1a-i") {
        require(j < k, "needs j < k");
        A = cat(b.group({}, {{k, b.x({k, k})}}), {one});
        B = b.group({j}, {});
    } else if (c == "1a-ii") {
        require(distinct({l, j, k}), "needs distinct l, j, k");
        A = cat(b.group({j}, {{l, b.x({l, j})}, {k, b.x({k, k})}}), {one, b.x({l})});
        B = cat(b.group({l, j}, {}), {one});
    } else if (c == "1a-iii" || c == "1a-iv") {
        if (c == "1a-iv") m = j;
        require(j < k, "needs j < k");
        require(distinct({l, j, k}) && distinct({l, m, k}), "needs distinct indices");
        A = cat(b.group({k}, {{m, b.x({m, k})}, {l, b.x({l, k})}}), {one, b.x({l})});
        B = cat(b.group({l, j}, {}), {one});
    } else if (c == "1a-v") {
        require(distinct({l, j, k, m}), "needs distinct l, j, k, m");
        A = cat(b.group({m}, {{k, b.x({m, k})}, {l, b.x({l, k})}}), {one, b.x({m})});
        B = cat(b.group({j, m}, {}), {one});
    } else if (c == "1a-vi") {
        require(distinct({l, j, k, m}), "needs distinct l, j, k, m");
        A = cat(b.group({m}, {{l, b.x({m, l})}, {k, b.x({k, k})}}), {one, b.x({k})});
        B = cat(b.group({j, k}, {}), {one});
    } else if (c == "1a-vii") {
        require(j < k, "needs j < k");
        require(distinct({l, j, k, m, t}), "needs distinct l, j, k, m, t");
        A = cat(b.group({t}, {{m, b.x({m, t})}, {l, b.x({l, k})}}), {one, b.x({m})});
        B = cat(b.group({m, j}, {}), {one});
    } else if (c == "1a-viii") {
        require(distinct({l, j, k}), "needs distinct l, j, k");
        A = cat(b.group({j}, {{l, b.x({l, k})}, {k, b.x({k, k})}}), {one, b.x({j})});
        B = cat(b.group({j, k}, {}), {one});
    } else if (c == "1a-ix") {
        require(distinct({l, j, k}), "needs distinct l, j, k");
        A = cat(b.group({j}, {{l, b.x({l, k})}, {k, b.x({k, k})}}), {one, b.x({k})});
        B = cat(b.group({l, k}, {}), {one});
    } else if (c == "1a-x") {
        require(distinct({l, j, k}), "needs distinct l, j, k");
        A = cat(b.group({j}, {{k, b.x({k, k})}}), {one, b.x({j})});
        B = cat(b.group({l, j}, {}), {one});
    } else if (c == "1a-xi") {
        require(j < k && distinct({l, j, k}), "needs j < k and distinct l, j, k");
        A = cat(b.group({j}, {{k, b.x({k, k})}}), {one, b.x({l})});
        B = cat(b.group({l, j}, {}), {one});
    } else if (c == "1a-xii") {
        require(j < k, "needs j < k");
        A = cat(b.group({j}, {{k, b.x({k, k})}}), {one, b.x({k})});
        B = cat(b.group({j, k}, {}), {one});
    } else if (c == "1a-xiii") {
        require(j < k, "needs j < k");
        A = cat(b.group({}, {{j, b.x({j, k})}}), {one});
        B = b.group({k}, {});
    } else if (c == "1a-xiv") {
        require(j < k && distinct({l, j, k}), "needs j < k and distinct l, j, k");
        A = cat(b.group({}, {{j, b.x({j, k})}}), {one});
        B = cat(b.group({j, k}, {{l, b.x({l, j})}}), {one});
    } else if (c == "1b-i") {
        require(distinct({l, j, k, m}), "needs distinct l, j, k, m");
        A = cat(b.group({j}, {{l, b.x({l, k})}}), {one, b.x({l, m})});
        B = cat(b.group({l, m}, {}), {one});
    } else if (c == "1b-ii") {
        require(distinct({l, m}) && distinct({j, k}), "needs l != m and j != k");
        A = cat(b.group({m}, {{l, b.x({m, l})}}), {one, b.x({j, k})});
        B = cat(b.group({j, k}, {}), {one});
    } else if (c == "2a-i") {
        require(distinct({l, j, k}), "needs distinct l, j, k");
        A = cat(b.group({k}, {{l, b.x({l, k})}}), {one, b.x({l})});
        B = cat(b.group({l, j}, {}), {one});
    } else {
        throw std::invalid_argument("unknown scenario " + c);
    }
    GeneratorSpec s{cat(A, B)};
    s.validate();
    return s;
}

struct EquationParams {
    int j = 0, k = 0, l = 0, m = 0, t = 0;
};

struct ReproReport {
    int eq = 0;
    std::string scenario;
    GeneratorSpec spec;
    VermaElement lhs, rhs;
    Q factor = 1;  // lhs is compared with factor * rhs
    bool match = false;
};

namespace detail {

// vectors of M(F) built from E-words on v_top
struct RhsContext {
    const VermaSlice& S;
    const Weight& lam;
    QVec v;
    QVec E(int i, int j, const QVec& w) const { return S.F().apply(i - 1, j - 1, w); }
    Q L(int i) const { return lam.at(i - 1); }
    VermaElement el(const QVec& w, int D = 0, const Q& c = 1) const {
        VermaElement r;
        Monomial d(S.nv(), 0);
        if (D) d[D - 1] = 1;
        for (std::size_t b = 0; b < w.size(); ++b) r.add({d, static_cast<int>(b)}, c * w[b]);
        return r;
    }
};

struct EquationInfo {
    std::string scenario;
    int min_n;
    std::function<bool(const EquationParams&)> admissible;
    std::function<VermaElement(const RhsContext&, int, const EquationParams&)> rhs;
    Q factor = 1;
};

inline bool chain(std::initializer_list<int> xs) {
    int prev = 0;
    for (int x : xs) {
        if (x <= prev) return false;
        prev = x;
    }
    return true;
}

inline const std::map<int, EquationInfo>& equations() {
    using P = EquationParams;
    using R = RhsContext;
    auto sg = [](int e) { return Q(parity_sign(e)); };
    static const std::map<int, EquationInfo> table = [&] {
        std::map<int, EquationInfo> T;
        Q zero = 0;
        auto S = [](const R& r) {
            Q s = 0;
            for (auto& x : r.lam) s += x;
            return s;
        };
        T[22] = {"1a-i", 3, [](const P& p) { return p.j < p.k; },
                 [=](const R& r, int, const P& p) { return r.el(r.E(p.k, p.j, r.v), 0, sg(p.j + 1) * 2 * (S(r) + 1)); }};
        T[23] = {"1a-ii", 4, [](const P& p) { return chain({p.l, p.k, p.j}); },
                 [=](const R& r, int n, const P& p) { return r.el(r.v, 0, sg(n + p.l + p.k) * 2 * (r.L(p.l) - r.L(p.k))); }};
        T[24] = {"1a-iii", 5, [](const P& p) { return p.j < p.k && distinct({p.l, p.j, p.k}) && distinct({p.l, p.m, p.k}); },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.E(p.k, p.j, r.v), 0, sg(p.l + p.k + p.j) * (r.L(p.k) - r.L(p.l) + 1));
                 }};
        T[25] = {"1a-iv", 4, [](const P& p) { return chain({p.l, p.j, p.k}); },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.E(p.k, p.j, r.v), 0, sg(p.j + p.l + p.k + 1) * (r.L(p.k) - r.L(p.j) + 1));
                 }};
        T[26] = {"1a-iv", 4, [](const P& p) { return chain({p.j, p.l, p.k}); },
                 [=](const R& r, int, const P& p) {
                     Q s = sg(p.j + p.l + p.k + 1);
                     return r.el(r.E(p.k, p.j, r.v), 0, s * (r.L(p.k) - r.L(p.j) + 1)) -
                            r.el(r.E(p.k, p.l, r.E(p.l, p.j, r.v)), 0, s);
                 }};
        T[27] = {"1a-iv", 4, [](const P& p) { return chain({p.j, p.k, p.l}); },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.E(p.k, p.j, r.v), 0, sg(p.j + p.l + p.k + 1) * (r.L(p.j) - r.L(p.k)));
                 }};
        T[28] = {"1a-v", 5,
                 [](const P& p) {
                     return chain({p.l, p.j, p.k, p.m}) || chain({p.l, p.j, p.m, p.k}) || chain({p.j, p.m, p.k, p.l});
                 },
                 [=](const R& r, int, const P& p) { return r.el(r.E(p.k, p.j, r.v), 0, sg(p.j)); }};
        T[29] = {"1a-vi", 5,
                 [](const P& p) {
                     return chain({p.l, p.j, p.m, p.k}) || chain({p.l, p.j, p.k, p.m}) || chain({p.j, p.k, p.m, p.l});
                 },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.E(p.k, p.j, r.v), 0, sg(p.j + p.m + p.k) * 2 * (r.L(p.m) - r.L(p.l)));
                 }};
        T[30] = {"1a-vii", 6, [](const P& p) { return p.j < p.k && distinct({p.l, p.j, p.k, p.m, p.t}); },
                 [=](const R& r, int, const P& p) { return r.el(r.E(p.k, p.j, r.v), 0, sg(p.j)); }};
        T[31] = {"1a-viii", 4, [](const P& p) { return chain({p.j, p.l, p.k}); },
                 [=](const R& r, int, const P& p) {
                     Q s = sg(p.j + 1) * 2;
                     return r.el(r.E(p.k, p.j, r.v), 0, s * (r.L(p.k) - r.L(p.l) + 2)) +
                            r.el(r.E(p.l, p.j, r.E(p.k, p.l, r.v)), 0, s);
                 }};
        T[32] = {"1a-viii", 4, [](const P& p) { return chain({p.j, p.k, p.l}); },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.E(p.k, p.j, r.v), 0, sg(p.j) * 2 * (r.L(p.k) - r.L(p.l) + 2));
                 }};
        T[33] = {"1a-viii", 4, [](const P& p) { return chain({p.l, p.j, p.k}); },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.E(p.k, p.j, r.v), 0, sg(p.j + 1) * 2 * (r.L(p.k) - r.L(p.l) + 1));
                 }};
        T[34] = {"1a-ix", 4, [](const P& p) { return chain({p.l, p.j, p.k}) || chain({p.j, p.l, p.k}); },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.E(p.k, p.j, r.E(p.k, p.l, r.v)), 0, sg(p.l + 1) * 2);
                 }};
        T[35] = {"1a-x", 4, [](const P& p) { return chain({p.j, p.l, p.k}) || chain({p.l, p.j, p.k}); },
                 [=](const R& r, int, const P& p) {
                     Q s = sg(p.j) * 2;
                     return r.el(r.E(p.k, p.l, r.v), p.j, s) - r.el(r.E(p.k, p.j, r.v), p.l, s);
                 }};
        T[36] = {"1a-x", 4, [](const P& p) { return chain({p.l, p.k, p.j}); },
                 [=](const R& r, int, const P& p) { return r.el(r.E(p.k, p.l, r.v), p.j, sg(p.l) * 2); }};
        T[37] = {"1a-x", 4, [](const P& p) { return chain({p.j, p.k, p.l}); },
                 [=](const R& r, int, const P& p) { return r.el(r.E(p.k, p.j, r.v), p.l, sg(p.l) * 2); }};
        T[38] = {"1a-xi", 4, [](const P& p) { return p.j < p.k && distinct({p.l, p.j, p.k}); },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.E(p.k, p.j, r.v), 0, sg(p.l + 1) * (r.L(p.j) - r.L(p.l)));
                 }};
        T[39] = {"1a-xii", 4, [](const P& p) { return p.j < p.k; },
                 [=](const R& r, int, const P& p) { return r.el(r.E(p.k, p.j, r.E(p.k, p.j, r.v)), 0, sg(p.j + 1) * 2); }};
        T[40] = {"1a-xiii", 3, [](const P& p) { return p.j < p.k; },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.v, 0, sg(p.k) * (r.L(p.j) - r.L(p.k)) * (S(r) + 1));
                 }};
        auto xiv = [=](const R& r, int n, const P& p) {
            return r.el(r.v, 0, sg(n + p.l + p.k) * (r.L(p.j) - r.L(p.k)) * (1 + r.L(p.l) - r.L(p.j)));
        };
        T[41] = {"1a-xiv", 4, [](const P& p) { return chain({p.j, p.k, p.l}); }, xiv};
        T[42] = {"1a-xiv", 4, [](const P& p) { return chain({p.l, p.j, p.k}); },
                 [=](const R& r, int n, const P& p) {
                     return r.el(r.v, 0, sg(n + p.l + p.k) * (r.L(p.l) - r.L(p.j)) * (1 + r.L(p.j) - r.L(p.k)));
                 }};
        // the stated ordering k < l < j conflicts with j < k, so no tuple is admissible
        T[43] = {"1a-xiv", 4, [](const P& p) { return chain({p.k, p.l, p.j}) && p.j < p.k; }, xiv};
        T[44] = {"1b-i", 4,
                 [](const P& p) {
                     return chain({p.j, p.l, p.m, p.k}) || chain({p.j, p.m, p.k, p.l}) || chain({p.l, p.j, p.m, p.k}) ||
                            chain({p.j, p.m, p.l, p.k});
                 },
                 [=](const R& r, int, const P& p) {
                     Q s = sg(p.j + p.l + p.m);
                     return r.el(r.E(p.k, p.m, r.E(p.m, p.j, r.v)), 0, s) -
                            r.el(r.E(p.k, p.j, r.v), 0, s * (r.L(p.l) - r.L(p.m)));
                 }};
        T[45] = {"1b-i", 4,
                 [](const P& p) {
                     return chain({p.j, p.k, p.l, p.m}) || chain({p.j, p.k, p.m, p.l}) || chain({p.j, p.l, p.k, p.m}) ||
                            chain({p.l, p.j, p.k, p.m});
                 },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.E(p.k, p.j, r.v), 0, sg(p.j + p.l + p.m) * (1 + r.L(p.l) - r.L(p.m)));
                 }};
        T[46] = {"1b-i", 4,
                 [](const P& p) {
                     return chain({p.l, p.m, p.j, p.k}) || chain({p.m, p.l, p.j, p.k}) || chain({p.m, p.j, p.k, p.l}) ||
                            chain({p.m, p.j, p.l, p.k});
                 },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.E(p.k, p.j, r.v), 0, sg(p.j + p.l + p.m + 1) * (r.L(p.l) - r.L(p.m)));
                 }};
        T[47] = {"1b-ii", 5, [](const P& p) { return p.j < p.k && distinct({p.l, p.m}); },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.v, 0, sg(p.m + p.j + p.k + 1) * (r.L(p.m) - r.L(p.l)) * (r.L(p.j) - r.L(p.k)));
                 }};
        T[50] = {"2a-i", 4, [](const P& p) { return chain({p.j, p.l, p.k}) || chain({p.j, p.k, p.l}); },
                 [=](const R& r, int, const P& p) {
                     Q s = sg(p.j + p.l + 1 + p.k);
                     return r.el(r.E(p.l, p.j, r.v), p.l, s) - r.el(r.E(p.k, p.j, r.v), p.k, s) -
                            r.el(r.v, p.j, s * (r.L(p.k) - r.L(p.l)));
                 }};
        T[51] = {"2a-i", 4, [](const P& p) { return chain({p.k, p.j, p.l}); },
                 [=](const R& r, int, const P& p) {
                     Q s = sg(p.j + p.k + p.l + 1);
                     return r.el(r.E(p.l, p.j, r.v), p.l, s) - r.el(r.v, p.j, s * (r.L(p.k) - r.L(p.l)));
                 }};
        T[52] = {"2a-i", 4, [](const P& p) { return chain({p.l, p.j, p.k}); },
                 [=](const R& r, int, const P& p) {
                     Q s = sg(p.j + p.l + p.k + 1);
                     return r.el(r.E(p.k, p.j, r.v), p.k, s) - r.el(r.v, p.j, s * (r.L(p.k) - r.L(p.l)));
                 }};
        T[53] = {"2a-i", 4, [](const P& p) { return chain({p.l, p.k, p.j}) || chain({p.k, p.l, p.j}); },
                 [=](const R& r, int, const P& p) {
                     return r.el(r.v, p.j, sg(p.j + p.l + p.k + 1) * (r.L(p.k) - r.L(p.l)));
                 }};
        // vanishing conditions for n = 3; compared up to the constant they were divided by
        T[54] = {"1a-i", 3, [](const P& p) { return p.j == 1 && p.k == 2; },
                 [=](const R& r, int, const P&) { return r.el(r.E(2, 1, r.v), 0, r.L(1) + r.L(2) + 1); }, Q(2)};
        T[55] = {"1a-xiii", 3, [](const P& p) { return p.j == 1 && p.k == 2; },
                 [=](const R& r, int, const P&) {
                     return r.el(r.v, 0, (r.L(1) - r.L(2)) * (r.L(1) + r.L(2) + 1));
                 }, Q(1)};
        (void)zero;
        return T;
    }();
    return table;
}

} // namespace detail

inline std::vector<int> known_equations() {
    std::vector<int> out;
    for (auto& [e, info] : detail::equations()) out.push_back(e);
    return out;
}

inline std::string equation_scenario(int eq) {
    auto it = detail::equations().find(eq);
    if (it == detail::equations().end()) throw std::invalid_argument("no action identity numbered " + std::to_string(eq));
    return it->second.scenario;
}

inline int equation_min_n(int eq) {
    auto it = detail::equations().find(eq);
    if (it == detail::equations().end()) throw std::invalid_argument("no action identity numbered " + std::to_string(eq));
    int mn = it->second.min_n;
    return eq == 54 || eq == 55 ? mn : mn;
}

inline bool equation_admissible(int eq, int n, const EquationParams& p) {
    const auto& info = detail::equations().at(eq);
    if (n < info.min_n) return false;
    if ((eq == 54 || eq == 55) && n != 3) return false;
    for (int x : {p.j, p.k, p.l, p.m, p.t})
        if (x < 0 || x > n - 1) return false;
    if (!info.admissible(p)) return false;
    try {
        scenario(n, {info.scenario, p.j, p.k, p.l, p.m, p.t});
    } catch (const ConstraintError&) {
        return false;
    }
    return true;
}

// all admissible index tuples for an identity at a given n
inline std::vector<EquationParams> admissible_params(int eq, int n) {
    std::vector<EquationParams> out;
    int hi = n - 1;
    const std::string sc = equation_scenario(eq);
    bool uses_l = sc != "1a-i" && sc != "1a-xii" && sc != "1a-xiii";
    bool uses_m = sc == "1a-iii" || sc == "1a-v" || sc == "1a-vi" || sc == "1a-vii" || sc == "1b-i" || sc == "1b-ii";
    bool uses_t = sc == "1a-vii";
    for (int j = 1; j <= hi; ++j)
        for (int k = 1; k <= hi; ++k)
            for (int l = uses_l ? 1 : 0; l <= (uses_l ? hi : 0); ++l)
                for (int m = uses_m ? 1 : 0; m <= (uses_m ? hi : 0); ++m)
                    for (int t = uses_t ? 1 : 0; t <= (uses_t ? hi : 0); ++t) {
                        EquationParams p{j, k, l, m, t};
                        if (equation_admissible(eq, n, p)) out.push_back(p);
                    }
    return out;
}

inline ReproReport reproduce_equation(int eq, int n, const EquationParams& p, const Weight& lam,
                                      int depth = -1) {
    auto it = detail::equations().find(eq);
    if (it == detail::equations().end()) throw std::invalid_argument("no action identity numbered " + std::to_string(eq));
    if (static_cast<int>(lam.size()) != n - 1) throw ArityError("weight must have n-1 entries");
    if (!equation_admissible(eq, n, p)) throw ConstraintError("parameters or n outside the admissible range");
    const auto& info = it->second;
    ReproReport rep;
    rep.eq = eq;
    rep.scenario = info.scenario;
    rep.spec = scenario(n, {info.scenario, p.j, p.k, p.l, p.m, p.t});
    rep.factor = info.factor;
    VermaSlice S(truncated_irreducible(lam, depth < 0 ? default_depth(n) : depth), 2);
    rep.lhs = apply_to_hw(abstract_qgen(rep.spec), S);
    detail::RhsContext ctx{S, lam, S.F().unit(0)};
    rep.rhs = info.rhs(ctx, n, p);
    rep.match = rep.lhs == rep.factor * rep.rhs;
    return rep;
}

} // namespace nlie
