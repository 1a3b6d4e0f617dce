#pragma once

#include "nlie/brackets.hpp"
#include "nlie/qgen.hpp"
#include "nlie/wedge.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace nlie {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Q random_rational(Rng& rng) {
    int num = 0;
    while (num == 0) num = uniform_int(rng, -3, 3);
    Q q(num, uniform_int(rng, 1, 2));
    q.canonicalize();  // gmpxx leaves num/den as given
    return q;
}

inline Monomial random_monomial(Rng& rng, int nv, int max_deg) {
    Monomial m(nv, 0);
    int d = uniform_int(rng, 0, max_deg);
    for (int t = 0; t < d && nv > 0; ++t) m[uniform_int(rng, 0, nv - 1)] += 1;
    return m;
}

inline Poly random_poly(Rng& rng, int nv, int max_deg, int max_terms) {
    Poly p(nv);
    int t = uniform_int(rng, 1, max_terms);
    for (int i = 0; i < t; ++i) p.add_term(random_monomial(rng, nv, max_deg), random_rational(rng));
    return p;
}

inline CVector random_cvector(Rng& rng, int len) {
    CVector v(len);
    for (auto& c : v.coords) c = uniform_int(rng, -3, 3);
    return v;
}

inline SWElement random_sw(Rng& rng, int copies, int max_deg) {
    SWElement e(copies);
    // sparse: one or two copies populated
    int t = uniform_int(rng, 1, std::min(2, copies));
    for (int i = 0; i < t; ++i) e.parts[uniform_int(rng, 0, copies - 1)] += random_poly(rng, 1, max_deg, 2);
    return e;
}

inline WedgeElement random_wedge(Rng& rng, int n, int max_deg, int max_chains) {
    WedgeElement w(n);
    int t = uniform_int(rng, 1, max_chains);
    for (int i = 0; i < t; ++i) {
        std::vector<Monomial> f;
        for (int a = 0; a < n - 1; ++a) f.push_back(random_monomial(rng, n - 1, max_deg));
        w.add_chain(f, random_rational(rng));
    }
    return w;
}

// distinct monomials inside each group, per-slot degree <= slot_deg
inline GeneratorSpec random_spec(Rng& rng, int n, int slot_deg) {
    auto ms = monomials_up_to(n - 1, slot_deg);
    std::vector<std::size_t> idx(ms.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    GeneratorSpec s;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < n; ++i) s.fs.push_back(ms[idx[i]]);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < n - 2; ++i) s.fs.push_back(ms[idx[i]]);
    return s;
}

enum class Algebra { W, S, VP, SW };

inline Algebra parse_algebra(const std::string& s) {
    if (s == "w") return Algebra::W;
    if (s == "s") return Algebra::S;
    if (s == "vp") return Algebra::VP;
    if (s == "sw") return Algebra::SW;
    throw std::invalid_argument("unknown algebra " + s);
}

struct JacobiResult {
    int trials = 0;
    int failures = 0;
    int first_failure = -1;  // trial index
    std::string counterexample;
};

namespace detail {

template <class T>
std::string join_args(const std::vector<T>& xs, const std::function<std::string(const T&)>& show) {
    std::string out;
    for (auto& x : xs) out += (out.empty() ? "" : "; ") + show(x);
    return out;
}

inline std::string show_cvector(const CVector& v) {
    std::string out;
    for (auto& c : v.coords) out += (out.empty() ? "" : ",") + to_string(c);
    return out;
}

inline std::string show_sw(const SWElement& e) {
    std::string out;
    for (int i = 0; i < e.copies(); ++i)
        if (!e.parts[i].is_zero()) out += (out.empty() ? "" : " + ") + std::to_string(i + 1) + ":" + e.parts[i].to_string();
    return out.empty() ? "0" : out;
}

} // namespace detail

// randomized Filippov-Jacobi check; `corrupted` swaps in the sign-broken W bracket
inline JacobiResult jacobi_suite(Algebra alg, int n, int trials, std::uint64_t seed, int max_deg = 2,
                                 bool corrupted = false, bool stop_at_first = false) {
    Rng rng(seed);
    JacobiResult r;
    auto record = [&](int t, const std::string& what) {
        ++r.failures;
        if (r.first_failure < 0) {
            r.first_failure = t;
            r.counterexample = what;
        }
    };
    auto show_poly = std::function<std::string(const Poly&)>([](const Poly& p) { return p.to_string(); });
    for (int t = 0; t < trials; ++t) {
        ++r.trials;
        switch (alg) {
        case Algebra::W:
        case Algebra::S: {
            int nv = alg == Algebra::W ? n - 1 : n;
            std::vector<Poly> as, bs;
            for (int i = 0; i < n - 1; ++i) as.push_back(random_poly(rng, nv, max_deg, 2));
            for (int i = 0; i < n; ++i) bs.push_back(random_poly(rng, nv, max_deg, 2));
            auto br = [&](const std::vector<Poly>& v) {
                if (alg == Algebra::S) return bracket_s(v);
                return corrupted ? bracket_w_corrupted(v) : bracket_w(v);
            };
            Poly res = filippov_residual<Poly>(br, as, bs);
            if (!res.is_zero())
                record(t, "a = [" + detail::join_args(as, show_poly) + "], b = [" + detail::join_args(bs, show_poly) +
                              "], residual = " + res.to_string());
            break;
        }
        case Algebra::VP: {
            std::vector<CVector> as, bs;
            for (int i = 0; i < n - 1; ++i) as.push_back(random_cvector(rng, n + 1));
            for (int i = 0; i < n; ++i) bs.push_back(random_cvector(rng, n + 1));
            CVector res = filippov_residual<CVector>([](const std::vector<CVector>& v) { return bracket_vp(v); }, as, bs);
            if (!res.is_zero()) {
                auto show = std::function<std::string(const CVector&)>(detail::show_cvector);
                record(t, "a = [" + detail::join_args(as, show) + "], b = [" + detail::join_args(bs, show) +
                              "], residual = " + detail::show_cvector(res));
            }
            break;
        }
        case Algebra::SW: {
            std::vector<SWElement> as, bs;
            for (int i = 0; i < n - 1; ++i) as.push_back(random_sw(rng, n - 1, max_deg));
            for (int i = 0; i < n; ++i) bs.push_back(random_sw(rng, n - 1, max_deg));
            SWElement res =
                filippov_residual<SWElement>([](const std::vector<SWElement>& v) { return bracket_sw(v); }, as, bs);
            if (!res.is_zero()) {
                auto show = std::function<std::string(const SWElement&)>(detail::show_sw);
                record(t, "a = [" + detail::join_args(as, show) + "], b = [" + detail::join_args(bs, show) +
                              "], residual = " + detail::show_sw(res));
            }
            break;
        }
        }
        if (stop_at_first && r.failures) break;
    }
    return r;
}

} // namespace nlie
