#pragma once

#include "nlie/linalg.hpp"
#include "nlie/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nlie {

// lambda_i = lambda(E_{i,i})
using Weight = std::vector<Q>;

struct SLWeight {
    std::vector<Q> fund;  // coordinates on the fundamental weights
    Q central;            // sum of the entries

    friend bool operator==(const SLWeight& a, const SLWeight& b) {
        return a.fund == b.fund && a.central == b.central;
    }
};

struct NonDominantError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// a lowering operator left the computed region of an incomplete module slice
struct SliceTruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_dominant(const Weight& l) {
    for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        Q d = l[i] - l[i + 1];
        if (!is_integer(d) || d < 0) return false;
    }
    return true;
}

inline SLWeight to_sl(const Weight& l) {
    SLWeight s;
    s.central = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        s.central += l[i];
        if (i + 1 < l.size()) s.fund.push_back(l[i] - l[i + 1]);
    }
    return s;
}

inline Weight from_sl(const SLWeight& s) {
    std::size_t k = s.fund.size() + 1;
    Q acc = s.central;
    for (std::size_t t = 0; t < s.fund.size(); ++t) acc -= Q(static_cast<long>(t + 1)) * s.fund[t];
    Weight l(k);
    l[k - 1] = acc / Q(static_cast<long>(k));
    for (std::size_t i = k - 1; i-- > 0;) l[i] = l[i + 1] + s.fund[i];
    return l;
}

// Gram matrix on simple roots: 1 on the diagonal, -1/2 for neighbours
inline QMat root_gram(std::size_t rank, const Q& scale = 1) {
    QMat G = zeros(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) {
        G[i][i] = scale;
        if (i + 1 < rank) G[i][i + 1] = G[i + 1][i] = -scale / 2;
    }
    return G;
}

inline Q form(const QVec& mu, const QVec& nu, const Q& scale = 1) {
    if (mu.size() != nu.size()) throw std::invalid_argument("root vector length mismatch");
    QMat G = root_gram(mu.size(), scale);
    Q r = 0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = 0; j < nu.size(); ++j)
            if (G[i][j] != 0) r += mu[i] * G[i][j] * nu[j];
    return r;
}

// positive roots alpha_a + ... + alpha_b in simple-root coordinates
inline std::vector<QVec> positive_roots(std::size_t rank) {
    std::vector<QVec> out;
    for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b = a; b < rank; ++b) {
            QVec r(rank, Q(0));
            for (std::size_t t = a; t <= b; ++t) r[t] = 1;
            out.push_back(r);
        }
    return out;
}

// fundamental-weight coordinates -> simple-root coordinates (uses (pi_i, alpha_j) = delta_ij (alpha_j, alpha_j)/2)
inline QVec fund_to_root(const std::vector<Q>& fund, const Q& scale = 1) {
    std::size_t r = fund.size();
    if (r == 0) return {};
    QMat G = root_gram(r, scale);
    QVec rhs(r);
    for (std::size_t i = 0; i < r; ++i) rhs[i] = fund[i] * G[i][i] / 2;
    return matvec(inverse(G), rhs);
}

inline void require_dominant_integral(const std::vector<Q>& fund) {
    for (auto& f : fund)
        if (!is_integer(f) || f < 0) throw NonDominantError("weight is not dominant integral");
}

inline std::vector<std::vector<int>> root_lattice_cone(std::size_t rank, int max_height) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(rank, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == rank) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
        cur[i] = 0;
    };
    rec(0, max_height);
    std::stable_sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        return ha < hb;
    });
    return out;
}

struct WeightMultiplicity {
    std::vector<int> beta;   // lambda - mu on simple roots
    std::vector<Q> mu_fund;  // mu on fundamental weights
    Q mult;
};

// recursion (|l+d|^2 - |m+d|^2) m_mu = 2 sum_{a>0} sum_{k>=1} (mu + k a, a) m_{mu + k a}
inline std::vector<WeightMultiplicity> freudenthal(const SLWeight& lam, int depth, const Q& scale = 1) {
    require_dominant_integral(lam.fund);
    std::size_t r = lam.fund.size();
    QVec lr = fund_to_root(lam.fund, scale);
    QVec delta = fund_to_root(std::vector<Q>(r, Q(1)), scale);
    auto roots = positive_roots(r);
    auto norm2 = [&](const QVec& v) { return form(v, v, scale); };
    QVec ld(r);
    for (std::size_t i = 0; i < r; ++i) ld[i] = lr[i] + delta[i];
    Q top = norm2(ld);

    auto cone = root_lattice_cone(r, depth);
    std::map<std::vector<int>, Q> mult;
    std::vector<WeightMultiplicity> out;
    for (auto& beta : cone) {
        QVec mu(r);
        for (std::size_t i = 0; i < r; ++i) mu[i] = lr[i] - beta[i];
        Q m;
        bool is_top = std::all_of(beta.begin(), beta.end(), [](int x) { return x == 0; });
        if (is_top) {
            m = 1;
        } else {
            Q num = 0;
            for (auto& a : roots) {
                for (int k = 1;; ++k) {
                    std::vector<int> b2(r);
                    bool ok = true;
                    for (std::size_t i = 0; i < r; ++i) {
                        b2[i] = beta[i] - k * static_cast<int>(a[i].get_num().get_si());
                        if (b2[i] < 0) ok = false;
                    }
                    if (!ok) break;
                    auto it = mult.find(b2);
                    if (it == mult.end() || it->second == 0) continue;
                    QVec v(r);
                    for (std::size_t i = 0; i < r; ++i) v[i] = mu[i] + k * a[i];
                    num += 2 * form(v, a, scale) * it->second;
                }
            }
            QVec md(r);
            for (std::size_t i = 0; i < r; ++i) md[i] = mu[i] + delta[i];
            Q den = top - norm2(md);
            if (den == 0) {
                if (num != 0) throw std::logic_error("degenerate multiplicity recursion");
                m = 0;
            } else {
                m = num / den;
            }
        }
        mult[beta] = m;
        std::vector<Q> mf(r);
        for (std::size_t i = 0; i < r; ++i) {
            mf[i] = lam.fund[i] - 2 * beta[i];
            if (i > 0) mf[i] += beta[i - 1];
            if (i + 1 < r) mf[i] += beta[i + 1];
        }
        out.push_back({beta, mf, m});
    }
    return out;
}

inline Q weyl_dim(const SLWeight& lam) {
    require_dominant_integral(lam.fund);
    std::size_t r = lam.fund.size();
    QVec lr = fund_to_root(lam.fund);
    QVec delta = fund_to_root(std::vector<Q>(r, Q(1)));
    Q d = 1;
    for (auto& a : positive_roots(r)) {
        QVec ld(r);
        for (std::size_t i = 0; i < r; ++i) ld[i] = lr[i] + delta[i];
        d *= form(ld, a) / form(delta, a);
    }
    return d;
}

// p with lambda = (0,..,0,-1,..,-1), p trailing -1 entries, 1 <= p <= k
inline std::optional<int> exceptional_index(const Weight& l) {
    int k = static_cast<int>(l.size());
    int p = 0;
    while (p < k && l[k - 1 - p] == -1) ++p;
    if (p == 0) return std::nullopt;
    for (int i = 0; i < k - p; ++i)
        if (l[i] != 0) return std::nullopt;
    return p;
}

inline Weight exceptional_weight(int k, int p) {
    Weight l(k, Q(0));
    for (int i = k - p; i < k; ++i) l[i] = -1;
    return l;
}

// height of lambda - mu where d = lambda - mu in epsilon coordinates
inline int height_of_offset(const std::vector<int>& d) {
    int h = 0, acc = 0;
    for (std::size_t t = 0; t + 1 < d.size(); ++t) {
        acc += d[t];
        h += acc;
    }
    return h;
}

using SparseCol = std::vector<std::pair<int, Q>>;

// finite piece of a gl_k-module: basis with weights, all E_{i,j} as sparse columns
struct GLModuleSlice {
    int k = 0;
    Weight highest;
    std::vector<Weight> weights;
    std::vector<int> heights;
    int depth = 0;
    bool complete = true;
    // ops[i*k + j][col]
    std::vector<std::vector<SparseCol>> ops;
    // set where the true image leaves the slice
    std::vector<std::vector<char>> overflow;

    int dim() const { return static_cast<int>(weights.size()); }

    void init(int kk, int d) {
        k = kk;
        ops.assign(k * k, std::vector<SparseCol>(d));
        overflow.assign(k * k, std::vector<char>(d, 0));
    }

    // E_{i,j} on basis vector col, 0-based indices
    const SparseCol& column(int i, int j, int col) const {
        if (overflow[i * k + j][col])
            throw SliceTruncationError("E_" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                       " leaves the module slice");
        return ops[i * k + j][col];
    }

    QVec apply(int i, int j, const QVec& v) const {
        QVec r(dim(), Q(0));
        for (int c = 0; c < dim(); ++c) {
            if (v[c] == 0) continue;
            for (auto& [row, x] : column(i, j, c)) r[row] += x * v[c];
        }
        return r;
    }

    QVec unit(int i) const {
        QVec v(dim(), Q(0));
        v.at(i) = 1;
        return v;
    }
};

inline GLModuleSlice scalar_module(int k, const Q& c) {
    GLModuleSlice F;
    F.init(k, 1);
    F.highest = Weight(k, c);
    F.weights = {F.highest};
    F.heights = {0};
    if (c != 0)
        for (int i = 0; i < k; ++i) F.ops[i * k + i][0] = {{0, c}};
    return F;
}

// dual of the p-th exterior power of the standard module
inline GLModuleSlice exceptional_module(int k, int p) {
    if (p < 1 || p > k) throw std::out_of_range("exceptional index out of range");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == p) {
            subsets.push_back(cur);
            return;
        }
        for (int s = start; s < k; ++s) {
            cur.push_back(s);
            rec(s + 1);
            cur.pop_back();
        }
    };
    rec(0);
    // highest vector first: e*_{k-p} ^ .. ^ e*_{k-1}
    std::reverse(subsets.begin(), subsets.end());
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<int>(i);

    GLModuleSlice F;
    F.init(k, static_cast<int>(subsets.size()));
    F.highest = exceptional_weight(k, p);
    for (auto& S : subsets) {
        Weight w(k, Q(0));
        for (int s : S) w[s] = -1;
        std::vector<int> d(k);
        for (int a = 0; a < k; ++a) d[a] = static_cast<int>(Q(F.highest[a] - w[a]).get_num().get_si());
        F.weights.push_back(w);
        F.heights.push_back(height_of_offset(d));
    }
    // E_{i,j} e*_s = -delta_{i,s} e*_j
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (std::size_t c = 0; c < subsets.size(); ++c) {
                const auto& S = subsets[c];
                auto pos = std::find(S.begin(), S.end(), i);
                if (pos == S.end()) continue;
                if (i != j && std::find(S.begin(), S.end(), j) != S.end()) continue;
                std::vector<int> T = S;
                T[pos - S.begin()] = j;
                int sign = -1;
                for (std::size_t a = 1; a < T.size(); ++a)
                    for (std::size_t b = a; b > 0 && T[b - 1] > T[b]; --b) {
                        std::swap(T[b - 1], T[b]);
                        sign = -sign;
                    }
                F.ops[i * k + j][c].push_back({index.at(T), Q(sign)});
            }
    return F;
}

// Verma module of gl_k in the PBW basis of lowering operators, truncated by height
class GLVerma {
public:
    using Word = std::vector<int>;  // nondecreasing indices into lowering()
    using Vec = std::map<Word, Q>;

    GLVerma(Weight lam, int depth) : lam_(std::move(lam)), k_(static_cast<int>(lam_.size())), depth_(depth) {
        for (int a = 0; a < k_; ++a)
            for (int b = 0; b < a; ++b) low_.push_back({a, b});
        std::sort(low_.begin(), low_.end());
        for (std::size_t y = 0; y < low_.size(); ++y) low_index_[low_[y]] = static_cast<int>(y);
        std::vector<Word> frontier{{}};
        words_.push_back({});
        while (!frontier.empty()) {
            std::vector<Word> next;
            for (auto& w : frontier)
                for (int y = w.empty() ? 0 : w.back(); y < static_cast<int>(low_.size()); ++y) {
                    Word w2 = w;
                    w2.push_back(y);
                    if (height(w2) <= depth_) next.push_back(w2);
                }
            words_.insert(words_.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
    }

    int k() const { return k_; }
    int depth() const { return depth_; }
    const Weight& lambda() const { return lam_; }
    const std::vector<Word>& words() const { return words_; }
    const std::vector<std::pair<int, int>>& lowering() const { return low_; }

    int height(const Word& w) const {
        int h = 0;
        for (int y : w) h += low_[y].first - low_[y].second;
        return h;
    }
    // lambda - weight(w) in epsilon coordinates
    std::vector<int> offset(const Word& w) const {
        std::vector<int> d(k_, 0);
        for (int y : w) {
            d[low_[y].first] -= 1;
            d[low_[y].second] += 1;
        }
        return d;
    }
    Q weight_entry(const Word& w, int i) const {
        Q x = lam_[i];
        for (int y : w) {
            if (low_[y].first == i) x += 1;
            if (low_[y].second == i) x -= 1;
        }
        return x;
    }

    bool overflows(int i, int j, const Word& w) const { return i > j && height(w) + (i - j) > depth_; }

    // E_{i,j} * w, 0-based; caller checks overflows() first
    Vec lmul_word(int i, int j, const Word& w) const {
        auto key = std::make_pair(i * k_ + j, w);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Vec r;
        if (i == j) {
            Q x = weight_entry(w, i);
            if (x != 0) r[w] = x;
        } else if (i > j && (w.empty() || low_index_.at({i, j}) <= w.front())) {
            Word w2{low_index_.at({i, j})};
            w2.insert(w2.end(), w.begin(), w.end());
            r[w2] = 1;
        } else if (!w.empty()) {
            auto [a, b] = low_[w.front()];
            Word rest(w.begin() + 1, w.end());
            // E_ij y rest = y (E_ij rest) + [E_ij, y] rest
            r = lmul(a, b, lmul_word(i, j, rest));
            if (j == a) add_into(r, lmul_word(i, b, rest), 1);
            if (b == i) add_into(r, lmul_word(a, j, rest), -1);
        }
        memo_.emplace(key, r);
        return r;
    }

    Vec lmul(int i, int j, const Vec& v) const {
        Vec r;
        for (auto& [w, c] : v) add_into(r, lmul_word(i, j, w), c);
        return r;
    }

    // contravariant form value <u, w>
    Q shapovalov(const Word& u, const Word& w) const {
        Vec v{{w, Q(1)}};
        for (int y : u) v = lmul(low_[y].second, low_[y].first, v);
        auto it = v.find(Word{});
        return it == v.end() ? Q(0) : it->second;
    }

private:
    static void add_into(Vec& r, const Vec& v, const Q& c) {
        for (auto& [w, x] : v) {
            auto [it, fresh] = r.try_emplace(w, c * x);
            if (!fresh) {
                it->second += c * x;
                if (it->second == 0) r.erase(it);
            }
        }
    }

    Weight lam_;
    int k_;
    int depth_;
    std::vector<std::pair<int, int>> low_;
    std::map<std::pair<int, int>, int> low_index_;
    std::vector<Word> words_;
    mutable std::map<std::pair<int, Word>, Vec> memo_;
};

struct WeightSpaceRank {
    std::vector<int> offset;  // lambda - mu, epsilon coordinates
    int height;
    std::size_t verma_dim;
    std::size_t rank;
};

namespace detail {

struct WeightSpace {
    std::vector<GLVerma::Word> words;
    QMat gram;
    std::vector<std::size_t> pivots;  // quotient basis inside words
    QMat proj;                        // rank x words: coordinates modulo the radical
};

inline std::map<std::vector<int>, WeightSpace> weight_spaces(const GLVerma& V) {
    std::map<std::vector<int>, WeightSpace> spaces;
    for (auto& w : V.words()) spaces[V.offset(w)].words.push_back(w);
    for (auto& [off, S] : spaces) {
        std::size_t m = S.words.size();
        S.gram = zeros(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b) S.gram[a][b] = S.gram[b][a] = V.shapovalov(S.words[a], S.words[b]);
        QMat R = S.gram;
        S.pivots = rref(R);
        std::size_t r = S.pivots.size();
        if (r == 0) continue;
        QMat sub = zeros(r, r), rows = zeros(r, m);
        for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t b = 0; b < r; ++b) sub[a][b] = S.gram[S.pivots[a]][S.pivots[b]];
            rows[a] = S.gram[S.pivots[a]];
        }
        QMat inv = inverse(sub);
        S.proj = zeros(r, m);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t c = 0; c < m; ++c) {
                Q s = 0;
                for (std::size_t b = 0; b < r; ++b)
                    if (inv[a][b] != 0 && rows[b][c] != 0) s += inv[a][b] * rows[b][c];
                S.proj[a][c] = s;
            }
    }
    return spaces;
}

} // namespace detail

// ranks of the contravariant form on each weight space of height <= depth
inline std::vector<WeightSpaceRank> contravariant_ranks(const Weight& lam, int depth) {
    if (!is_dominant(lam)) throw NonDominantError("weight is not dominant");
    GLVerma V(lam, depth);
    std::vector<WeightSpaceRank> out;
    for (auto& [off, S] : detail::weight_spaces(V))
        out.push_back({off, height_of_offset(off), S.words.size(), S.pivots.size()});
    return out;
}

// irreducible quotient restricted to heights <= depth
inline GLModuleSlice truncated_irreducible(const Weight& lam, int depth) {
    if (!is_dominant(lam)) throw NonDominantError("weight is not dominant");
    int k = static_cast<int>(lam.size());
    GLVerma V(lam, depth);
    auto spaces = detail::weight_spaces(V);

    // quotient basis: (offset, pivot position), highest first
    std::vector<std::pair<std::vector<int>, std::size_t>> basis;
    std::map<std::vector<int>, std::size_t> first_index;
    std::vector<std::vector<int>> order;
    for (auto& [off, S] : spaces) order.push_back(off);
    std::stable_sort(order.begin(), order.end(), [](auto& a, auto& b) { return height_of_offset(a) < height_of_offset(b); });
    for (auto& off : order) {
        first_index[off] = basis.size();
        for (std::size_t p = 0; p < spaces[off].pivots.size(); ++p) basis.push_back({off, p});
    }

    GLModuleSlice F;
    F.init(k, static_cast<int>(basis.size()));
    F.highest = lam;
    F.depth = depth;
    for (auto& [off, p] : basis) {
        Weight w(k);
        for (int a = 0; a < k; ++a) w[a] = lam[a] - off[a];
        F.weights.push_back(w);
        F.heights.push_back(height_of_offset(off));
    }
    SLWeight sl = to_sl(lam);
    F.complete = Q(static_cast<long>(basis.size())) == weyl_dim(sl);

    for (std::size_t col = 0; col < basis.size(); ++col) {
        auto& [off, p] = basis[col];
        const auto& S = spaces.at(off);
        const auto& word = S.words[S.pivots[p]];
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (V.overflows(i, j, word)) {
                    if (!F.complete) F.overflow[i * k + j][col] = 1;
                    continue;
                }
                GLVerma::Vec img = V.lmul_word(i, j, word);
                if (img.empty()) continue;
                std::vector<int> toff = off;
                toff[i] -= 1;
                toff[j] += 1;
                auto sit = spaces.find(toff);
                if (sit == spaces.end() || sit->second.pivots.empty()) continue;
                const auto& T = sit->second;
                QVec x(T.words.size(), Q(0));
                for (auto& [w, c] : img) {
                    auto pos = std::find(T.words.begin(), T.words.end(), w);
                    x[pos - T.words.begin()] = c;
                }
                QVec y = matvec(T.proj, x);
                for (std::size_t a = 0; a < y.size(); ++a)
                    if (y[a] != 0) F.ops[i * k + j][col].push_back({static_cast<int>(first_index.at(toff) + a), y[a]});
            }
    }
    return F;
}

} // namespace nlie
