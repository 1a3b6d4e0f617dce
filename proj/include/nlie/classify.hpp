#pragma once

#include "nlie/glrep.hpp"
#include "nlie/qgen.hpp"
#include "nlie/verma.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace nlie {

enum class ModuleKind { M, J };

struct Prediction {
    bool accepted = false;
    ModuleKind kind = ModuleKind::M;
    int p = 0;  // exterior degree for J(F^p)
};

inline std::string kind_label(ModuleKind k, int p) {
    return k == ModuleKind::M ? "M(F)" : "J(F^" + std::to_string(p) + ")";
}

// the classification of irreducible modules over the simple n-Lie algebra of vector fields
inline Prediction classification_predicate(int n, const Weight& lam) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    if (static_cast<int>(lam.size()) != n - 1) throw ArityError("weight must have n-1 entries");
    if (!is_dominant(lam)) throw NonDominantError("weight is not dominant");
    Prediction r;
    if (auto p = exceptional_index(lam)) {
        r.kind = ModuleKind::J;
        r.p = *p;
        r.accepted = n == 3 || *p == n - 1;
        return r;
    }
    bool equal = std::all_of(lam.begin(), lam.end(), [&](const Q& x) { return x == lam[0]; });
    if (equal) {
        r.accepted = lam[0] != -1;
        return r;
    }
    if (n == 3) r.accepted = lam[0] == -1 - lam[1] && lam[1] != 0;
    return r;
}

struct Witness {
    GeneratorSpec spec;
    VermaElement image;
};

struct Verdict {
    bool accepted = true;
    ModuleKind kind = ModuleKind::M;
    int p = 0;
    std::optional<Witness> witness;
    std::size_t checked_tuples = 0;
    std::size_t total_tuples = 0;
    int slot_deg = 2, total_deg = 0, depth = 0;
};

struct VerifyOptions {
    int slot_deg = 2;
    int total_deg = -1;  // default 2n-2
    int depth = -1;      // default max(2, 2(n-2))
    int jobs = 1;
    int maxdeg = 2;
};

// module F realizing the irreducible of highest weight lam
inline GLModuleSlice build_module(const Weight& lam, int depth) {
    int k = static_cast<int>(lam.size());
    if (auto p = exceptional_index(lam)) return exceptional_module(k, *p);
    if (std::all_of(lam.begin(), lam.end(), [&](const Q& x) { return x == lam[0]; })) return scalar_module(k, lam[0]);
    return truncated_irreducible(lam, depth);
}

inline Verdict brute_verify(int n, const Weight& lam, VerifyOptions opt = {}) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    if (static_cast<int>(lam.size()) != n - 1) throw ArityError("weight must have n-1 entries");
    if (!is_dominant(lam)) throw NonDominantError("weight is not dominant");
    if (opt.total_deg < 0) opt.total_deg = 2 * n - 2;
    if (opt.depth < 0) opt.depth = default_depth(n);
    Verdict v;
    v.slot_deg = opt.slot_deg;
    v.total_deg = opt.total_deg;
    v.depth = opt.depth;
    auto ex = exceptional_index(lam);
    if (ex) {
        v.kind = ModuleKind::J;
        v.p = *ex;
    }
    VermaSlice S(build_module(lam, opt.depth), opt.maxdeg);
    std::unique_ptr<SingPlus> sing;
    if (ex) sing = std::make_unique<SingPlus>(S);

    auto specs = enumerate_specs(n, opt.slot_deg, opt.total_deg);
    v.total_tuples = specs.size();
    auto fails = [&](std::size_t i, VermaElement& out) {
        out = apply_to_hw(abstract_qgen(specs[i]), S);
        return ex ? !sing->contains(out) : !out.is_zero();
    };

    // least failing index wins so the witness does not depend on scheduling
    std::atomic<std::size_t> best{specs.size()};
    std::atomic<std::size_t> checked{0};
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::optional<Witness> wit;
    std::exception_ptr err;
    auto worker = [&] {
        try {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= specs.size() || i >= best.load()) return;
                VermaElement img;
                bool bad = fails(i, img);
                checked.fetch_add(1);
                if (!bad) continue;
                std::lock_guard<std::mutex> lk(mu);
                if (i < best.load()) {
                    best = i;
                    wit = Witness{specs[i], img};
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(mu);
            if (!err) err = std::current_exception();
            best = 0;
        }
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);
    v.checked_tuples = checked.load();
    v.accepted = !wit.has_value();
    v.witness = std::move(wit);
    return v;
}

struct ScanRow {
    Weight lam;
    Prediction predicted;
    Verdict verdict;
    bool agree = false;
    // set if the accepted verdict flips under larger bounds
    std::optional<bool> monotone;
};

// all dominant weights with entries in [lo, hi]
inline std::vector<Weight> dominant_box(int n, int lo, int hi) {
    std::vector<Weight> out;
    Weight cur;
    std::function<void(int)> rec = [&](int upper) {
        if (static_cast<int>(cur.size()) == n - 1) {
            out.push_back(cur);
            return;
        }
        for (int x = upper; x >= lo; --x) {
            cur.push_back(Q(x));
            rec(x);
            cur.pop_back();
        }
    };
    if (n >= 2 && lo <= hi) rec(hi);
    return out;
}

inline ScanRow scan_point(int n, const Weight& lam, const VerifyOptions& opt, bool monotonicity = false) {
    ScanRow row;
    row.lam = lam;
    row.predicted = classification_predicate(n, lam);
    row.verdict = brute_verify(n, lam, opt);
    row.agree = row.predicted.accepted == row.verdict.accepted && row.predicted.kind == row.verdict.kind;
    if (monotonicity && row.verdict.accepted) {
        VerifyOptions wider = opt;
        wider.total_deg = (opt.total_deg < 0 ? 2 * n - 2 : opt.total_deg) + 1;
        bool ok = brute_verify(n, lam, wider).accepted;
        wider = opt;
        wider.slot_deg = std::max(3, opt.slot_deg);
        ok = ok && brute_verify(n, lam, wider).accepted;
        row.monotone = ok;
    }
    return row;
}

inline std::vector<ScanRow> scan(int n, const std::vector<Weight>& points, const VerifyOptions& opt,
                                 bool monotonicity = false) {
    std::vector<ScanRow> rows;
    for (auto& lam : points) rows.push_back(scan_point(n, lam, opt, monotonicity));
    return rows;
}

inline bool all_agree(const std::vector<ScanRow>& rows) {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ScanRow& r) { return r.agree && r.monotone.value_or(true); });
}

} // namespace nlie
