#include "nlie/json_io.hpp"
#include "nlie/props.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

using namespace nlie;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(detail::strip(item));
    return out;
}

// "1,0;0,2" -> exponent vectors; "x1*x2;1" is accepted too
std::vector<Monomial> parse_multi_indices(const std::string& s, int nv) {
    std::vector<Monomial> out;
    for (auto& part : split(s, ';')) {
        if (part.find('x') != std::string::npos || part == "1") {
            Poly p = Poly::parse(nv, part);
            if (p.size() != 1 || p.terms().begin()->second != 1) throw std::invalid_argument("not a monomial: " + part);
            out.push_back(p.terms().begin()->first);
            continue;
        }
        Monomial m;
        for (auto& e : split(part, ',')) m.push_back(std::stoi(e));
        if (static_cast<int>(m.size()) != nv) throw ArityError("multi-index " + part + " needs " + std::to_string(nv) + " entries");
        out.push_back(m);
    }
    return out;
}

EquationParams parse_params(const std::string& s) {
    EquationParams p;
    if (s.empty()) return p;
    for (auto& kv : split(s, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("params are name=value pairs: " + kv);
        std::string k = detail::strip(kv.substr(0, eq));
        int v = std::stoi(kv.substr(eq + 1));
        if (k == "j") p.j = v;
        else if (k == "k") p.k = v;
        else if (k == "l") p.l = v;
        else if (k == "m") p.m = v;
        else if (k == "t") p.t = v;
        else throw std::invalid_argument("unknown parameter " + k);
    }
    return p;
}

std::string read_stdin() {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"n-Lie algebra toolkit: brackets, enveloping-algebra generators and module classification"};
    app.set_config("--config", "", "key=value file with default options (e.g. scan.slot-deg=2)");
    app.require_subcommand(1);

    // bracket
    auto* br = app.add_subcommand("bracket", "evaluate one n-ary bracket");
    std::string alg = "w";
    int n = 3;
    std::vector<std::string> args;
    br->add_option("--algebra", alg, "w | s | vp | sw")->check(CLI::IsMember({"w", "s", "vp", "sw"}));
    br->add_option("--n", n, "arity")->required();
    br->add_option("args", args, "arguments: polys, j:poly for sw, comma-separated rationals for vp")->required();

    // jacobi
    auto* jac = app.add_subcommand("jacobi", "randomized Filippov-Jacobi check");
    int trials = 100, max_degree = 2;
    std::uint64_t seed = 1;
    bool corrupt = false;
    jac->add_option("--algebra", alg)->check(CLI::IsMember({"w", "s", "vp", "sw"}));
    jac->add_option("--n", n)->required();
    jac->add_option("--trials", trials);
    jac->add_option("--seed", seed);
    jac->add_option("--max-degree", max_degree);
    jac->add_flag("--corrupt", corrupt, "use the sign-corrupted W bracket");

    // adfield
    auto* adf = app.add_subcommand("adfield", "vector field of f_1 ^ ... ^ f_{n-1}");
    adf->add_option("--n", n)->required();
    adf->add_option("polys", args)->required();

    // freudenthal
    auto* fr = app.add_subcommand("freudenthal", "weight multiplicities of an irreducible gl module");
    std::string weight;
    int depth = 3;
    bool ranks = false;
    fr->add_option("--n", n)->required();
    fr->add_option("--weight", weight, "l1,...,l_{n-1}")->required();
    fr->add_option("--depth", depth);
    fr->add_flag("--ranks", ranks, "also print contravariant-form ranks");

    // act
    auto* act = app.add_subcommand("act", "act with a vector field on the induced module");
    int maxdeg = 2;
    std::string field_text, elem_text;
    act->add_option("--n", n)->required();
    act->add_option("--weight", weight)->required();
    act->add_option("--maxdeg", maxdeg);
    act->add_option("--depth", depth, "module depth (default max(2, 2(n-2)))")->default_val(-1);
    act->add_option("--field", field_text, "JSON array of coefficient polys");
    act->add_option("--element", elem_text, "JSON array of {d, v, c}");

    // qgen
    auto* qg = app.add_subcommand("qgen", "enveloping-algebra generator for 2n-2 monomials");
    std::string fs_text, reading = "abstract";
    qg->add_option("--n", n)->required();
    qg->add_option("--fs", fs_text, "I1;I2;... exponent vectors or monomials")->required();
    qg->add_option("--form", reading, "abstract | explicit | literal")
        ->check(CLI::IsMember({"abstract", "explicit", "literal"}));

    // repro
    auto* rp = app.add_subcommand("repro", "evaluate a catalogued action identity");
    int eq = 22;
    std::string params;
    rp->add_option("--eq", eq)->required();
    rp->add_option("--n", n)->required();
    rp->add_option("--params", params, "j=1,k=2,...");
    rp->add_option("--weight", weight)->required();

    // classify / scan
    auto* cl = app.add_subcommand("classify", "predicate and brute-force verdict for one weight");
    VerifyOptions opt;
    cl->add_option("--n", n)->required();
    cl->add_option("--weight", weight)->required();
    cl->add_option("--slot-deg", opt.slot_deg);
    cl->add_option("--total-deg", opt.total_deg);
    cl->add_option("--depth", opt.depth);
    cl->add_option("--jobs", opt.jobs);

    auto* sc = app.add_subcommand("scan", "cross-check predicate and brute force on a weight box");
    std::string box = "-3:3", format = "tsv";
    bool mono = false;
    sc->add_option("--n", n)->required();
    sc->add_option("--box", box, "lo:hi");
    sc->add_option("--slot-deg", opt.slot_deg);
    sc->add_option("--total-deg", opt.total_deg);
    sc->add_option("--depth", opt.depth);
    sc->add_option("--jobs", opt.jobs);
    sc->add_option("--seed", seed, "accepted for interface uniformity; the scan is deterministic");
    sc->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
    sc->add_flag("--monotonicity", mono, "re-run accepted points with larger bounds");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*br) {
            Algebra a = parse_algebra(alg);
            if (static_cast<int>(args.size()) != n) throw std::invalid_argument("bracket needs exactly n arguments");
            if (a == Algebra::W || a == Algebra::S) {
                int nv = a == Algebra::W ? n - 1 : n;
                std::vector<Poly> ps;
                for (auto& s : args) ps.push_back(Poly::parse(nv, s));
                std::cout << (a == Algebra::W ? bracket_w(ps) : bracket_s(ps)).to_string() << "\n";
            } else if (a == Algebra::VP) {
                std::vector<CVector> vs;
                for (auto& s : args) {
                    CVector v;
                    for (auto& c : split(s, ',')) v.coords.push_back(parse_rational(c));
                    vs.push_back(v);
                }
                std::cout << detail::show_cvector(bracket_vp(vs)) << "\n";
            } else {
                std::vector<TaggedSeries> ts;
                for (auto& s : args) {
                    auto colon = s.find(':');
                    if (colon == std::string::npos) throw std::invalid_argument("sw arguments are j:poly");
                    ts.push_back({std::stoi(s.substr(0, colon)), Poly::parse(1, s.substr(colon + 1))});
                }
                TaggedSeries r = bracket_sw(ts);
                std::cout << (r.copy ? std::to_string(r.copy) + ":" + r.series.to_string() : "0") << "\n";
            }
            return 0;
        }
        if (*jac) {
            JacobiResult r = jacobi_suite(parse_algebra(alg), n, trials, seed, max_degree, corrupt);
            if (r.failures == 0) {
                std::cout << "PASS " << r.trials << " trials\n";
                return 0;
            }
            std::cout << "FAIL " << r.failures << "/" << r.trials << " trials; first at trial " << r.first_failure
                      << ": " << r.counterexample << "\n";
            return 1;
        }
        if (*adf) {
            std::vector<Poly> ps;
            for (auto& s : args) ps.push_back(Poly::parse(n - 1, s));
            if (static_cast<int>(ps.size()) != n - 1) throw std::invalid_argument("adfield needs n-1 polys");
            VectorField X = ad_field(ps);
            std::string out;
            for (int i = 0; i < n - 1; ++i)
                out += (i ? " + " : "") + ("(" + X[i].to_string() + ") D" + std::to_string(i + 1));
            std::cout << out << "\n";
            return 0;
        }
        if (*fr) {
            Weight lam = parse_weight(weight);
            if (static_cast<int>(lam.size()) != n - 1) throw ArityError("weight needs n-1 entries");
            if (!is_dominant(lam)) throw NonDominantError("weight is not dominant");
            json out = json::array();
            std::map<std::vector<int>, std::size_t> rank_of;
            if (ranks)
                for (auto& w : contravariant_ranks(lam, depth)) {
                    std::vector<int> beta;
                    int acc = 0;
                    for (std::size_t t = 0; t + 1 < w.offset.size(); ++t) beta.push_back(acc += w.offset[t]);
                    rank_of[beta] = w.rank;
                }
            for (auto& m : freudenthal(to_sl(lam), depth)) {
                json row = {{"beta", m.beta}, {"weight_fund", to_json(m.mu_fund)}, {"mult", to_string(m.mult)}};
                if (ranks) row["contravariant_rank"] = rank_of.count(m.beta) ? rank_of[m.beta] : 0;
                out.push_back(row);
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*act) {
            Weight lam = parse_weight(weight);
            if (static_cast<int>(lam.size()) != n - 1) throw ArityError("weight needs n-1 entries");
            json in;
            if (field_text.empty() || elem_text.empty()) in = json::parse(read_stdin());
            json jf = field_text.empty() ? in.at("field") : json::parse(field_text);
            json je = elem_text.empty() ? in.at("element") : json::parse(elem_text);
            VermaSlice S(build_module(lam, depth < 0 ? default_depth(n) : depth), maxdeg);
            VermaElement r = S.act(field_from_json(jf, n - 1), verma_from_json(je, n - 1));
            std::cout << json{{"image", to_json(r)}, {"text", r.to_string()}}.dump(2) << "\n";
            return 0;
        }
        if (*qg) {
            GeneratorSpec s{parse_multi_indices(fs_text, n - 1)};
            s.validate();
            if (s.n() != n) throw std::invalid_argument("need 2n-2 multi-indices");
            UGenerator g = reading == "abstract" ? abstract_qgen(s)
                                                 : explicit_qgen(s, reading == "literal" ? Reading::Literal : Reading::Corrected);
            std::cout << to_json(g).dump(2) << "\n";
            return 0;
        }
        if (*rp) {
            Weight lam = parse_weight(weight);
            ReproReport r = reproduce_equation(eq, n, parse_params(params), lam);
            std::cout << (r.match ? "MATCH" : "MISMATCH") << "\n";
            std::cout << "scenario: " << r.scenario << "  tuple: " << r.spec.to_string() << "\n";
            std::cout << "computed: " << r.lhs.to_string() << "\n";
            std::cout << "stated:   " << (r.factor == 1 ? "" : to_string(r.factor) + " * (") << r.rhs.to_string()
                      << (r.factor == 1 ? "" : ")") << "\n";
            return r.match ? 0 : 2;
        }
        if (*cl) {
            Weight lam = parse_weight(weight);
            Prediction p = classification_predicate(n, lam);
            Verdict v = brute_verify(n, lam, opt);
            json out = to_json(v);
            out["predicate"] = {{"accepted", p.accepted}, {"module_kind", kind_label(p.kind, p.p)}};
            out["agree"] = p.accepted == v.accepted;
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*sc) {
            auto c = box.find(':');
            if (c == std::string::npos) throw std::invalid_argument("box is lo:hi");
            int lo = std::stoi(box.substr(0, c)), hi = std::stoi(box.substr(c + 1));
            auto rows = scan(n, dominant_box(n, lo, hi), opt, mono);
            if (format == "json") {
                json out = json::array();
                for (auto& r : rows) out.push_back(to_json(r));
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "weight\tpredicate\tverdict\tkind\tchecked\tagree" << (mono ? "\tmonotone" : "") << "\n";
                for (auto& r : rows) {
                    std::string w;
                    for (auto& x : r.lam) w += (w.empty() ? "" : ",") + to_string(x);
                    std::cout << w << "\t" << (r.predicted.accepted ? "accept" : "reject") << "\t"
                              << (r.verdict.accepted ? "accept" : "reject") << "\t" << kind_label(r.verdict.kind, r.verdict.p)
                              << "\t" << r.verdict.checked_tuples << "\t" << (r.agree ? "yes" : "NO");
                    if (mono) std::cout << "\t" << (r.monotone ? (*r.monotone ? "yes" : "NO") : "-");
                    std::cout << "\n";
                }
            }
            return all_agree(rows) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
