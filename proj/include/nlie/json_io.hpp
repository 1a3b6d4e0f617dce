#pragma once

#include "nlie/classify.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace nlie {

using json = nlohmann::json;

inline json to_json(const Poly& p) { return p.to_string(); }

inline json to_json(const VectorField& X) {
    json a = json::array();
    for (auto& p : X.coeffs()) a.push_back(p.to_string());
    return a;
}

inline VectorField field_from_json(const json& j, int nv) {
    if (!j.is_array() || static_cast<int>(j.size()) != nv)
        throw ArityError("vector field needs " + std::to_string(nv) + " coefficients");
    std::vector<Poly> cs;
    for (auto& c : j) cs.push_back(Poly::parse(nv, c.get<std::string>()));
    return VectorField(cs);
}

// [{"d": [..], "v": basis index, "c": "p/q"}, ...]
inline json to_json(const VermaElement& v) {
    json a = json::array();
    for (auto& [k, c] : v.terms()) a.push_back({{"d", k.first}, {"v", k.second}, {"c", to_string(c)}});
    return a;
}

inline VermaElement verma_from_json(const json& j, int nv) {
    VermaElement v;
    for (auto& t : j) {
        Monomial d = t.at("d").get<Monomial>();
        if (static_cast<int>(d.size()) != nv) throw ArityError("D multi-index has wrong length");
        const json& c = t.at("c");
        v.add({d, t.at("v").get<int>()}, c.is_string() ? parse_rational(c.get<std::string>()) : Q(c.get<long>()));
    }
    return v;
}

inline json to_json(const UGenerator& g) {
    json tail = json::array();
    for (auto& t : g.tail) tail.push_back({{"sign", t.sign}, {"first", to_json(t.first)}, {"second", to_json(t.second)}});
    return {{"head", to_json(g.head)}, {"tail", tail}};
}

inline json to_json(const GeneratorSpec& s) {
    json a = json::array();
    for (auto& m : s.fs) a.push_back(m);
    return a;
}

inline json to_json(const Weight& w) {
    json a = json::array();
    for (auto& x : w) a.push_back(to_string(x));
    return a;
}

inline json to_json(const Verdict& v) {
    json j = {{"accepted", v.accepted},
              {"module_kind", kind_label(v.kind, v.p)},
              {"checked_tuples", v.checked_tuples},
              {"total_tuples", v.total_tuples},
              {"slot_deg", v.slot_deg},
              {"total_deg", v.total_deg},
              {"depth", v.depth}};
    if (v.witness) {
        j["witness"] = {{"spec", to_json(v.witness->spec)},
                        {"spec_text", v.witness->spec.to_string()},
                        {"image", to_json(v.witness->image)},
                        {"image_text", v.witness->image.to_string()}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline json to_json(const ScanRow& r) {
    json j = {{"weight", to_json(r.lam)},
              {"predicate", r.predicted.accepted},
              {"predicted_kind", kind_label(r.predicted.kind, r.predicted.p)},
              {"verdict", to_json(r.verdict)},
              {"agree", r.agree}};
    if (r.monotone) j["monotone"] = *r.monotone;
    return j;
}

inline Weight parse_weight(const std::string& s) {
    Weight w;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(parse_rational(item));
    return w;
}

} // namespace nlie
