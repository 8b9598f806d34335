#include "endostar/json_io.hpp"

namespace endostar {

json to_json(const GroupInstance& G, const GroupElement& g) {
    if (const auto* v = std::get_if<VecZ>(&g.payload)) {
        json a = json::array();
        for (auto& [i, c] : *v) a.push_back({i, c});
        return a;
    }
    if (const auto* w = std::get_if<Word>(&g.payload)) {
        json a = json::array();
        for (int32_t l : *w) a.push_back({std::abs(l), l > 0 ? 1 : -1});
        return a;
    }
    return json(std::get<int64_t>(g.payload));
}

GroupElement element_from_json(const GroupInstance& G, const json& j) {
    const std::string& id = G.id();
    if (id == "times2") {
        if (!j.is_number_integer())
            throw Error(ErrorCode::ParseError, "times2 element must be an integer");
        return GroupElement(j.get<int64_t>());
    }
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "element must be an array");
    if (id == "shift-z") {
        VecZ v;
        for (auto& e : j) v.push_back({e.at(0).get<int32_t>(), e.at(1).get<int64_t>()});
        std::sort(v.begin(), v.end());
        GroupElement out = G.identity();
        for (auto& [i, c] : v) out = G.mul(out, GroupElement(VecZ{{i, c}}));
        return out;
    }
    // free-shift: multiply letters so the word reduces
    GroupElement out = G.identity();
    for (auto& e : j) {
        int32_t idx = e.at(0).get<int32_t>();
        int32_t sgn = e.at(1).get<int32_t>();
        if (idx < 1 || (sgn != 1 && sgn != -1))
            throw Error(ErrorCode::ParseError, "bad letter in free-shift element");
        out = G.mul(out, GroupElement(Word{sgn > 0 ? idx : -idx}));
    }
    return out;
}

json to_json(const GroupInstance& G, const LatticeSubgroup& L) {
    json a = json::array();
    for (auto& t : L.terms) a.push_back({{"n", t.n}, {"baseId", G.bases()[t.base]}});
    return a;
}

LatticeSubgroup subgroup_from_json(const GroupInstance& G, const json& j) {
    std::vector<LatticeTerm> terms;
    for (auto& e : j)
        terms.push_back(LatticeTerm{e.at("n").get<int>(), G.base_index(e.at("baseId"))});
    return G.make_subgroup(terms);
}

json to_json(const GroupInstance& G, const BasicCoset& c) {
    return json{{"rep", to_json(G, c.rep)}, {"sub", to_json(G, c.sub)}};
}

BasicCoset coset_from_json(const GroupInstance& G, const json& j) {
    return G.make_coset(element_from_json(G, j.at("rep")), subgroup_from_json(G, j.at("sub")));
}

json to_json(const GroupInstance& G, const VirtualIndicator& v) {
    json a = json::array();
    for (auto& [c, k] : v.terms) a.push_back({{"coset", to_json(G, c)}, {"coeff", k}});
    return a;
}

json to_json(const Scalar& c) {
    return json{{"re", rational_to_string(c.re)}, {"im", rational_to_string(c.im)}};
}

Scalar scalar_from_json(const json& j) {
    return Scalar(rational_from_string(j.at("re")), rational_from_string(j.at("im")));
}

json to_json(const GroupInstance& G, const Monomial& t) {
    return json{{"n", t.n},
                {"a", to_json(G, t.a)},
                {"L", to_json(G, t.L)},
                {"b", to_json(G, t.b)},
                {"m", t.m}};
}

Monomial monomial_from_json(const GroupInstance& G, const json& j) {
    auto t = canonicalize(G, j.at("n").get<int>(), element_from_json(G, j.at("a")),
                          BasicCoset{G.identity(), subgroup_from_json(G, j.at("L"))},
                          element_from_json(G, j.at("b")), j.at("m").get<int>());
    if (!t) throw Error(ErrorCode::ParseError, "monomial label denotes the zero element");
    return *t;
}

json to_json(const GroupInstance& G, const AlgebraElement& x) {
    json a = json::array();
    for (auto& [t, c] : x.terms())
        a.push_back({{"monomial", to_json(G, t)},
                     {"re", rational_to_string(c.re)},
                     {"im", rational_to_string(c.im)}});
    return a;
}

AlgebraElement algebra_from_json(const GroupInstance& G, const json& j) {
    AlgebraElement x;
    for (auto& e : j)
        x.add_term(monomial_from_json(G, e.at("monomial")),
                   Scalar(rational_from_string(e.at("re")), rational_from_string(e.at("im"))));
    return x;
}

json to_json(const GroupInstance& G, const SemigroupElement& p) {
    return json{{"g", to_json(G, p.g)}, {"n", p.n}};
}

json to_json(const GroupInstance& G, const EnvElement& x) {
    return json{{"g", to_json(G, x.g)}, {"level", x.level}, {"z", x.z}};
}

json to_json(const GroupInstance& G, const RightIdeal& I) {
    if (I.empty) return json{{"empty", true}};
    return json{{"g", to_json(G, I.gen.g)}, {"n", I.gen.n}};
}

json to_json(const CoeffGroup& A) {
    return json{{"rank", A.rank}, {"torsion", A.torsion}};
}

json to_json(const CoeffGroup& A, const FinSeq& s) {
    json a = json::array();
    for (auto& [k, v] : s.entries) a.push_back({json(k), json(v)});
    return a;
}

json to_json(const GroupInstance& G, const Certificate& cert) {
    json regions = json::array();
    for (auto& r : cert.regions) {
        regions.push_back({{"lambda", to_json(r.lambda)},
                           {"h", to_json(G, r.h)},
                           {"m", r.m},
                           {"a", to_json(G, r.a)},
                           {"b", r.b},
                           {"f", to_json(G, r.f)},
                           {"z", to_json(G, r.z)}});
    }
    json parts = json::array();
    for (auto& p : cert.decomposition.parts) {
        parts.push_back({{"lambda", to_json(p.lambda)},
                         {"projection", to_json(G, p.projection)},
                         {"h", to_json(G, p.h)},
                         {"m", p.m}});
    }
    json criticals = json::array();
    for (auto& c : cert.criticals)
        criticals.push_back({{"ab", to_json(G, c.ab)}, {"l", c.l}, {"lp", c.lp}});
    json transcript = json::array();
    for (auto& t : cert.transcript)
        transcript.push_back({{"identity", t.identity}, {"status", t.pass ? "pass" : "fail"}});
    return json{{"x", to_json(G, cert.x)},
                {"depth", cert.decomposition.depth},
                {"spectralParts", parts},
                {"criticals", criticals},
                {"regions", regions},
                {"transcript", transcript},
                {"verified", cert.verified}};
}

}  // namespace endostar
