#include "frieze/json_io.hpp"

namespace frieze {

json to_json(const LaurentPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exp", e}, {"coef", to_string(c)}});
    }
    return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

LaurentPolynomial laurent_from_json(const json& j) {
    int nvars = j.at("nvars").get<int>();
    LaurentPolynomial p(nvars);
    for (const auto& term : j.at("terms")) {
        Exponents e = term.at("exp").get<Exponents>();
        p.add_term(e, rational_from_string(term.at("coef").get<std::string>()));
    }
    return p;
}

json to_json(const RationalFunction& f) {
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction ratfunc_from_json(const json& j) {
    return RationalFunction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

json to_json(const Quiver& q) {
    json arrows = json::array();
    for (const Arrow& a : q.arrows()) arrows.push_back({a.from, a.to, a.multiplicity});
    return {{"n", q.n()}, {"arrows", std::move(arrows)}};
}

LoadedQuiver quiver_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
        if (!a.is_array() || (a.size() != 2 && a.size() != 3))
            throw InvalidInput("arrow entries must be [from, to] or [from, to, multiplicity]");
        arrows.push_back({a[0].get<int>(), a[1].get<int>(),
                          a.size() == 3 ? a[2].get<int>() : 1});
    }
    return load_quiver(n, arrows);
}

json to_json(const Point& p) {
    json out = json::array();
    for (const Rational& q : p) out.push_back(to_string(q));
    return out;
}

Point point_from_json(const json& j) {
    Point p;
    for (const auto& c : j) p.push_back(rational_from_string(c.get<std::string>()));
    return p;
}

json to_json(const VanishingSpace& space) {
    json basis = json::array();
    for (const auto& g : space.generators) basis.push_back(to_json(g));
    return {{"degree_bound", space.degree_bound},
            {"basis", std::move(basis)},
            {"kernel_dim", space.basis.size()},
            {"points_used", space.points_used},
            {"stabilized", space.stabilized}};
}

json to_json(const ComponentDecomposition& decomposition) {
    json classes = json::array();
    for (const auto& cls : decomposition.classes) {
        json basis = json::array();
        for (const auto& g : cls.space.generators) basis.push_back(to_json(g));
        classes.push_back({{"residue", cls.residue},
                           {"basis", std::move(basis)},
                           {"kernel_dim", cls.space.basis.size()},
                           {"dim_estimate", cls.dim.value}});
    }
    return {{"m", decomposition.m},
            {"classes", std::move(classes)},
            {"verified_cycle", decomposition.verified_cycle}};
}

json to_json(const InvariantCertificate& cert) {
    json iterates = json::array();
    for (const auto& f : cert.iterates) iterates.push_back(to_json(f));
    json consts = json::array();
    for (const auto& c : cert.orbit_constants) consts.push_back(to_string(c));
    json equations = json::array();
    for (const auto& row : cert.equations) {
        json r = json::array();
        for (const auto& f : row) r.push_back(to_json(f));
        equations.push_back(std::move(r));
    }
    return {{"h", to_json(cert.h)},
            {"period", cert.period},
            {"iterates", std::move(iterates)},
            {"constants", std::move(consts)},
            {"equations", std::move(equations)}};
}

json to_json(const QuiverClass& cls) {
    json out{{"kind", to_string(cls.kind)}};
    if (cls.diagram) out["diagram"] = *cls.diagram;
    return out;
}

}  // namespace frieze
