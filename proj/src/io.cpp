#include "symrig/io.hpp"

#include <fstream>

namespace symrig {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& msg) {
    if (!ok) throw ParseError(msg);
}

}  // namespace

ComplexDocument parse_document(const json& j) {
    require(j.is_object(), "document must be a JSON object");
    require(j.contains("k") && j["k"].is_number_integer(),
            "missing integer field 'k'");
    require(j.contains("facets") && j["facets"].is_array(),
            "missing array field 'facets'");

    ComplexDocument doc;
    doc.k = j["k"].get<int>();
    for (const auto& f : j["facets"]) {
        require(f.is_array(), "facet must be an array of vertex ids");
        std::vector<VertexId> verts;
        for (const auto& v : f) {
            require(v.is_number_integer(), "vertex id must be an integer");
            verts.push_back(v.get<VertexId>());
        }
        doc.facets.push_back(std::move(verts));
    }
    if (j.contains("multiplicities")) {
        require(j["multiplicities"].is_array() &&
                    j["multiplicities"].size() == doc.facets.size(),
                "'multiplicities' must parallel 'facets'");
        doc.multiplicities = std::vector<int>{};
        for (const auto& m : j["multiplicities"]) {
            require(m.is_number_integer() && m.get<int>() > 0,
                    "multiplicity must be a positive integer");
            doc.multiplicities->push_back(m.get<int>());
        }
    }
    if (j.contains("involution")) {
        require(j["involution"].is_array(), "'involution' must be a pair list");
        doc.involution = std::vector<std::pair<VertexId, VertexId>>{};
        for (const auto& p : j["involution"]) {
            require(p.is_array() && p.size() == 2, "involution entry must be a pair");
            doc.involution->emplace_back(p[0].get<VertexId>(),
                                         p[1].get<VertexId>());
        }
    }
    if (j.contains("coordinates")) {
        require(j["coordinates"].is_object(),
                "'coordinates' must map vertex -> rational list");
        doc.coordinates = std::map<VertexId, std::vector<std::string>>{};
        for (const auto& [key, val] : j["coordinates"].items()) {
            require(val.is_array(), "coordinate entry must be an array");
            std::vector<std::string> comps;
            for (const auto& c : val) {
                require(c.is_string(), "coordinates must be rational strings");
                comps.push_back(c.get<std::string>());
            }
            try {
                (*doc.coordinates)[std::stoi(key)] = std::move(comps);
            } catch (const std::exception&) {
                throw ParseError("coordinate key is not a vertex id: " + key);
            }
        }
    }
    if (j.contains("group")) {
        const auto& g = j["group"];
        require(g.is_object() && g.contains("t") && g.contains("d"),
                "'group' must be {t, d}");
        doc.group = PointGroup{g["t"].get<int>(), g["d"].get<int>()};
    }
    return doc;
}

ComplexDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_document(j);
}

json to_json(const ComplexDocument& doc) {
    json j;
    j["k"] = doc.k;
    j["facets"] = doc.facets;
    if (doc.multiplicities) j["multiplicities"] = *doc.multiplicities;
    if (doc.involution) {
        json pairs = json::array();
        for (auto [u, v] : *doc.involution) pairs.push_back({u, v});
        j["involution"] = pairs;
    }
    if (doc.coordinates) {
        json coords = json::object();
        for (const auto& [v, comps] : *doc.coordinates)
            coords[std::to_string(v)] = comps;
        j["coordinates"] = coords;
    }
    if (doc.group) j["group"] = {{"t", doc.group->t}, {"d", doc.group->d}};
    return j;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in " + s);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw ParseError("invalid rational '" + s + "': " + e.what());
    }
}

std::string rational_str(const Rational& r) {
    Int den = boost::multiprecision::denominator(r);
    std::string s = boost::multiprecision::numerator(r).str();
    if (den != 1) s += "/" + den.str();
    return s;
}

MultiComplex to_complex(const ComplexDocument& doc) {
    MultiComplex S(doc.k);
    for (std::size_t i = 0; i < doc.facets.size(); ++i) {
        int mult = doc.multiplicities ? (*doc.multiplicities)[i] : 1;
        try {
            S.add_facet(Face(doc.facets[i]), mult);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad facet: ") + e.what());
        }
    }
    return S;
}

std::optional<Involution> to_involution(const ComplexDocument& doc) {
    if (!doc.involution) return std::nullopt;
    return Involution::from_pairs(*doc.involution);
}

Framework to_framework(const ComplexDocument& doc) {
    if (!doc.coordinates) throw ParseError("document has no coordinates");
    MultiComplex S = to_complex(doc);
    Framework F;
    F.graph = graph(S);
    F.d = -1;
    for (VertexId v : F.graph.vertices()) {
        auto it = doc.coordinates->find(v);
        if (it == doc.coordinates->end())
            throw ParseError("vertex " + std::to_string(v) +
                             " has no coordinates");
        RationalRow p;
        for (const auto& s : it->second) p.push_back(parse_rational(s));
        if (F.d < 0)
            F.d = static_cast<int>(p.size());
        else if (static_cast<int>(p.size()) != F.d)
            throw ParseError("inconsistent coordinate dimension at vertex " +
                             std::to_string(v));
        F.coords[v] = std::move(p);
    }
    return F;
}

ComplexDocument from_complex(const MultiComplex& S, const Involution* sigma) {
    ComplexDocument doc;
    doc.k = S.k();
    bool plain = S.is_complex();
    if (!plain) doc.multiplicities = std::vector<int>{};
    for (const auto& [f, m] : S.facets()) {
        doc.facets.push_back(f.vertices());
        if (!plain) doc.multiplicities->push_back(m);
    }
    if (sigma) doc.involution = sigma->pairs();
    return doc;
}

ComplexDocument from_framework(const Framework& F, const Involution* sigma,
                               const PointGroup* group) {
    ComplexDocument doc;
    doc.k = 1;
    for (const Face& e : F.graph.edges()) doc.facets.push_back(e.vertices());
    if (sigma) doc.involution = sigma->pairs();
    doc.coordinates = std::map<VertexId, std::vector<std::string>>{};
    for (const auto& [v, p] : F.coords) {
        std::vector<std::string> comps;
        for (const auto& x : p) comps.push_back(rational_str(x));
        (*doc.coordinates)[v] = std::move(comps);
    }
    if (group) doc.group = *group;
    return doc;
}

}  // namespace symrig
