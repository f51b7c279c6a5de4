#include "discrimlab/io.hpp"

#include <algorithm>
#include <string>

namespace discrimlab::io {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    throw ParseError("expected a rational string such as \"3/4\", got " + j.dump());
}

Json vec_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_json(x));
    return out;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    Vec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

Json arrangement_json(const CentralArrangement& a) {
    Json out;
    out["k"] = a.k();
    Json normals = Json::array();
    for (const auto& v : a.normals()) normals.push_back(vec_json(v));
    out["normals"] = std::move(normals);
    return out;
}

RawArrangement raw_arrangement_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("normals"))
        throw ParseError("arrangement JSON needs fields \"k\" and \"normals\"");
    if (!j["k"].is_number_unsigned()) throw ParseError("\"k\" must be a non-negative integer");
    if (!j["normals"].is_array()) throw ParseError("\"normals\" must be an array");
    RawArrangement raw;
    raw.k = j["k"].get<std::size_t>();
    for (const auto& row : j["normals"]) raw.normals.push_back(vec_from_json(row));
    return raw;
}

CentralArrangement arrangement_from_json(const Json& j) {
    auto raw = raw_arrangement_from_json(j);
    return CentralArrangement::create(raw.k, std::move(raw.normals));
}

Json translate_json(const Translate& t) {
    Json out;
    out["t"] = vec_json(t.values);
    return out;
}

Translate translate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("t")) throw ParseError("translate JSON needs field \"t\"");
    return Translate{vec_from_json(j["t"])};
}

Json index_set_json(IndexSet s) {
    Json out = Json::array();
    for (auto i : s.elements()) out.push_back(i + 1);
    return out;
}

Json family_json(const Family& f) {
    Json out = Json::array();
    for (auto s : f) out.push_back(index_set_json(s));
    return out;
}

IndexSet index_set_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an index list, got " + j.dump());
    std::vector<std::size_t> idx;
    for (const auto& x : j) {
        if (!x.is_number_unsigned() || x.get<std::size_t>() == 0) throw ParseError("indices are 1-based positive integers");
        idx.push_back(x.get<std::size_t>() - 1);
    }
    return IndexSet(idx);
}

Family family_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a list of index lists, got " + j.dump());
    Family f;
    for (const auto& s : j) f.push_back(index_set_from_json(s));
    return f;
}

IndexSet parse_index_list(std::string_view text) {
    std::vector<std::size_t> idx;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string item(text.substr(pos, comma - pos));
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw ParseError("malformed index list: '" + std::string(text) + "'");
        }
        if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos)
            throw ParseError("malformed index list: '" + std::string(text) + "'");
        if (value == 0) throw ParseError("indices are 1-based: '" + std::string(text) + "'");
        if (value > kMaxHyperplanes) throw ParseError("index too large: '" + std::string(text) + "'");
        if (std::find(idx.begin(), idx.end(), value - 1) != idx.end())
            throw ParseError("repeated index in '" + std::string(text) + "'");
        idx.push_back(value - 1);
        pos = comma + 1;
    }
    return IndexSet(idx);
}

Family parse_family(std::string_view text) {
    Family f;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto semi = std::min(text.find(';', pos), text.size());
        f.push_back(parse_index_list(text.substr(pos, semi - pos)));
        pos = semi + 1;
    }
    return f;
}

Json census_json(const std::vector<CensusEntry>& census, bool detail) {
    Json out;
    Json agg = Json::array();
    for (auto [m, c] : aggregate(census)) {
        Json e;
        e["multiplicity"] = m;
        e["count"] = c;
        agg.push_back(std::move(e));
    }
    out["aggregates"] = std::move(agg);
    if (detail) {
        Json flats = Json::array();
        for (const auto& entry : census) {
            Json e;
            Json span = Json::array();
            for (std::size_t i = 0; i < entry.normal_span.dim(); ++i)
                span.push_back(vec_json(entry.normal_span.basis_vector(i)));
            e["normal_span"] = std::move(span);
            e["members"] = family_json(entry.members);
            e["multiplicity"] = entry.multiplicity();
            flats.push_back(std::move(e));
        }
        out["flats"] = std::move(flats);
    }
    return out;
}

Json verdict_json(const Verdict& v) {
    Json out;
    out["very_generic_upto"] = v.r_max;
    out["defect_found"] = v.defect_found();
    if (v.witness) {
        out["witness"] = family_json(*v.witness);
        out["rank"] = v.rank;
        out["multiplicity"] = v.witness->size();
    } else {
        out["witness"] = nullptr;
        out["rank"] = nullptr;
        out["multiplicity"] = nullptr;
    }
    return out;
}

Json certificate_json(const DependencyCertificate& c) {
    Json out;
    out["T"] = family_json(c.T.members());
    out["l"] = c.l + 1;
    out["S_l"] = family_json(c.S_l);
    out["s"] = c.s;
    out["rank_base"] = c.rank_base;
    out["rank_full"] = c.rank_full;
    out["flat_rank"] = c.flat_rank;
    out["multiplicity"] = c.multiplicity();
    return out;
}

Json finding_json(const NvgFinding& f) {
    Json out;
    out["T"] = family_json(f.T.members());
    out["multiplicity"] = f.T.r();
    out["rank"] = f.rank;
    Json certs = Json::array();
    for (const auto& c : f.certificates) certs.push_back(certificate_json(c));
    out["certificates"] = std::move(certs);
    return out;
}

Json kt_json(const KTConfiguration& kt) {
    Json out;
    Json points = Json::array();
    for (const auto& p : kt.points) points.push_back(vec_json(p));
    out["points"] = std::move(points);
    Json edges = Json::array();
    for (const auto& e : kt.edges) {
        Json je;
        je["i"] = e.i + 1;
        je["j"] = e.j + 1;
        je["direction"] = vec_json(e.direction);
        edges.push_back(std::move(je));
    }
    out["edges"] = std::move(edges);
    Json viol = Json::array();
    for (const auto& v : kt.violations) {
        Json jv;
        jv["member"] = v.member + 1;
        jv["extra_index"] = v.extra_index + 1;
        viol.push_back(std::move(jv));
    }
    out["violations"] = std::move(viol);
    out["strict"] = kt.strict();
    out["degenerate"] = kt.degenerate();
    return out;
}

}  // namespace discrimlab::io
