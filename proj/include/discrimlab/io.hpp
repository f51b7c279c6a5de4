#pragma once

// JSON file formats and the 1-based index-list syntax of the command line.
// Everything here converts between 0-based IndexSets and the 1-based
// numbering H_1..H_n used in files.

#include "discrimlab/catalog.hpp"
#include "discrimlab/lattice.hpp"

#include <json.hpp>

#include <string_view>

namespace discrimlab::io {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vec_json(const Vec& v);
Vec vec_from_json(const Json& j);

/// {"k": k, "normals": [["p/q", ...], ...]}
Json arrangement_json(const CentralArrangement& a);

/// Raw contents of an arrangement file, before genericity validation.
struct RawArrangement {
    std::size_t k = 0;
    std::vector<Vec> normals;
};
RawArrangement raw_arrangement_from_json(const Json& j);
CentralArrangement arrangement_from_json(const Json& j);

/// {"t": ["p/q", ...]}
Json translate_json(const Translate& t);
Translate translate_from_json(const Json& j);

Json index_set_json(IndexSet s);
Json family_json(const Family& f);
IndexSet index_set_from_json(const Json& j);
Family family_from_json(const Json& j);

/// "1,2,3" -> {0,1,2}
IndexSet parse_index_list(std::string_view text);
/// "1,2,3;1,4,5" -> {{0,1,2},{0,3,4}}
Family parse_family(std::string_view text);

Json census_json(const std::vector<CensusEntry>& census, bool detail);
Json verdict_json(const Verdict& v);
Json certificate_json(const DependencyCertificate& c);
Json finding_json(const NvgFinding& f);
Json kt_json(const KTConfiguration& kt);

}  // namespace discrimlab::io
