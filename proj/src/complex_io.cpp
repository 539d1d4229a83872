#include <fstream>

#include "dchar/spaces.hpp"
#include "json.hpp"

namespace dchar {

ComplexPtr load_complex_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open complex file '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw InputError(path + ": expected object with \"vertices\" and \"facets\"");
    if (!j["vertices"].is_number_integer() || j["vertices"].get<long>() <= 0)
        throw InputError(path + ": \"vertices\" must be a positive integer");
    index_t nv = j["vertices"].get<index_t>();
    if (!j["facets"].is_array()) throw InputError(path + ": \"facets\" must be an array");

    std::vector<Simplex> facets;
    std::size_t fi = 0;
    for (const auto& fj : j["facets"]) {
        std::string where = path + ": facets[" + std::to_string(fi) + "]";
        if (!fj.is_array() || fj.empty()) throw InputError(where + " must be a nonempty array");
        if (fj.size() > 8) throw InputError(where + " has more than 8 vertices");
        Simplex s;
        std::size_t vi = 0;
        for (const auto& vj : fj) {
            std::string at = where + "[" + std::to_string(vi) + "]";
            if (!vj.is_number_integer()) throw InputError(at + ": vertex must be an integer");
            long v = vj.get<long>();
            if (v < 0 || v >= nv)
                throw InputError(at + ": vertex " + std::to_string(v) + " out of range [0," + std::to_string(nv) + ")");
            if (s.n > 0 && v <= s[s.n - 1])
                throw InputError(at + ": vertices must be strictly increasing (duplicate or misordered " +
                                 std::to_string(v) + ")");
            s.push(static_cast<index_t>(v));
            ++vi;
        }
        facets.push_back(s);
        ++fi;
    }
    try {
        return std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(nv, std::move(facets)));
    } catch (const DescriptorError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void save_complex_json(const SimplicialComplex& K, const std::string& path) {
    nlohmann::json j;
    j["vertices"] = K.vertex_count();
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : K.facets()) {
        nlohmann::json t = nlohmann::json::array();
        for (int i = 0; i < f.n; ++i) t.push_back(f[i]);
        fs.push_back(t);
    }
    j["facets"] = fs;
    std::ofstream out(path);
    if (!out) throw InputError("cannot write complex file '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace dchar
