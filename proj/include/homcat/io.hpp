#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "homcat/chain.hpp"
#include "homcat/extension.hpp"
#include "homcat/fgab.hpp"
#include "homcat/group.hpp"

namespace homcat {

/// input that does not parse or fails schema validation
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace io {

using nlohmann::json;

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows ? j[0].size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw ParseError("matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (j[r][c].is_number_integer())
                m(r, c) = Int(j[r][c].get<long>());
            else if (j[r][c].is_string())
                m(r, c) = Int(j[r][c].get<std::string>());
            else
                throw ParseError("matrix: entries must be integers");
        }
    }
    return m;
}

inline IntMatrix parse_matrix(const json& doc) {
    if (!doc.contains("matrix")) throw ParseError("expected key \"matrix\"");
    return matrix_from_json(doc["matrix"]);
}

inline AbGroupPtr abgroup_from_json(const json& j) {
    if (!j.contains("presentation"))
        throw ParseError("abgroup: expected key \"presentation\"");
    return FgAbGroup::make(matrix_from_json(j["presentation"]));
}

inline AbGroupPtr parse_abgroup(const json& doc) {
    if (!doc.contains("abgroup")) throw ParseError("expected key \"abgroup\"");
    return abgroup_from_json(doc["abgroup"]);
}

inline ChainComplex parse_complex(const json& doc) {
    if (!doc.contains("complex")) throw ParseError("expected key \"complex\"");
    const json& j = doc["complex"];
    if (!j.contains("lo") || !j.contains("objects") ||
        !j.contains("differentials"))
        throw ParseError("complex: need keys lo, objects, differentials");
    long lo = j["lo"].get<long>();
    std::vector<AbGroupPtr> groups;
    for (const json& o : j["objects"]) groups.push_back(abgroup_from_json(o));
    std::vector<AbMorphism> diffs;
    const json& ds = j["differentials"];
    if (ds.size() + 1 != groups.size())
        throw ParseError("complex: need one differential per adjacent pair");
    for (std::size_t i = 0; i < ds.size(); ++i) {
        AbMorphism d(groups[i + 1], groups[i], matrix_from_json(ds[i]));
        if (!d.is_well_defined())
            throw ParseError("complex: differential " + std::to_string(i + 1) +
                             " is not well defined");
        diffs.push_back(std::move(d));
    }
    return ChainComplex(lo, std::move(groups), std::move(diffs));
}

inline GroupPtr group_from_json(const json& j) {
    if (j.contains("group")) {
        const json& g = j["group"];
        if (!g.contains("cayley"))
            throw ParseError("group: expected key \"cayley\"");
        std::vector<std::vector<int>> table;
        for (const json& row : g["cayley"])
            table.push_back(row.get<std::vector<int>>());
        int identity = g.value("identity", 0);
        try {
            return FiniteGroup::from_cayley(std::move(table), identity);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("group: ") + e.what());
        }
    }
    if (j.contains("perm_group")) {
        const json& g = j["perm_group"];
        if (!g.contains("degree") || !g.contains("generators"))
            throw ParseError("perm_group: need keys degree, generators");
        int degree = g["degree"].get<int>();
        std::vector<std::vector<int>> gens;
        for (const json& p : g["generators"])
            gens.push_back(p.get<std::vector<int>>());
        try {
            return FiniteGroup::from_permutations(degree, gens);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("perm_group: ") + e.what());
        }
    }
    throw ParseError("expected key \"group\" or \"perm_group\"");
}

inline GroupExtension extension_from_json(const json& doc) {
    if (!doc.contains("extension")) throw ParseError("expected key \"extension\"");
    const json& j = doc["extension"];
    for (const char* key : {"kernel", "middle", "base", "incl", "proj"})
        if (!j.contains(key))
            throw ParseError(std::string("extension: missing key \"") + key +
                             "\"");
    GroupPtr A = group_from_json(j["kernel"]);
    GroupPtr E = group_from_json(j["middle"]);
    GroupPtr X = group_from_json(j["base"]);
    GroupExtension e{A, E, X,
                     GroupHom{A, E, j["incl"].get<std::vector<int>>()},
                     GroupHom{E, X, j["proj"].get<std::vector<int>>()}};
    if (e.incl.map.size() != static_cast<std::size_t>(A->order()) ||
        e.proj.map.size() != static_cast<std::size_t>(E->order()))
        throw ParseError("extension: incl/proj have the wrong length");
    return e;
}

/// parse a coefficient description, "z" (integers) or "z/k"
inline long parse_coeff(const std::string& s) {
    if (s == "z" || s == "Z") return 0;
    if ((s.rfind("z/", 0) == 0 || s.rfind("Z/", 0) == 0) && s.size() > 2) {
        try {
            std::size_t used = 0;
            long k = std::stol(s.substr(2), &used);
            if (used == s.size() - 2 && k >= 2) return k;
        } catch (...) {
        }
    }
    throw ParseError("coefficients must be \"z\" or \"z/k\" with k >= 2: " + s);
}

/// canonical display form: "0", or "Z^r (+) Z/d1 (+) ..." joined by the
/// direct-sum sign
inline std::string canonical(const AbGroupPtr& A) {
    if (A->is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&]() {
        if (!first) out << " ⊕ ";
        first = false;
    };
    if (A->free_rank() == 1) {
        sep();
        out << "Z";
    } else if (A->free_rank() > 1) {
        sep();
        out << "Z^" << A->free_rank();
    }
    for (const Int& d : A->torsion()) {
        sep();
        out << "Z/" << d.get_str();
    }
    return out.str();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace io
}  // namespace homcat
