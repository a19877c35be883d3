#pragma once

#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "charid/real_form.hpp"

namespace charid {

/// One catalog record: pair name, Cartan type spec, and the compact roots of
/// the noncompact member as indices into the deterministic root ordering.
struct CatalogRecord {
    std::string name;
    std::string cartan;
    std::vector<int> compact_roots;
};

namespace detail {

// Roots of A_{r} / D_{r} in the standard coordinate realization; used only
// to classify compactness for the built-in families.
inline std::vector<long long> epsilon_vector(const RootSystem& R, char family, int root_index) {
    const int r = R.rank();
    const int dim = family == 'A' ? r + 1 : r;
    std::vector<long long> e(dim, 0);
    const auto& c = R.root_coords(root_index);
    for (int k = 0; k < r; ++k) {
        if (c[k] == 0) continue;
        if (family == 'A') {
            e[k] += c[k];
            e[k + 1] -= c[k];
        } else {  // D: alpha_k = e_k - e_{k+1} for k < r-1, alpha_{r-1} = e_{r-2} + e_{r-1}
            if (k < r - 1) {
                e[k] += c[k];
                e[k + 1] -= c[k];
            } else {
                e[r - 2] += c[k];
                e[r - 1] += c[k];
            }
        }
    }
    return e;
}

// Compact roots of su(p, q) inside A_{p+q-1}: e_i - e_j with i, j on the same
// side of the block split.
inline std::vector<int> su_pq_compact_roots(const RootSystem& R, int p) {
    std::vector<int> out;
    for (int i = 0; i < R.root_count(); ++i) {
        auto e = epsilon_vector(R, 'A', i);
        int hi = -1, lo = -1;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 1) hi = static_cast<int>(k);
            if (e[k] == -1) lo = static_cast<int>(k);
        }
        if ((hi < p) == (lo < p)) out.push_back(i);
    }
    return out;
}

// Compact roots of so(2p, 2q) inside D_{p+q}: +-e_i +- e_j with i, j on the
// same side.
inline std::vector<int> so_2p2q_compact_roots(const RootSystem& R, int p) {
    std::vector<int> out;
    for (int i = 0; i < R.root_count(); ++i) {
        auto e = epsilon_vector(R, 'D', i);
        std::vector<int> support;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0) support.push_back(static_cast<int>(k));
        if (support.size() != 2) throw Error("Internal", "unexpected D-type root support");
        if ((support[0] < p) == (support[1] < p)) out.push_back(i);
    }
    return out;
}

}  // namespace detail

/// Built-in inner-form pairs. Each noncompact member is paired with the
/// compact form on the same root system.
inline std::vector<CatalogRecord> builtin_catalog_records() {
    static const std::vector<std::pair<std::string, std::pair<std::string, std::pair<char, int>>>> defs = {
        {"sl2R/su2", {"A1", {'A', 1}}},   // su(1,1) ~ sl(2,R)
        {"su21/su3", {"A2", {'A', 2}}},   {"su31/su4", {"A3", {'A', 3}}},
        {"su22/su4", {"A3", {'A', 2}}},   {"so22/so4", {"D2", {'D', 1}}},
        {"so26/so8", {"D4", {'D', 1}}},   {"so44/so8", {"D4", {'D', 2}}},
    };
    std::vector<CatalogRecord> out;
    std::map<std::string, LieData> lies;
    for (const auto& [name, info] : defs) {
        const std::string& type = info.first;
        char family = info.second.first;
        int p = info.second.second;
        if (!lies.count(type)) lies.emplace(type, make_lie(type));
        const RootSystem& R = *lies.at(type).R;
        CatalogRecord rec;
        rec.name = name;
        rec.cartan = type;
        rec.compact_roots = family == 'A' ? detail::su_pq_compact_roots(R, p)
                                          : detail::so_2p2q_compact_roots(R, p);
        out.push_back(std::move(rec));
    }
    return out;
}

inline InnerFormPair pair_from_record(const CatalogRecord& rec, std::map<std::string, LieData>* lie_cache = nullptr) {
    LieData lie;
    if (lie_cache) {
        auto it = lie_cache->find(rec.cartan);
        if (it == lie_cache->end()) it = lie_cache->emplace(rec.cartan, make_lie(rec.cartan)).first;
        lie = it->second;
    } else {
        lie = make_lie(rec.cartan);
    }
    auto slash = rec.name.find('/');
    std::string nc = slash == std::string::npos ? rec.name : rec.name.substr(0, slash);
    std::string cp = slash == std::string::npos ? rec.name + "_c" : rec.name.substr(slash + 1);
    return make_pair(lie, rec.name, nc, cp, rec.compact_roots);
}

inline std::vector<InnerFormPair> pairs_from_records(const std::vector<CatalogRecord>& records) {
    std::map<std::string, LieData> cache;
    std::vector<InnerFormPair> out;
    out.reserve(records.size());
    for (const auto& rec : records) out.push_back(pair_from_record(rec, &cache));
    return out;
}

/// All built-in pairs, validated on construction.
inline std::vector<InnerFormPair> catalog() { return pairs_from_records(builtin_catalog_records()); }

inline nlohmann::ordered_json records_to_json(const std::vector<CatalogRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        nlohmann::ordered_json j;
        j["name"] = rec.name;
        j["cartan"] = rec.cartan;
        j["compact_roots"] = rec.compact_roots;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline std::vector<CatalogRecord> records_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw CatalogError("catalog file must contain a JSON array");
    std::vector<CatalogRecord> out;
    for (const auto& item : j) {
        CatalogRecord rec;
        try {
            rec.name = item.at("name").get<std::string>();
            rec.cartan = item.at("cartan").get<std::string>();
            rec.compact_roots = item.at("compact_roots").get<std::vector<int>>();
        } catch (const nlohmann::json::exception& e) {
            throw CatalogError(std::string("malformed catalog record: ") + e.what());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

inline std::vector<CatalogRecord> load_catalog_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CatalogError(std::string("catalog parse error: ") + e.what());
    }
    return records_from_json(j);
}

/// Looks up a pair by name in the built-in catalog or, when a path is given,
/// in the catalog file.
inline InnerFormPair find_pair(const std::string& name, const std::string& catalog_path = "") {
    auto records = catalog_path.empty() ? builtin_catalog_records() : load_catalog_records(catalog_path);
    for (const auto& rec : records)
        if (rec.name == name) return pair_from_record(rec);
    throw CatalogError("no pair named '" + name + "' in catalog");
}

}  // namespace charid
