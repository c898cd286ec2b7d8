#pragma once

#include <array>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "delpezzo/relations.hpp"

namespace dp {

/// Field-agnostic image of a point configuration: coordinates as exact
/// strings, the field named "Q" or "Fp:<p>".
struct RawConfig {
    std::string field = "Q";
    int r = 0;
    std::vector<std::array<std::string, 3>> points;
};

inline nlohmann::json to_json(const RawConfig& cfg) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : cfg.points) pts.push_back({p[0], p[1], p[2]});
    return {{"field", cfg.field}, {"r", cfg.r}, {"points", pts}};
}

inline RawConfig raw_config_from_json(const nlohmann::json& j) {
    RawConfig cfg;
    cfg.field = j.at("field").get<std::string>();
    cfg.r = j.at("r").get<int>();
    for (const auto& p : j.at("points")) {
        if (p.size() != 3) throw Error("points need three coordinates");
        cfg.points.push_back({p[0].get<std::string>(), p[1].get<std::string>(),
                              p[2].get<std::string>()});
    }
    if (static_cast<int>(cfg.points.size()) != cfg.r)
        throw Error("point count does not match r");
    return cfg;
}

inline RawConfig load_raw_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return raw_config_from_json(j);
}

template <class K>
PointConfiguration<K> realize(const K& k, const RawConfig& raw) {
    std::vector<std::array<typename K::Elem, 3>> pts;
    for (const auto& p : raw.points)
        pts.push_back({k.from_string(p[0]), k.from_string(p[1]), k.from_string(p[2])});
    return PointConfiguration<K>::from_points(k, std::move(pts));
}

template <class K>
RawConfig to_raw(const PointConfiguration<K>& cfg) {
    RawConfig raw;
    raw.field = cfg.field.name();
    raw.r = cfg.r;
    for (const auto& p : cfg.pts)
        raw.points.push_back({cfg.field.to_string(p[0]), cfg.field.to_string(p[1]),
                              cfg.field.to_string(p[2])});
    return raw;
}

/// Relation stream: a header line identifying the configuration, then one
/// record per relation in block order.
template <class K>
void write_relations(std::ostream& out, const PointConfiguration<K>& cfg,
                     const RelationSet<K>& rs) {
    const K& k = cfg.field;
    nlohmann::json header = to_json(to_raw(cfg));
    header["records"] = rs.total();
    out << header.dump() << '\n';
    for (const auto& block : rs.blocks) {
        nlohmann::json monos = nlohmann::json::array();
        for (const auto& m : block.ruling.monomials) monos.push_back({m.a, m.b});
        for (const auto& row : block.kernel) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : row) coeffs.push_back(k.to_string(c));
            nlohmann::json rec{{"ruling", block.ruling.cls.c},
                               {"n", block.ruling.n},
                               {"monomials", monos},
                               {"coeffs", coeffs}};
            out << rec.dump() << '\n';
        }
    }
}

}  // namespace dp
