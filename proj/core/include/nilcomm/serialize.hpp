#ifndef NILCOMM_SERIALIZE_HPP
#define NILCOMM_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "nilcomm/fibers.hpp"
#include "nilcomm/oblak.hpp"
#include "nilcomm/oracle.hpp"
#include "nilcomm/partition.hpp"
#include "nilcomm/poset.hpp"

namespace nilcomm {

// JSON forms used by the CLI; a partition is a plain array of parts.

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

inline void to_json(nlohmann::json& j, const PosetVertex& v) {
    j = nlohmann::json::array({v.u, v.p, v.k});
}

inline const char* family_name(EdgeFamily f) {
    switch (f) {
        case EdgeFamily::Down: return "down";
        case EdgeFamily::UpShift: return "up_shift";
        case EdgeFamily::WithinGroup: return "within_group";
        case EdgeFamily::Isolated: return "isolated";
    }
    return "?";
}

inline nlohmann::json poset_json(const PosetDP& D) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& v : D.vertices()) vertices.push_back(v);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : D.edges())
        edges.push_back({{"from", D.vertices()[static_cast<std::size_t>(e.from)]},
                         {"to", D.vertices()[static_cast<std::size_t>(e.to)]},
                         {"family", family_name(e.family)}});
    return {{"partition", D.partition()},
            {"vertices", vertices},
            {"edges", edges}};
}

inline void to_json(nlohmann::json& j, const OblakStep& s) {
    j = {{"p", s.chosen_p}, {"size", s.chain_size}, {"residual", s.residual}};
}

inline void to_json(nlohmann::json& j, const OblakTrace& t) {
    j = {{"input", t.input}, {"steps", t.steps}, {"result", t.result}};
}

inline void to_json(nlohmann::json& j, const VerifyReport& r) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& [seed, type] : r.sample_types)
        samples.push_back({{"seed", seed}, {"type", type}});
    j = {{"partition", r.input}, {"oblak", r.oblak},   {"oracle", r.oracle},
         {"agree", r.agree},     {"samples", samples}};
}

inline void to_json(nlohmann::json& j, const BoxReport& r) {
    j = {{"q", r.q},
         {"dims", r.dims},
         {"predicted", r.predicted},
         {"observed", r.fiber.size()},
         {"fiber", r.fiber},
         {"cardinality_ok", r.cardinality_ok},
         {"part_count_ok", r.part_count_ok}};
}

} // namespace nilcomm

#endif
