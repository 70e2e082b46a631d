#include "hyperspec/interchange.hpp"

#include <unordered_map>

#include <json.hpp>

#include "hyperspec/error.hpp"

namespace hyperspec {

using nlohmann::json;

OrientedHypergraph parse(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("malformed document: expected an object with 'vertices' and 'edges'");
    const json& jv = doc.at("vertices");
    const json& je = doc.at("edges");
    if (!jv.is_array() || !je.is_array())
        throw ParseError("malformed document: 'vertices' and 'edges' must be arrays");

    std::vector<std::string> vertices;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& v : jv) {
        if (!v.is_string())
            throw ParseError("malformed document: vertex identifiers must be strings");
        index.emplace(v.get<std::string>(), vertices.size());
        vertices.push_back(v.get<std::string>());
    }

    std::vector<Edge> edges;
    for (std::size_t e = 0; e < je.size(); ++e) {
        const json& edge = je[e];
        if (!edge.is_object() || !edge.contains("members") || !edge.at("members").is_object())
            throw ParseError("malformed document: edge " + std::to_string(e) + " needs a 'members' object");
        std::vector<Incidence> members;
        for (const auto& [name, sign] : edge.at("members").items()) {
            auto it = index.find(name);
            if (it == index.end())
                throw ParseError("unknown vertex '" + name + "' in edge " + std::to_string(e));
            if (!sign.is_number_integer())
                throw ParseError("malformed document: sign of '" + name + "' in edge " + std::to_string(e)
                                 + " is not an integer");
            const auto s = sign.get<std::int64_t>();
            if (s != -1 && s != 1)
                throw ParseError("sign outside alphabet {-1, +1}: '" + name + "' has " + std::to_string(s)
                                 + " in edge " + std::to_string(e));
            members.push_back({it->second, s < 0 ? Sign::Input : Sign::Output});
        }
        edges.emplace_back(std::move(members));
    }
    return OrientedHypergraph(std::move(vertices), std::move(edges));
}

std::string serialize(const OrientedHypergraph& h)
{
    const OrientedHypergraph c = h.canonical();
    json doc;
    doc["vertices"] = c.vertices();
    json edges = json::array();
    for (const auto& e : c.edges()) {
        json members = json::object();
        for (const auto& inc : e.members())
            members[c.vertices()[inc.vertex]] = to_int(inc.sign);
        edges.push_back({{"members", members}});
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

} // namespace hyperspec
