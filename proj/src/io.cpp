#include "flowres/io.hpp"
#include "flowres/errors.hpp"

#include <fstream>

namespace flowres {

namespace {

Rat json_rat(const nlohmann::json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Rat(j.get<long long>());
    if (j.is_string())
        return rat_from_string(j.get<std::string>());
    throw input_error(where + ": expected a rational as \"p/q\" string or integer");
}

}  // namespace

FlowFixedData flow_data_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw input_error("dataset: expected a JSON object");
    FlowFixedData data;
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw input_error("dataset: missing integer field \"m\"");
    data.m = j["m"].get<int>();
    if (!j.contains("flow_orientable") || !j["flow_orientable"].is_boolean())
        throw input_error("dataset: missing boolean field \"flow_orientable\"");
    data.flow_orientable = j["flow_orientable"].get<bool>();
    if (!j.contains("components") || !j["components"].is_array())
        throw input_error("dataset: missing array field \"components\"");

    for (const auto& cj : j["components"]) {
        StratumComponent comp;
        const std::string where =
            "component " + std::to_string(data.components.size());
        if (!cj.is_object())
            throw input_error(where + ": expected an object");
        comp.name = cj.value("name", "component" + std::to_string(data.components.size()));
        if (!cj.contains("m0") || !cj["m0"].is_number_integer())
            throw input_error(where + ": missing integer field \"m0\"");
        comp.m0 = cj["m0"].get<int>();
        if (!cj.contains("weights") || !cj["weights"].is_array())
            throw input_error(where + ": missing array field \"weights\"");
        for (const auto& wj : cj["weights"]) {
            if (!wj.is_object() || !wj.contains("mu") || !wj.contains("mult") ||
                !wj["mult"].is_number_integer())
                throw input_error(where + ": each weight needs \"mu\" and integer \"mult\"");
            comp.normal_weights.push_back(
                {json_rat(wj["mu"], where + " weight"), wj["mult"].get<int>()});
        }
        comp.orientation_matches = cj.value("orientation_matches", true);
        if (cj.contains("oracle")) {
            if (!cj["oracle"].is_object())
                throw input_error(where + ": \"oracle\" must be an object");
            for (const auto& [key, vj] : cj["oracle"].items())
                comp.oracle.entries[key] = json_rat(vj, where + " oracle['" + key + "']");
        }
        data.components.push_back(std::move(comp));
    }
    return data;
}

nlohmann::json flow_data_to_json(const FlowFixedData& data)
{
    nlohmann::json j;
    j["m"] = data.m;
    j["flow_orientable"] = data.flow_orientable;
    j["components"] = nlohmann::json::array();
    for (const auto& comp : data.components) {
        nlohmann::json cj;
        cj["name"] = comp.name;
        cj["m0"] = comp.m0;
        cj["weights"] = nlohmann::json::array();
        for (const auto& w : comp.normal_weights)
            cj["weights"].push_back({{"mu", rat_to_string(w.mu)}, {"mult", w.mult}});
        cj["orientation_matches"] = comp.orientation_matches;
        if (!comp.oracle.entries.empty()) {
            nlohmann::json oj = nlohmann::json::object();
            for (const auto& [key, value] : comp.oracle.entries)
                oj[key] = rat_to_string(value);
            cj["oracle"] = oj;
        }
        j["components"].push_back(std::move(cj));
    }
    return j;
}

FlowFixedData load_flow_data(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("'" + path + "': " + e.what());
    }
    return flow_data_from_json(j);
}

void save_flow_data(const FlowFixedData& data, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write '" + path + "'");
    out << flow_data_to_json(data).dump(2) << "\n";
}

RatMatrix rat_matrix_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.empty())
        throw input_error("expected a nonempty JSON array of arrays");
    RatMatrix m;
    for (const auto& rj : j) {
        if (!rj.is_array())
            throw input_error("expected each row to be a JSON array");
        std::vector<Rat> row;
        for (const auto& x : rj)
            row.push_back(json_rat(x, "matrix row " + std::to_string(m.size())));
        if (!m.empty() && row.size() != m[0].size())
            throw input_error("ragged matrix rows");
        m.push_back(std::move(row));
    }
    return m;
}

RatMatrix load_rat_matrix(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("'" + path + "': " + e.what());
    }
    return rat_matrix_from_json(j);
}

}  // namespace flowres
