#ifndef FLOWRES_IO_HPP
#define FLOWRES_IO_HPP

#include "flowres/localize.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace flowres {

// Dataset schema:
// {"m": int, "flow_orientable": bool,
//  "components": [{"name": str, "m0": int,
//                  "weights": [{"mu": "p/q", "mult": int}],
//                  "orientation_matches": bool,
//                  "oracle": {"<monomial>": "p/q"}}]}
FlowFixedData flow_data_from_json(const nlohmann::json& j);
nlohmann::json flow_data_to_json(const FlowFixedData& data);

FlowFixedData load_flow_data(const std::string& path);
void save_flow_data(const FlowFixedData& data, const std::string& path);

// A JSON array of arrays of "p/q" strings.
RatMatrix rat_matrix_from_json(const nlohmann::json& j);
RatMatrix load_rat_matrix(const std::string& path);

}  // namespace flowres

#endif
