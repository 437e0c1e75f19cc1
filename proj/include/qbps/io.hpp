#pragma once

#include <string>

#include <json.hpp>

#include "qbps/bps.hpp"
#include "qbps/gamma.hpp"
#include "qbps/potential.hpp"
#include "qbps/quiver.hpp"
#include "qbps/stability.hpp"

namespace qbps {

// Reads a file and parses JSON; parse failures are reported with line and
// column.
nlohmann::json load_json_file(const std::string& path);

// {"vertices":["a","b"],"edges":[{"src":0,"dst":1},...]}
Quiver quiver_from_json(const nlohmann::json& j);
nlohmann::json quiver_to_json(const Quiver& q);

// {"ext":[[0,2],[2,0]]}
ExtMatrix ext_matrix_from_json(const nlohmann::json& j);

// {"xi":[{"re":"-1","im":"1"},{"re":"0","im":"1"}]}
StabilityXi stability_from_json(const nlohmann::json& j);
nlohmann::json stability_to_json(const StabilityXi& xi);

// {"terms":[{"word":[0,1,2],"coeff":"1"},...],"growth":"2"}
SuperPotential potential_from_json(const nlohmann::json& j, const Quiver& q);

// {"trunc":4,"entries":[{"dim":[1,1],"omega":"-v"}],"stability":"trivial"|{"xi":...}}
nlohmann::json bps_table_to_json(const BpsTable& table);

// {"rank":2,"beta":[1,1],"m":0}
GammaClass gamma_from_json(const nlohmann::json& j);

// {"B":["0","1/2"],"omega":["1","2"]}
KahlerParam kahler_from_json(const nlohmann::json& j);

// {"generators":[[1,0],[0,1]]}
EffectiveCone cone_from_json(const nlohmann::json& j);

// {"components":[{"mult":2,"class":[1,0]}]}
CycleData cycle_from_json(const nlohmann::json& j);

// "a,b,c" -> dimension vector
DimVector parse_dim_vector(const std::string& text);

// "1,0" / "1/2,-3" -> exact rational vector
VectorQ parse_rational_vector(const std::string& text);

Eigen::MatrixXi int_matrix_from_json(const nlohmann::json& j);

}  // namespace qbps
