#pragma once

#include "gfh/genfam.hpp"
#include "gfh/legfront.hpp"
#include "gfh/obstruct.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gfh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitInvalid = 2,
    kExitBudget = 3,
    kExitChoice = 4,
    kExitRotation = 5,
};

/// Reals are written as shortest round-trip decimal strings.
std::string decimal(double v);
double real_from_json(const Json& j, const std::string& what);

Json ranks_to_json(const GradedRanks& g);
GradedRanks ranks_from_json(const Json& j);
/// Degree to free rank, with torsion spelled out only where present.
Json compact_ranks_to_json(const GradedRanks& g);

GFDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const GFDescriptor& g);
ShearSpec shear_from_json(const Json& j);
FrontDiagram front_from_json(const Json& j);
GFHProfile profile_from_json(const Json& j);
SurfaceFilling filling_surface_from_json(const Json& j);

Json read_json_file(const std::string& path);
std::string sha256_file(const std::string& path);

/// Runs the command-line interface in-process and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfh
