#pragma once

#include <string>
#include <utility>
#include <vector>

namespace supercong {

/// Ordered (name, value) pairs describing the parameters of one check instance.
using ParamList = std::vector<std::pair<std::string, std::string>>;

}  // namespace supercong
