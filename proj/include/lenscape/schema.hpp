// Minimal JSON schema dialect used to pin down the CLI's --json output.
// Supported keys: type (object/array/string/bool/int/fraction), properties,
// required, additional (bool, default false), items, enum, any_of.
// "int" accepts a JSON integer or a decimal string (arbitrary precision),
// "fraction" a "num/den" string.
#pragma once

#include <optional>
#include <string>

#include "lenscape/io.hpp"

namespace lenscape {

// nullopt when value conforms, else a human-readable violation (with a path)
std::optional<std::string> schema_violation(const Json& schema, const Json& value);

} // namespace lenscape
