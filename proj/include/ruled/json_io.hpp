#pragma once

#include <json.hpp>

#include <initializer_list>
#include <string>

#include "ruled/families.hpp"
#include "ruled/stability.hpp"
#include "ruled/walls.hpp"

// JSON encoding of the library types. Parsing is strict: unknown keys, missing
// keys and non-integer or out-of-range numbers are InvalidInput errors.

namespace ruled::json_io {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

/// Rejects any key of `obj` outside `allowed`; `what` names the object in messages.
void require_keys(const Json& obj, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const std::string& what);

Int get_int(const Json& obj, const char* key, const std::string& what);
Int as_int(const Json& value, const std::string& what);

SurfaceConfig parse_surface(const Json& j);
DivisorClass parse_divisor(const Json& j, const SurfaceConfig& cfg);
ChernData parse_chern(const Json& j, const SurfaceConfig& cfg);
ExtensionDatum parse_extension(const Json& j, const SurfaceConfig& cfg);
WallClass parse_wall(const Json& j, const SurfaceConfig& cfg);
SearchBox parse_box(const Json& j);

OJson to_json(const SurfaceConfig& cfg);
OJson to_json(const DivisorClass& d);
OJson to_json(const ChernData& cd);
OJson to_json(const ExtensionDatum& ed);
OJson to_json(const WallClass& w);
OJson to_json(const Effectivity& eff);
OJson to_json(const VanishingAssumption& va);
OJson to_json(const FamilyReport& rep);
OJson to_json(const SearchBox& box);
OJson to_json(const StabilityVerdict& v);

}  // namespace ruled::json_io
