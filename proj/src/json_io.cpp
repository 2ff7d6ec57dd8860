#include "ruled/json_io.hpp"

#include <algorithm>
#include <cstring>

namespace ruled::json_io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

void require_object(const Json& j, const std::string& what) {
    if (!j.is_object()) bad(what + " must be a JSON object");
}

}  // namespace

void require_keys(const Json& obj, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const std::string& what) {
    require_object(obj, what);
    for (const char* k : required)
        if (!obj.contains(k)) bad(what + ": missing field \"" + k + "\"");
    for (const auto& [key, _] : obj.items()) {
        auto match = [&](const char* k) { return key == k; };
        if (std::none_of(required.begin(), required.end(), match) &&
            std::none_of(optional.begin(), optional.end(), match))
            bad(what + ": unknown field \"" + key + "\"");
    }
}

Int as_int(const Json& value, const std::string& what) {
    if (value.is_number_integer() && !value.is_number_unsigned()) return value.get<Int>();
    if (value.is_number_unsigned()) {
        const auto u = value.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(INT64_MAX)) bad(what + " is out of the 64-bit range");
        return static_cast<Int>(u);
    }
    bad(what + " must be an integer");
}

Int get_int(const Json& obj, const char* key, const std::string& what) {
    return as_int(obj.at(key), what + "." + key);
}

SurfaceConfig parse_surface(const Json& j) {
    require_keys(j, {"genus", "e", "points"}, {}, "surface");
    SurfaceConfig cfg{get_int(j, "genus", "surface"), get_int(j, "e", "surface"),
                      get_int(j, "points", "surface")};
    cfg.validate();
    return cfg;
}

DivisorClass parse_divisor(const Json& j, const SurfaceConfig& cfg) {
    require_keys(j, {"a", "b"}, {"exc"}, "divisor");
    std::vector<Int> exc;
    if (j.contains("exc")) {
        if (!j.at("exc").is_array()) bad("divisor.exc must be an array");
        for (const auto& v : j.at("exc")) exc.push_back(as_int(v, "divisor.exc[]"));
    }
    return DivisorClass(cfg, get_int(j, "a", "divisor"), get_int(j, "b", "divisor"), std::move(exc));
}

ChernData parse_chern(const Json& j, const SurfaceConfig& cfg) {
    require_keys(j, {"c1", "c2"}, {}, "chern");
    return {parse_divisor(j.at("c1"), cfg), get_int(j, "c2", "chern")};
}

ExtensionDatum parse_extension(const Json& j, const SurfaceConfig& cfg) {
    require_keys(j, {"d", "r", "c1", "c2"}, {"q"}, "extension");
    ExtensionDatum ed;
    ed.d = get_int(j, "d", "extension");
    ed.r = get_int(j, "r", "extension");
    if (j.contains("q")) {
        if (!j.at("q").is_array()) bad("extension.q must be an array");
        for (const auto& v : j.at("q")) ed.q.push_back(as_int(v, "extension.q[]"));
    }
    ed.chern = {parse_divisor(j.at("c1"), cfg), get_int(j, "c2", "extension")};
    ed.validate();
    return ed;
}

WallClass parse_wall(const Json& j, const SurfaceConfig& cfg) {
    require_keys(j, {"zeta", "zeta_sq", "ell", "zF", "zL"}, {}, "wall");
    WallClass w;
    w.zeta = parse_divisor(j.at("zeta"), cfg);
    w.zeta_sq = get_int(j, "zeta_sq", "wall");
    w.ell = get_int(j, "ell", "wall");
    w.zF = get_int(j, "zF", "wall");
    w.zL = get_int(j, "zL", "wall");
    return w;
}

SearchBox parse_box(const Json& j) {
    require_keys(j, {"a", "b"}, {"c"}, "box");
    SearchBox box;
    box.a = get_int(j, "a", "box");
    box.b = get_int(j, "b", "box");
    box.c = j.contains("c") ? get_int(j, "c", "box") : 0;
    if (box.a < 0 || box.b < 0 || box.c < 0) bad("box bounds must be >= 0");
    return box;
}

OJson to_json(const SurfaceConfig& cfg) {
    return {{"genus", cfg.genus}, {"e", cfg.invariant_e}, {"points", cfg.num_points}};
}

OJson to_json(const DivisorClass& d) {
    return {{"a", d.a()}, {"b", d.b()}, {"exc", d.exc()}};
}

OJson to_json(const ChernData& cd) { return {{"c1", to_json(cd.c1)}, {"c2", cd.c2}}; }

OJson to_json(const ExtensionDatum& ed) {
    return {{"d", ed.d}, {"r", ed.r}, {"q", ed.q}, {"c1", to_json(ed.chern.c1)}, {"c2", ed.chern.c2}};
}

OJson to_json(const WallClass& w) {
    return {{"zeta", to_json(w.zeta)}, {"zeta_sq", w.zeta_sq}, {"ell", w.ell}, {"zF", w.zF}, {"zL", w.zL}};
}

OJson to_json(const Effectivity& eff) {
    OJson j = {{"verdict", std::string(to_string(eff.verdict))}};
    if (eff.effective()) {
        OJson dec = OJson::object();
        for (const auto& [name, mult] : eff.decomposition) dec[name] = mult;
        j["decomposition"] = std::move(dec);
    }
    if (eff.not_effective()) j["violated"] = eff.violated;
    return j;
}

OJson to_json(const VanishingAssumption& va) {
    return {{"h0_vanishes", to_json(va.cls)},
            {"ideal_twist", va.twisted_by_ideal},
            {"screen", std::string(to_string(va.screen.verdict))}};
}

OJson to_json(const FamilyReport& rep) {
    OJson assumptions = OJson::array();
    for (const auto& a : rep.assumptions) assumptions.push_back(to_json(a.cls));
    return {{"family_dim", rep.family_dim},
            {"moduli_dim", rep.moduli_dim},
            {"ext1", rep.ext1},
            {"assumptions", std::move(assumptions)},
            {"dominance", std::string(to_string(rep.dominance))}};
}

OJson to_json(const SearchBox& box) { return {{"a", box.a}, {"b", box.b}, {"c", box.c}}; }

OJson to_json(const StabilityVerdict& v) {
    OJson cands = OJson::array();
    for (const auto& c : v.candidates) {
        cands.push_back({{"A", to_json(c.A)},
                         {"branch", c.branch},
                         {"effectivity", to_json(c.check.effectivity)},
                         {"pruned_by_generality", c.check.pruned_by_generality},
                         {"slope_margin", c.slope_margin}});
    }
    return {{"verdict", std::string(to_string(v.verdict))},
            {"candidates", std::move(cands)},
            {"box", to_json(v.box)},
            {"examined", v.examined}};
}

}  // namespace ruled::json_io
