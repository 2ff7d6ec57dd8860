#include "ruled/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "ruled/json_io.hpp"

namespace ruled::cli {

using json_io::Json;
using json_io::OJson;

namespace {

const char* const kSurface = R"({"genus": int >= 0, "e": int, "points": int >= 0})";
const char* const kDivisor = R"({"a": int, "b": int, "exc": [int, ... one per point]})";

/// Per-subcommand schema documents, printed by --schema.
const std::map<std::string, OJson>& schema_table() {
    static const std::map<std::string, OJson> table = [] {
        std::map<std::string, OJson> t;
        const OJson chern = {{"c1", kDivisor}, {"c2", "int"}};
        auto surf_chern_pol = OJson{{"surface", kSurface}, {"chern", chern}, {"polarization", kDivisor}};
        auto wall = OJson{{"zeta", kDivisor}, {"zeta_sq", "int"}, {"ell", "int"}, {"zF", "int"}, {"zL", "int"}};

        t["rr"] = {{"input", {{"surface", kSurface}, {"divisor", kDivisor}}},
                   {"result", {{"chi", "int"}}}};
        t["intersect"] = {{"input", {{"surface", kSurface}, {"lhs", kDivisor}, {"rhs", kDivisor}}},
                          {"result", {{"value", "int"}}}};
        t["canonical"] = {{"input", {{"surface", kSurface}}},
                          {"result", {{"canonical", kDivisor}, {"adjunction", "object of intersection numbers"}}}};
        t["twist"] = {{"input", {{"surface", kSurface}, {"chern", chern}, {"twist", kDivisor}}},
                      {"result", {{"chern", chern}, {"discriminant_before", "int"}, {"discriminant_after", "int"}}}};
        t["invariants"] = {
            {"input",
             {{"surface", kSurface},
              {"extension", {{"d", "int"}, {"r", "int"}, {"q", "[int >= 0, ...]"}, {"c1", kDivisor}, {"c2", "int"}}},
              {"pushforward_degree", "int (optional)"}}},
            {"result",
             {{"zeta", kDivisor}, {"zeta_sq", "int"}, {"ell", "int"}, {"r0", "int"}, {"prop_a", "bool"},
              {"unique", "bool"}, {"nagata", "int (present when pushforward_degree is given)"}}}};
        t["walls"] = {{"input", surf_chern_pol}, {"result", OJson::array({wall})}};
        t["suitable"] = {{"input", surf_chern_pol},
                         {"result", {{"suitable", "bool"}, {"witness", "wall or null"}, {"boundary", "[wall, ...]"}}}};
        t["certify-dv0"] = {{"input", surf_chern_pol},
                            {"result", {{"certified", "bool"}, {"witness", "wall or null"}}}};
        t["moduli-dim"] = {{"input", {{"surface", kSurface}, {"chern", chern}}}, {"result", {{"dim", "int"}}}};
        t["classify"] = {{"input", {{"surface", kSurface}, {"chern", chern}}},
                         {"result",
                          {{"structure", "odd_fiber | even_fiber_genus_zero | even_fiber_positive_genus"},
                           {"rational", "bool"}, {"stably_rational", "bool"},
                           {"hilbert_exponent", "int or null"}, {"note", "string"}}}};
        t["stability"] = {
            {"input",
             {{"surface", kSurface}, {"sub", kDivisor}, {"quot", kDivisor}, {"ell_z", "int >= 0"},
              {"polarization", kDivisor}, {"box", R"({"a": int, "b": int, "c": int} (optional))"}}},
            {"result",
             {{"verdict", "stable_certified | destabilizer_found | inconclusive"},
              {"candidates", "[{A, branch, effectivity, pruned_by_generality, slope_margin}, ...]"},
              {"box", R"({"a": int, "b": int, "c": int})"}, {"examined", "int"}}}};
        t["family-dim"] = {
            {"variants",
             {{"c1f0", "--genus --eta --points --n --eps --r1 --ell l1,l2,... --h0 [--e]"},
              {"c1f1", "--genus --e --beta --rho --c2"},
              {"example", "--n [--e]"},
              {"maximize", "--genus --eta --points --n --eps"}}},
            {"result",
             {{"c1f0|c1f1", R"({"family_dim", "moduli_dim", "ext1", "assumptions": [divisor], "dominance"})"},
              {"example", R"({"dim", "ext1", "h0VD"})"},
              {"maximize", R"({"r1", "ell", "h0", "value", "delta", "moduli_dim", "dominance", "unique"})"}}}};
        for (auto& [name, doc] : t) doc = OJson{{"subcommand", name}, {"schema", doc}};
        return t;
    }();
    return table;
}

/// Accumulates the top-level "assumptions" and "warnings" arrays.
struct Context {
    OJson assumptions = OJson::array();
    OJson warnings = OJson::array();

    void warn(const std::string& w) { warnings.push_back(w); }
    void warn_all(const std::vector<std::string>& ws) {
        for (const auto& w : ws) warn(w);
    }
    void assume(const VanishingAssumption& va) { assumptions.push_back(json_io::to_json(va)); }
};

Json read_payload(const std::string& input) {
    std::string text;
    if (input.empty()) throw Error(ErrorCode::InvalidInput, "missing --input payload");
    if (input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (input.front() == '@') {
        std::ifstream f(input.substr(1));
        if (!f) throw Error(ErrorCode::InvalidInput, "cannot open " + input.substr(1));
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        text = input;
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

OJson wall_list(const std::vector<WallClass>& walls) {
    OJson arr = OJson::array();
    for (const auto& w : walls) arr.push_back(json_io::to_json(w));
    return arr;
}

OJson optional_wall(const std::optional<WallClass>& w) {
    return w ? json_io::to_json(*w) : OJson(nullptr);
}

using json_io::require_keys;

OJson cmd_rr(const Json& p, Context&) {
    require_keys(p, {"surface", "divisor"}, {}, "rr input");
    const auto cfg = json_io::parse_surface(p.at("surface"));
    const auto d = json_io::parse_divisor(p.at("divisor"), cfg);
    return {{"chi", euler_char(d)}};
}

OJson cmd_intersect(const Json& p, Context&) {
    require_keys(p, {"surface", "lhs", "rhs"}, {}, "intersect input");
    const auto cfg = json_io::parse_surface(p.at("surface"));
    return {{"value", intersect(json_io::parse_divisor(p.at("lhs"), cfg),
                                json_io::parse_divisor(p.at("rhs"), cfg))}};
}

OJson cmd_canonical(const Json& p, Context&) {
    require_keys(p, {"surface"}, {}, "canonical input");
    const auto cfg = json_io::parse_surface(p.at("surface"));
    const auto k = canonical_class(cfg);
    const auto c0 = DivisorClass::minimal_section(cfg);
    const auto f = DivisorClass::fiber(cfg);
    OJson kE = OJson::array(), EE = OJson::array();
    for (std::size_t i = 1; i <= static_cast<std::size_t>(cfg.num_points); ++i) {
        const auto ei = DivisorClass::exceptional(cfg, i);
        kE.push_back(intersect(k, ei));
        EE.push_back(self_intersection(ei));
    }
    return {{"canonical", json_io::to_json(k)},
            {"adjunction",
             {{"K.F", intersect(k, f)}, {"F.F", self_intersection(f)},
              {"K.C0", intersect(k, c0)}, {"C0.C0", self_intersection(c0)},
              {"K.E", std::move(kE)}, {"E.E", std::move(EE)}}}};
}

OJson cmd_twist(const Json& p, Context&) {
    require_keys(p, {"surface", "chern", "twist"}, {}, "twist input");
    const auto cfg = json_io::parse_surface(p.at("surface"));
    const auto cd = json_io::parse_chern(p.at("chern"), cfg);
    const auto t = json_io::parse_divisor(p.at("twist"), cfg);
    const auto tw = chern_twist(cd, t);
    return {{"chern", json_io::to_json(tw)},
            {"discriminant_before", discriminant(cd)},
            {"discriminant_after", discriminant(tw)}};
}

OJson cmd_invariants(const Json& p, Context& ctx) {
    require_keys(p, {"surface", "extension"}, {"pushforward_degree"}, "invariants input");
    const auto cfg = json_io::parse_surface(p.at("surface"));
    const auto ed = json_io::parse_extension(p.at("extension"), cfg);
    const auto zeta = zeta_class(ed);
    const auto len = length_Z(ed);
    ctx.warn_all(len.warnings);
    const Int beta = ed.chern.c1.b();
    OJson r = {{"zeta", json_io::to_json(zeta)},
               {"zeta_sq", self_intersection(zeta)},
               {"ell", len.length},
               {"r0", r0_generic(cfg.genus, beta, ed.chern.c2)},
               {"prop_a", bound_prop_a(ed.r, beta, cfg.genus, ed.chern.c2, ed.q)},
               {"unique", is_extension_unique(ed)}};
    if (p.contains("pushforward_degree"))
        r["nagata"] = nagata_bound(json_io::get_int(p, "pushforward_degree", "invariants input"), cfg.genus);
    return r;
}

struct WallInput {
    ChernData chern;
    Polarization L;
};

WallInput parse_wall_input(const Json& p, const std::string& what) {
    require_keys(p, {"surface", "chern", "polarization"}, {}, what);
    const auto cfg = json_io::parse_surface(p.at("surface"));
    auto chern = json_io::parse_chern(p.at("chern"), cfg);
    Polarization L(json_io::parse_divisor(p.at("polarization"), cfg));
    return {std::move(chern), std::move(L)};
}

OJson cmd_walls(const Json& p, Context& ctx) {
    const auto in = parse_wall_input(p, "walls input");
    const auto walls = enumerate_walls(in.chern, in.L);
    if (!walls.boundary.empty())
        ctx.warn(std::to_string(walls.boundary.size()) + " wall(s) pass through L");
    if (walls.excluded_negative_length > 0)
        ctx.warn(std::to_string(walls.excluded_negative_length) + " class(es) excluded by negative length");
    return wall_list(walls.separating);
}

OJson cmd_suitable(const Json& p, Context& ctx) {
    const auto in = parse_wall_input(p, "suitable input");
    const auto s = is_suitable(in.chern, in.L);
    ctx.warn_all(s.warnings);
    return {{"suitable", s.suitable}, {"witness", optional_wall(s.witness)}, {"boundary", wall_list(s.boundary)}};
}

OJson cmd_certify(const Json& p, Context& ctx) {
    const auto in = parse_wall_input(p, "certify-dv0 input");
    const auto c = certify_dv_zero(in.chern, in.L);
    ctx.warn_all(c.warnings);
    return {{"certified", c.certified}, {"witness", optional_wall(c.witness)}};
}

OJson cmd_moduli(const Json& p, Context&) {
    require_keys(p, {"surface", "chern"}, {}, "moduli-dim input");
    const auto cfg = json_io::parse_surface(p.at("surface"));
    return {{"dim", moduli_dim(json_io::parse_chern(p.at("chern"), cfg))}};
}

OJson cmd_classify(const Json& p, Context&) {
    require_keys(p, {"surface", "chern"}, {}, "classify input");
    const auto cfg = json_io::parse_surface(p.at("surface"));
    const auto c = classify_structure(json_io::parse_chern(p.at("chern"), cfg));
    return {{"structure", std::string(to_string(c.kind))},
            {"rational", c.rational},
            {"stably_rational", c.stably_rational},
            {"hilbert_exponent", c.hilbert_exponent ? OJson(*c.hilbert_exponent) : OJson(nullptr)},
            {"note", c.note}};
}

OJson cmd_stability(const Json& p, Context& ctx) {
    require_keys(p, {"surface", "sub", "quot", "ell_z", "polarization"}, {"box"}, "stability input");
    const auto cfg = json_io::parse_surface(p.at("surface"));
    const auto sub = json_io::parse_divisor(p.at("sub"), cfg);
    const auto quot = json_io::parse_divisor(p.at("quot"), cfg);
    const Int ell_z = json_io::get_int(p, "ell_z", "stability input");
    Polarization L(json_io::parse_divisor(p.at("polarization"), cfg));
    const SearchBox box = p.contains("box") ? json_io::parse_box(p.at("box")) : default_box(sub, quot);
    const auto v = destabilizer_search(sub, quot, ell_z, L, box);
    ctx.warn_all(v.notes);
    return json_io::to_json(v);
}

OJson report_json(const FamilyReport& rep, Context& ctx) {
    for (const auto& a : rep.assumptions) ctx.assume(a);
    ctx.warn_all(rep.warnings);
    return json_io::to_json(rep);
}

struct FamilyArgs {
    Int genus = 0, e = 0, eta = 0, points = 0, n = 1, eps = 0, r1 = 0, h0 = 1, beta = 0, rho = 0, c2 = 0;
    std::vector<Int> ell;
    bool e_given = false;
};

std::vector<Int> parse_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        Int v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidInput, "--ell entries must be integers");
        }
        if (used != item.size()) throw Error(ErrorCode::InvalidInput, "--ell entries must be integers");
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<std::string> subcommands() {
    std::vector<std::string> names;
    for (const auto& [name, _] : schema_table()) names.push_back(name);
    return names;
}

std::string schema(const std::string& subcommand) {
    const auto& t = schema_table();
    auto it = t.find(subcommand);
    return it == t.end() ? std::string{} : it->second.dump(2);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical invariants of rank-two bundles on blown-up ruled surfaces"};
    app.require_subcommand(0, 1);

    std::string schema_for;
    std::string output_path;
    app.add_option("--schema", schema_for, "Print the JSON schema of a subcommand and exit");
    app.add_option("-o,--output", output_path, "Write the JSON document to this file");

    using Handler = std::function<OJson(const Json&, Context&)>;
    const std::vector<std::pair<std::string, Handler>> json_commands = {
        {"rr", cmd_rr},
        {"intersect", cmd_intersect},
        {"canonical", cmd_canonical},
        {"twist", cmd_twist},
        {"invariants", cmd_invariants},
        {"walls", cmd_walls},
        {"suitable", cmd_suitable},
        {"certify-dv0", cmd_certify},
        {"moduli-dim", cmd_moduli},
        {"classify", cmd_classify},
        {"stability", cmd_stability},
    };

    std::string input;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, _] : json_commands) {
        auto* sc = app.add_subcommand(name, "see --schema " + name);
        sc->add_option("-i,--input", input, "JSON payload, @file, or - for stdin")->required();
        subs[name] = sc;
    }

    FamilyArgs fa;
    std::string ell_list;
    auto* family = app.add_subcommand("family-dim", "Extension-family dimension counts");
    family->require_subcommand(1);
    auto* c1f0 = family->add_subcommand("c1f0", "c1 = eta F + sum E_i");
    c1f0->add_option("--genus", fa.genus)->required();
    c1f0->add_option("--e", fa.e);
    c1f0->add_option("--eta", fa.eta)->required();
    c1f0->add_option("--points", fa.points)->required();
    c1f0->add_option("--n", fa.n)->required();
    c1f0->add_option("--eps", fa.eps)->required();
    c1f0->add_option("--r1", fa.r1)->required();
    c1f0->add_option("--ell", ell_list, "comma-separated l_i");
    c1f0->add_option("--h0", fa.h0)->required();
    auto* c1f1 = family->add_subcommand("c1f1", "c1 = C0 + beta F + sum E_i");
    c1f1->add_option("--genus", fa.genus)->required();
    c1f1->add_option("--e", fa.e)->required();
    c1f1->add_option("--beta", fa.beta)->required();
    c1f1->add_option("--rho", fa.rho)->required();
    c1f1->add_option("--c2", fa.c2)->required();
    auto* example = family->add_subcommand("example", "0 -> O(-nF) -> V -> I_Z((n+1)F) -> 0");
    example->add_option("--n", fa.n)->required();
    auto* example_e = example->add_option("--e", fa.e);
    auto* maximize = family->add_subcommand("maximize", "maximize the c1.F = 0 family dimension");
    maximize->add_option("--genus", fa.genus)->required();
    maximize->add_option("--eta", fa.eta)->required();
    maximize->add_option("--points", fa.points)->required();
    maximize->add_option("--n", fa.n)->required();
    maximize->add_option("--eps", fa.eps)->required();

    std::string active = "usage";
    auto emit = [&](const OJson& doc) {
        const std::string text = doc.dump(2) + "\n";
        if (output_path.empty()) {
            out << text;
            return true;
        }
        std::ofstream f(output_path);
        if (!f) {
            err << "cannot write " << output_path << "\n";
            return false;
        }
        f << text;
        return true;
    };
    auto fail = [&](ErrorCode code, const std::string& msg, int exit_code) {
        OJson doc = {{"status", "error"},
                     {"error", {{"code", std::string(to_string(code))}, {"message", msg}}},
                     {"result", nullptr},
                     {"assumptions", OJson::array()},
                     {"warnings", OJson::array()}};
        err << "error: " << msg << "\n";
        if (exit_code == kUsageError) {
            const std::string s = schema(active);
            if (!s.empty()) err << "expected schema:\n" << s << "\n";
        }
        emit(doc);
        return exit_code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        for (const auto& [name, sc] : subs)
            if (sc->parsed()) active = name;
        if (family->parsed()) active = "family-dim";
        return fail(ErrorCode::InvalidInput, e.what(), kUsageError);
    }

    if (!schema_for.empty()) {
        const std::string s = schema(schema_for);
        if (s.empty()) {
            err << "unknown subcommand for --schema: " << schema_for << "\n";
            return kUsageError;
        }
        out << s << "\n";
        return kOk;
    }

    Context ctx;
    try {
        OJson result;
        bool ran = false;
        for (const auto& [name, handler] : json_commands) {
            if (!subs[name]->parsed()) continue;
            active = name;
            result = handler(read_payload(input), ctx);
            ran = true;
        }
        if (family->parsed()) {
            active = "family-dim";
            ran = true;
            if (c1f0->parsed()) {
                fa.ell = parse_list(ell_list);
                SurfaceConfig cfg{fa.genus, fa.e, fa.points};
                cfg.validate();
                const auto rep = family_report_c1F0(cfg, fa.eta, fa.n, fa.eps, fa.r1, fa.ell, fa.h0);
                const Int formula = family_dim_c1F0(fa.genus, fa.eta, fa.points, fa.n, fa.eps, fa.r1, fa.ell, fa.h0);
                if (formula != rep.family_dim)
                    ctx.warn("closed form " + std::to_string(formula) + " differs from the Riemann-Roch count");
                result = report_json(rep, ctx);
            } else if (c1f1->parsed()) {
                SurfaceConfig cfg{fa.genus, fa.e, fa.rho};
                cfg.validate();
                const auto rep = family_report_c1F1(cfg, fa.beta, fa.c2);
                result = report_json(rep, ctx);
            } else if (example->parsed()) {
                const auto ex = example_family_dim(fa.n, example_e->count() > 0 ? fa.e : 1);
                for (const auto& a : ex.assumptions) ctx.assume(a);
                result = {{"dim", ex.dim}, {"ext1", ex.ext1}, {"h0VD", ex.h0_vd}};
            } else if (maximize->parsed()) {
                const auto mx = maximize_family_dim(fa.genus, fa.eta, fa.points, fa.n, fa.eps);
                if (mx.dominance == Dominance::Exceeds)
                    ctx.warn("maximal family dimension exceeds the expected moduli dimension");
                result = {{"r1", mx.r1},         {"ell", mx.ell},
                          {"h0", mx.h0},         {"value", mx.value},
                          {"delta", mx.delta},   {"moduli_dim", mx.moduli_dim},
                          {"dominance", std::string(to_string(mx.dominance))},
                          {"unique", mx.unique}};
            }
        }
        if (!ran) {
            err << app.help();
            return fail(ErrorCode::InvalidInput, "no subcommand given", kUsageError);
        }
        OJson doc = {{"status", "ok"},
                     {"result", std::move(result)},
                     {"assumptions", std::move(ctx.assumptions)},
                     {"warnings", std::move(ctx.warnings)}};
        return emit(doc) ? kOk : kDomainError;
    } catch (const Error& e) {
        const bool usage = e.code() == ErrorCode::InvalidInput || e.code() == ErrorCode::ConfigMismatch;
        return fail(e.code(), e.what(), usage ? kUsageError : kDomainError);
    } catch (const Json::exception& e) {
        return fail(ErrorCode::InvalidInput, e.what(), kUsageError);
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("ruledmod");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ruled::cli
