// Fluid database document I/O. The format is a single JSON document with a
// top-level "fluids" array; unknown keys anywhere are an error so that typos
// in hand-edited files fail loudly instead of silently using a default.
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "inclino/errors.hpp"
#include "inclino/fluid.hpp"

namespace inclino {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& context)
{
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key))
            throw ValidationError(context + ": unknown key '" + key + "'");
    }
}

double require_number(const json& obj, const std::string& key, const std::string& context)
{
    if (!obj.contains(key)) throw ValidationError(context + ": missing key '" + key + "'");
    if (!obj.at(key).is_number()) throw ValidationError(context + ": key '" + key + "' must be a number");
    return obj.at(key).get<double>();
}

PropertyModel parse_model(const json& obj, const std::string& context)
{
    if (!obj.is_object()) throw ValidationError(context + ": property model must be an object");
    if (!obj.contains("kind")) throw ValidationError(context + ": missing key 'kind'");
    const std::string kind = obj.at("kind").get<std::string>();
    try {
        if (kind == "constant") {
            reject_unknown_keys(obj, {"kind", "value"}, context);
            return PropertyModel::constant(require_number(obj, "value", context));
        }
        if (kind == "power_law") {
            reject_unknown_keys(obj, {"kind", "ref_value", "ref_temperature_K", "exponent"}, context);
            return PropertyModel::power_law(require_number(obj, "ref_value", context),
                                            require_number(obj, "ref_temperature_K", context),
                                            require_number(obj, "exponent", context));
        }
        if (kind == "table") {
            reject_unknown_keys(obj, {"kind", "points_K"}, context);
            if (!obj.contains("points_K") || !obj.at("points_K").is_array())
                throw ValidationError(context + ": table model needs a 'points_K' array");
            std::vector<std::pair<double, double>> pts;
            for (const auto& row : obj.at("points_K")) {
                if (!row.is_array() || row.size() != 2)
                    throw ValidationError(context + ": each table point must be a [T, value] pair");
                pts.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
            }
            return PropertyModel::table(std::move(pts));
        }
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(e.what()));
    }
    throw ValidationError(context + ": unknown model kind '" + kind + "'");
}

json model_to_json(const PropertyModel& m)
{
    json j;
    switch (m.kind()) {
    case PropertyModel::Kind::constant:
        j["kind"] = "constant";
        j["value"] = m.value();
        break;
    case PropertyModel::Kind::power_law:
        j["kind"] = "power_law";
        j["ref_value"] = m.ref_value();
        j["ref_temperature_K"] = m.ref_temperature();
        j["exponent"] = m.exponent();
        break;
    case PropertyModel::Kind::table:
        j["kind"] = "table";
        j["points_K"] = json::array();
        for (const auto& [t, v] : m.points()) j["points_K"].push_back({t, v});
        break;
    }
    return j;
}

FluidSpec parse_fluid(const json& obj)
{
    if (!obj.is_object()) throw ValidationError("fluid record must be an object");
    const std::string name = obj.contains("name") ? obj.at("name").get<std::string>() : "<unnamed>";
    const std::string ctx = "fluid '" + name + "'";

    reject_unknown_keys(obj,
                        {"name", "phase", "ideal_gas", "validity_K", "source", "density", "dynamic_viscosity",
                         "thermal_conductivity", "specific_heat", "expansion_coefficient"},
                        ctx);
    for (const char* key : {"name", "phase", "validity_K", "source", "density", "dynamic_viscosity",
                            "thermal_conductivity", "specific_heat", "expansion_coefficient"}) {
        if (!obj.contains(key)) throw ValidationError(ctx + ": missing key '" + std::string(key) + "'");
    }

    FluidSpec f;
    f.name = name;
    const std::string phase = obj.at("phase").get<std::string>();
    if (phase == "gas")
        f.phase = FluidPhase::gas;
    else if (phase == "liquid")
        f.phase = FluidPhase::liquid;
    else
        throw ValidationError(ctx + ": phase must be 'gas' or 'liquid'");
    f.ideal_gas = obj.value("ideal_gas", false);

    const auto& validity = obj.at("validity_K");
    if (!validity.is_array() || validity.size() != 2)
        throw ValidationError(ctx + ": validity_K must be [min, max]");
    f.validity_min = validity.at(0).get<double>();
    f.validity_max = validity.at(1).get<double>();
    f.source = obj.at("source").get<std::string>();

    f.density = parse_model(obj.at("density"), ctx + ".density");
    f.dynamic_viscosity = parse_model(obj.at("dynamic_viscosity"), ctx + ".dynamic_viscosity");
    f.thermal_conductivity = parse_model(obj.at("thermal_conductivity"), ctx + ".thermal_conductivity");
    f.specific_heat = parse_model(obj.at("specific_heat"), ctx + ".specific_heat");
    f.expansion_coefficient = parse_model(obj.at("expansion_coefficient"), ctx + ".expansion_coefficient");

    f.validate();
    return f;
}

} // namespace

std::vector<FluidSpec> parse_fluid_database(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("fluid database parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("fluid database: top level must be an object");
    reject_unknown_keys(doc, {"fluids"}, "fluid database");
    if (!doc.contains("fluids") || !doc.at("fluids").is_array())
        throw ValidationError("fluid database: missing 'fluids' array");

    std::vector<FluidSpec> fluids;
    std::set<std::string> seen;
    for (const auto& rec : doc.at("fluids")) {
        FluidSpec f = parse_fluid(rec);
        if (!seen.insert(f.name).second)
            throw ValidationError("fluid database: duplicate fluid '" + f.name + "'");
        fluids.push_back(std::move(f));
    }
    return fluids;
}

std::vector<FluidSpec> load_fluid_database(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open fluid database '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_fluid_database(buffer.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string serialize_fluid_database(const std::vector<FluidSpec>& fluids)
{
    json doc;
    doc["fluids"] = json::array();
    for (const auto& f : fluids) {
        json j;
        j["name"] = f.name;
        j["phase"] = f.phase == FluidPhase::gas ? "gas" : "liquid";
        if (f.ideal_gas) j["ideal_gas"] = true;
        j["validity_K"] = {f.validity_min, f.validity_max};
        j["source"] = f.source;
        j["density"] = model_to_json(f.density);
        j["dynamic_viscosity"] = model_to_json(f.dynamic_viscosity);
        j["thermal_conductivity"] = model_to_json(f.thermal_conductivity);
        j["specific_heat"] = model_to_json(f.specific_heat);
        j["expansion_coefficient"] = model_to_json(f.expansion_coefficient);
        doc["fluids"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

} // namespace inclino
