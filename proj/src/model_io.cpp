#include "kolmo/model_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "kolmo/errors.hpp"

namespace kolmo {

namespace {

using nlohmann::json;

struct Slot {
    std::string_view key;
    BivariatePoly SystemModel::*member;
};

constexpr std::array<Slot, 7> kSlots{{
    {"theta", &SystemModel::theta},
    {"gamma", &SystemModel::gamma},
    {"delta", &SystemModel::delta},
    {"M", &SystemModel::bigM},
    {"N", &SystemModel::bigN},
    {"S", &SystemModel::bigS},
    {"P", &SystemModel::bigP},
}};

int parse_index(std::string_view s, std::string_view key) {
    int v = -1;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
        throw ValidationError("bad monomial key \"" + std::string(key) + "\"");
    return v;
}

std::pair<int, int> parse_monomial(std::string_view key) {
    const auto comma = key.find(',');
    if (comma == std::string_view::npos)
        throw ValidationError("bad monomial key \"" + std::string(key) + "\" (expected \"i,j\")");
    return {parse_index(key.substr(0, comma), key), parse_index(key.substr(comma + 1), key)};
}

BivariatePoly parse_poly(const json& obj, int degree, std::string_view name) {
    if (!obj.is_object())
        throw ValidationError("coefficient \"" + std::string(name) + "\" must be an object");
    BivariatePoly p(degree);
    for (const auto& [key, value] : obj.items()) {
        if (!value.is_number())
            throw ValidationError("coefficient " + std::string(name) + "[" + key +
                                  "] is not a number");
        const auto [i, j] = parse_monomial(key);
        p.set(i, j, value.get<double>());
    }
    return p;
}

}  // namespace

SystemModel parse_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("model file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("model document must be a JSON object");

    int degree = BivariatePoly::kDefaultDegree;
    if (auto it = doc.find("max_degree"); it != doc.end()) {
        if (!it->is_number_integer()) throw ValidationError("max_degree must be an integer");
        degree = it->get<int>();
    }

    SystemModel model{BivariatePoly(degree), BivariatePoly(degree), BivariatePoly(degree),
                      BivariatePoly(degree), BivariatePoly(degree), BivariatePoly(degree),
                      BivariatePoly(degree), 0.1};

    for (const auto& [key, value] : doc.items()) {
        if (key == "max_degree") continue;
        if (key == "radius") {
            if (!value.is_number()) throw ValidationError("radius must be a number");
            model.radius = value.get<double>();
            continue;
        }
        bool known = false;
        for (const auto& slot : kSlots) {
            if (key == slot.key) {
                model.*(slot.member) = parse_poly(value, degree, slot.key);
                known = true;
                break;
            }
        }
        if (!known) throw ValidationError("unknown model key \"" + key + "\"");
    }
    validate(model);
    return model;
}

std::string serialize_model(const SystemModel& model) {
    json doc = json::object();
    doc["radius"] = model.radius;
    int degree = 0;
    for (const auto& slot : kSlots) degree = std::max(degree, (model.*(slot.member)).max_degree());
    doc["max_degree"] = degree;
    for (const auto& slot : kSlots) {
        json obj = json::object();
        for (const auto& [ij, v] : (model.*(slot.member)).nonzero())
            obj[std::to_string(ij.first) + "," + std::to_string(ij.second)] = v;
        doc[std::string(slot.key)] = std::move(obj);
    }
    return doc.dump(2) + "\n";
}

SystemModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open model file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

void save_model(const SystemModel& model, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write model file " + path.string());
    out << serialize_model(model);
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace kolmo
