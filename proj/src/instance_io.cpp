#include "disc/instance_io.hpp"

#include <fstream>

namespace disc {

using nlohmann::json;

namespace {

Coord get_coord(const json& v, const char* what) {
    if (!v.is_number_integer())
        throw InputError(std::string(what) + " must be an integer in scale units");
    return v.get<Coord>();
}

Point2 get_point(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 2)
        throw InputError(std::string(what) + " must be an [x, y] pair");
    return {get_coord(v[0], what), get_coord(v[1], what)};
}

json point_json(Point2 p) { return json::array({p.x, p.y}); }

} // namespace

Instance instance_from_json(const json& j) {
    if (!j.is_object())
        throw InputError("instance must be a JSON object");
    if (j.contains("format") && j.at("format") != json_format_version)
        throw InputError("unsupported instance format version");
    Coord scale = j.contains("scale") ? get_coord(j.at("scale"), "scale") : 1;
    int dim = j.contains("dim") ? j.at("dim").get<int>() : (j.contains("intervals") ? 1 : 2);
    if (!j.contains("points") || !j.at("points").is_array())
        throw InputError("instance needs a points array");

    if (dim == 1) {
        Instance1D inst;
        inst.scale = scale;
        for (const auto& p : j.at("points"))
            inst.points.push_back(get_coord(p, "point"));
        if (j.contains("intervals"))
            for (const auto& s : j.at("intervals")) {
                if (!s.is_array() || s.size() != 2)
                    throw InputError("interval must be an [l, r] pair");
                inst.intervals.push_back({get_coord(s[0], "interval end"), get_coord(s[1], "interval end")});
            }
        validate(inst);
        return inst;
    }
    if (dim != 2)
        throw InputError("dim must be 1 or 2");
    Instance2D inst;
    inst.scale = scale;
    for (const auto& p : j.at("points"))
        inst.points.push_back(get_point(p, "point"));
    if (j.contains("squares")) {
        inst.squares.emplace();
        for (const auto& c : j.at("squares"))
            inst.squares->push_back(get_point(c, "square center"));
    }
    validate(inst);
    return inst;
}

json to_json(const Instance1D& inst) {
    json j;
    j["format"] = json_format_version;
    j["scale"] = inst.scale;
    j["dim"] = 1;
    j["points"] = inst.points;
    json iv = json::array();
    for (const auto& s : inst.intervals)
        iv.push_back(json::array({s.left, s.right}));
    j["intervals"] = iv;
    return j;
}

json to_json(const Instance2D& inst) {
    json j;
    j["format"] = json_format_version;
    j["scale"] = inst.scale;
    j["dim"] = 2;
    json pts = json::array();
    for (auto p : inst.points)
        pts.push_back(point_json(p));
    j["points"] = pts;
    if (inst.squares) {
        json sq = json::array();
        for (auto c : *inst.squares)
            sq.push_back(point_json(c));
        j["squares"] = sq;
    }
    return j;
}

json to_json(const Instance& inst) {
    return std::visit([](const auto& i) { return to_json(i); }, inst);
}

Instance read_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    return instance_from_json(j);
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

json chosen_solution_json(const IndexSet& chosen) {
    json j;
    j["format"] = json_format_version;
    j["chosen"] = chosen;
    return j;
}

json centers_solution_json(Coord scale, const std::vector<Point2>& centers) {
    json j;
    j["format"] = json_format_version;
    j["scale"] = scale;
    json c = json::array();
    for (auto p : centers)
        c.push_back(point_json(p));
    j["centers"] = c;
    return j;
}

} // namespace disc
