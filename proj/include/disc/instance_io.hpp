#pragma once

#include "disc/instance.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>

namespace disc {

inline constexpr int json_format_version = 1;

using Instance = std::variant<Instance1D, Instance2D>;

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Instance1D& inst);
nlohmann::json to_json(const Instance2D& inst);
nlohmann::json to_json(const Instance& inst);

Instance read_instance(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

/// `{"format":1,"chosen":[...]}` for discrete solutions.
nlohmann::json chosen_solution_json(const IndexSet& chosen);
/// `{"format":1,"scale":s,"centers":[[x,y],...]}` for continuous solutions.
nlohmann::json centers_solution_json(Coord scale, const std::vector<Point2>& centers);

} // namespace disc
