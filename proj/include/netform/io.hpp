#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "netform/game_state.hpp"

namespace netform {

/// Game file layout:
///   {"n": 4, "alpha": "1/2", "beta": 2, "adversary": "max_carnage",
///    "edges": [[owner, endpoint], ...], "immunized": [ids...]}
/// Costs may be strings ("p/q", decimals) or JSON numbers. Adversary
/// defaults to max_carnage.
GameState game_from_json(const nlohmann::json& doc);
nlohmann::json game_to_json(const GameState& g);

GameState parse_game(std::string_view text);
std::string serialize_game(const GameState& g);

GameState load_game(const std::string& path);
void save_game(const GameState& g, const std::string& path);

nlohmann::json strategy_to_json(const Strategy& s);

/// Graphviz rendering; immunized players are boxes, edges point from owner
/// to endpoint.
std::string to_dot(const GameState& g);

void write_text_file(const std::string& path, std::string_view contents);

}  // namespace netform
