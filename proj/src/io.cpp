#include "netform/io.hpp"

#include <fstream>
#include <sstream>

#include "netform/errors.hpp"

namespace netform {
namespace {

using nlohmann::json;

Rational rational_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    const json& v = doc.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number()) return parse_rational(v.dump());
    throw ParseError(std::string("field '") + key + "' must be a number or a string");
}

}  // namespace

GameState game_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("game must be a JSON object");
    if (!doc.contains("n") || !doc.at("n").is_number_integer()) throw ParseError("missing integer field 'n'");
    const int n = doc.at("n").get<int>();
    Adversary adversary = Adversary::MaximumCarnage;
    if (doc.contains("adversary")) adversary = parse_adversary(doc.at("adversary").get<std::string>());
    GameState g(n, rational_field(doc, "alpha"), rational_field(doc, "beta"), adversary);
    try {
        for (const auto& e : doc.value("edges", json::array())) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [owner, endpoint]");
            g.add_edge(e[0].get<PlayerId>(), e[1].get<PlayerId>());
        }
        for (const auto& v : doc.value("immunized", json::array())) g.set_immunized(v.get<PlayerId>(), true);
    } catch (const json::exception& ex) {
        throw ParseError(ex.what());
    }
    return g;
}

json game_to_json(const GameState& g) {
    json edges = json::array();
    json immunized = json::array();
    for (PlayerId v = 0; v < g.size(); ++v) {
        for (PlayerId w : g.strategy(v).endpoints) edges.push_back({v, w});
        if (g.immunized(v)) immunized.push_back(v);
    }
    return {{"n", g.size()},
            {"alpha", to_string(g.alpha())},
            {"beta", to_string(g.beta())},
            {"adversary", std::string(to_string(g.adversary()))},
            {"edges", edges},
            {"immunized", immunized}};
}

GameState parse_game(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ParseError(ex.what());
    }
    return game_from_json(doc);
}

std::string serialize_game(const GameState& g) { return game_to_json(g).dump(2) + "\n"; }

GameState load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game(buf.str());
}

void save_game(const GameState& g, const std::string& path) { write_text_file(path, serialize_game(g)); }

json strategy_to_json(const Strategy& s) { return {{"endpoints", s.endpoints}, {"immunize", s.immunize}}; }

std::string to_dot(const GameState& g) {
    std::ostringstream os;
    os << "digraph netform {\n  node [shape=circle];\n";
    for (PlayerId v = 0; v < g.size(); ++v) {
        os << "  " << v;
        if (g.immunized(v)) os << " [shape=box, style=filled, fillcolor=lightblue]";
        os << ";\n";
    }
    for (PlayerId v = 0; v < g.size(); ++v) {
        for (PlayerId w : g.strategy(v).endpoints) os << "  " << v << " -> " << w << ";\n";
    }
    os << "}\n";
    return os.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << contents;
}

}  // namespace netform
