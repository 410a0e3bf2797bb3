#include "hopfmzv/errors.hpp"
#include "hopfmzv/morphism.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace hopfmzv {

using nlohmann::json;

Character parse_character(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CharacterError(std::string("character file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("max_weight") || !doc["max_weight"].is_number_unsigned() ||
        !doc.contains("values") || !doc["values"].is_object())
        throw CharacterError("character file needs \"max_weight\" (non-negative integer) and \"values\" (object)");
    const std::string label = doc.value("label", std::string("unnamed"));
    const unsigned max_weight = doc["max_weight"].get<unsigned>();

    Character::ValueMap values;
    for (const auto& [key, value] : doc["values"].items()) {
        if (!value.is_string())
            throw CharacterError("character value for \"" + key + "\" must be a fraction string");
        try {
            values.insert_or_assign(Composition::parse_canonical(key), parse_rational(value.get<std::string>()));
        } catch (const ParseError& e) {
            throw CharacterError("character file entry \"" + key + "\": " + e.what());
        }
    }
    Character chi(label, max_weight, std::move(values));
    if (auto check = char_validate(chi); !check)
        throw CharacterError("character \"" + label + "\" is not multiplicative: " + check.message);
    return chi;
}

Character load_character(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CharacterError("cannot open character file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_character(buffer.str());
}

std::string serialize(const Character& chi) {
    json values = json::object();
    for (const auto& [c, q] : chi.values())
        values[c.to_string()] = to_fraction_string(q);
    json doc = {{"label", chi.label()}, {"max_weight", chi.max_weight()}, {"values", values}};
    return doc.dump(2);
}

} // namespace hopfmzv
