#pragma once

#include "epist/bispecial.hpp"
#include "epist/dbonacci.hpp"
#include "epist/exponent.hpp"
#include "epist/maximality.hpp"
#include "epist/morphism.hpp"
#include "epist/oracle.hpp"

#include <json.hpp>

#include <string>

namespace epist {

// All numeric payloads are decimal strings so golden files never see float
// drift; enclosure endpoints are rounded outward.
constexpr int kJsonFracDigits = 30;

nlohmann::json to_json(const Word& w);            // "0,1,0"
nlohmann::json to_json(const Morphism& m);        // {"d":., "images":[...]}
nlohmann::json to_json(const BispecialRecord& r);
nlohmann::json to_json(const ExponentEstimate& e);
nlohmann::json to_json(const RatInterval& iv);
nlohmann::json to_json(const ComplexEnclosure& c);
nlohmann::json to_json(const DBonacciConstants& c);
nlohmann::json to_json(const SearchResult& r, bool all_argmax);
nlohmann::json to_json(const oracle::RepetitionRecord& r);
nlohmann::json to_json(const oracle::ExtensionProfile& p);

// {"command":..., "params":..., "result":..., "versions":...}
nlohmann::json envelope(const std::string& command, nlohmann::json params,
                        nlohmann::json result);

// Aligned-text rendering of the same payload; numeric content is identical
// to the JSON by construction (the text is generated from the JSON).
std::string render_text(const nlohmann::json& envelope);

}  // namespace epist
