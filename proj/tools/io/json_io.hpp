#pragma once

// JSON mirrors of the library types. Parsers throw PreconditionError with
// stage "input" on malformed documents.

#include <json.hpp>  // vendored nlohmann/json
#include <string>

#include "torelli/derivations.hpp"
#include "torelli/fox.hpp"
#include "torelli/free_lie.hpp"
#include "torelli/laurent.hpp"
#include "torelli/resonance.hpp"
#include "torelli/word.hpp"

namespace torelli::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

json read_file(const std::string& path);
json parse_text(const std::string& text);

/// A word may omit its rank; it is then the largest |letter|.
Word word_from_json(const json& j, std::size_t rank = 0);
json to_json(const Word& w);

Presentation presentation_from_json(const json& j);
json to_json(const Presentation& p);

Endo endo_from_json(const json& j);
json to_json(const Endo& e);

LaurentPoly laurent_from_json(const json& j);
json to_json(const LaurentPoly& p);

/// Accepts the schema object or a bare list of rationals.
Character character_from_json(const json& j);
json to_json(const Character& c);

LieElement lie_from_json(const json& j);
json to_json(const LieElement& e);

GradedDerivation derivation_from_json(const json& j);
json to_json(const GradedDerivation& d);

/// Entries plus the word that represents the class.
json to_json(const BFnElement& v, const Word& representative);

json to_json(const ResonanceCertificate& c);

json error_json(const std::string& stage, const std::string& detail);

}  // namespace torelli::io
