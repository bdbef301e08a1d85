// JSON (de)serialization shared by the CLI and tests.
#pragma once

#include <json.hpp>

#include "lenscape/artin.hpp"
#include "lenscape/lattice.hpp"
#include "lenscape/mcg.hpp"
#include "lenscape/numbers.hpp"
#include "lenscape/tight.hpp"

namespace lenscape {

using Json = nlohmann::ordered_json;

// decimal string -> Int, rejecting anything but an optional sign and digits
Int parse_int(const std::string& s);

// int64 when it fits, decimal string otherwise
Json json_int(const Int& x);
Int int_from_json(const Json& j);

Json json_fraction(const Fraction& f); // "num/den"
Json json_int_list(const std::vector<Int>& xs);
Json json_matrix(const IntMatrix& m); // row-major nested arrays

// words as signed integer arrays; presentations as {"n": n, "relations": [...]}
Json word_to_json(const Word& w);
Word word_from_json(const Json& j, int rank);
Json presentation_to_json(const ArtinPresentation& p);
ArtinPresentation presentation_from_json(const Json& j);

// factorizations as {"holes": [names...], "twists": [{"holes": [names], "power": k}]}
Json factorization_to_json(const TwistFactorization& f);
TwistFactorization factorization_from_json(const Json& j);

// {"holes": [names...], "curves": [[names...], ...]}
Configuration configuration_from_json(const Json& j, std::vector<std::string>& names_out);
Json configuration_to_json(const Configuration& curves,
                           const std::vector<std::string>& names);

} // namespace lenscape
