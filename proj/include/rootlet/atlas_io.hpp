#pragma once

#include <string>

#include <json.hpp>

#include "rootlet/ideals.hpp"

namespace rootlet {

// JSON shapes (field names are stable, arrays follow the canonical orders):
//  root system: {type, rank, simple_roots, positive_roots, theta, h_set, long_flags}
//  affine element: {word, v_matrix, r}
//  atlas: {root_system, ideals: [{id, roots, rootlet?, z, word}],
//          fibers: [{mu, ideals, min, max}]}

nlohmann::json root_system_json(const RootSystem& rs);

nlohmann::json affine_elt_json(const AffineElt& w);
// Rebuilds from the word and validates the stored matrix, translation part,
// form preservation, and coroot-lattice membership.
AffineElt affine_elt_from_json(const RootSystem& rs, const nlohmann::json& j);

nlohmann::json atlas_json(const RootSystem& rs, const Atlas& atlas);
// Checks the embedded root system against rs, replays every word, and
// re-derives the indexes; throws std::invalid_argument on any inconsistency.
Atlas atlas_from_json(const RootSystem& rs, const nlohmann::json& j);

bool atlas_equal(const Atlas& a, const Atlas& b);

// Inclusion Hasse diagram of the ideals, with one cluster per rootlet fiber.
std::string hasse_dot(const RootSystem& rs, const Atlas& atlas);

nlohmann::json fibers_json(const RootSystem& rs, const Atlas& atlas);
std::string fibers_markdown(const RootSystem& rs, const Atlas& atlas, Numbering nb);
std::string fibers_csv(const RootSystem& rs, const Atlas& atlas, Numbering nb);

}  // namespace rootlet
