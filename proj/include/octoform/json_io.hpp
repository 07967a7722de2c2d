#pragma once

#include "octoform/conegeo.hpp"
#include "octoform/exterior.hpp"
#include "octoform/groups.hpp"
#include "octoform/linalg.hpp"
#include "octoform/octonion.hpp"

#include <json.hpp>

namespace octoform {

// Wire schemas (rationals are always "p" / "p/q" strings):
//   Form:    {"dim":7,"degree":3,"terms":[{"idx":[1,2,7],"coef":"1"},...]}
//   OrthMap: {"dim":8,"rows":[["1","0",...],...]}
//   Octonion: ["1","0","-3/4",...]        (8 entries, e0 first)
//   Group:   {"dim":8,"order":N,"generators":[OrthMap...],
//             "labels":[...],"elements":[OrthMap...]}

nlohmann::json form_to_json(const Form& f);
Form form_from_json(const nlohmann::json& j);

nlohmann::json orthmap_to_json(const OrthMap& m);
OrthMap orthmap_from_json(const nlohmann::json& j);

nlohmann::json octonion_to_json(const Octonion& o);
Octonion octonion_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

nlohmann::json classification_to_json(const ClassificationReport& r);
nlohmann::json residual_to_json(const ResidualReport& r);

} // namespace octoform
