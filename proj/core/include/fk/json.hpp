#pragma once

#include <json.hpp>

#include "fk/alexjones.hpp"
#include "fk/apoly.hpp"
#include "fk/fk_series.hpp"
#include "fk/hbar.hpp"
#include "fk/lpoly.hpp"
#include "fk/surgery.hpp"

namespace fk {

using json = nlohmann::ordered_json;

json to_json(const LPoly& p);
LPoly lpoly_from_json(const json& j);

json to_json(const NPoly& p);
NPoly npoly_from_json(const json& j);
json to_json(const HbarSeries& h);
HbarSeries hbar_from_json(const json& j);

json to_json(const KnotDescriptor& k);
KnotDescriptor knot_from_json(const json& j);
json to_json(const FkSeries& f);
FkSeries fk_series_from_json(const json& j);

json to_json(const MRecursion& rec);
MRecursion m_recursion_from_json(const json& j);

json to_json(const QSeries& s);
json to_json(const XSeries& s);
json to_json(const HTable& h);
HTable htable_from_json(const json& j);

}  // namespace fk
