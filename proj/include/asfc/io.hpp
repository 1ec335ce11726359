#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "asfc/springer.hpp"
#include "asfc/symfunc.hpp"
#include "asfc/tableau.hpp"
#include "asfc/verify.hpp"

namespace asfc {

/// {"n", "inner", "sign": "+"|"-", "entries": [[i, j, label], ...]}
nlohmann::json tableau_to_json(const Tableau& t);
/// Throws std::invalid_argument on schema errors, boxes outside the shape,
/// missing rows, or a non-semistandard filling.
Tableau tableau_from_json(const nlohmann::json& j);

/// {"degree", "basis", "coeffs": [{"index": [...], "poly": [[q, t, c], ...]}]}
nlohmann::json symfunc_to_json(const SymFunc& f);
/// Header "basis,index,q_exp,t_exp,coefficient", one row per term; the
/// index is written with '.' separators so it stays one CSV field.
std::string symfunc_to_csv(const SymFunc& f);

nlohmann::json cell_to_json(const CellRecord& c);
nlohmann::json parahoric_to_json(const ParahoricCell& c);
nlohmann::json report_to_json(const Report& r);

}  // namespace asfc
