#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "linearr/aomoto.hpp"
#include "linearr/monodromy.hpp"
#include "linearr/nets.hpp"
#include "linearr/pencil.hpp"

namespace linearr {

using Json = nlohmann::ordered_json;

/// "cyclic" or "klein" for the two order-4 classes, "cyclic" for orders
/// 2 and 3; empty when the class has no name here.
std::string main_class_name(const LatinSquare& s);

Json arrangement_json(const Arrangement& a);
Json census_json(const Census& c);
Json betti_json(const BettiResult& r);
Json net_json(const Lattice& lat, const NetStructure& n);
Json pencil_json(const std::optional<PencilRelation>& r);
Json monodromy_json(const MonodromyReport& r);

/// Every net with 3 classes, plus 4 classes when 4 divides d.
std::vector<NetStructure> report_nets(const Lattice& lat);

/// Top-level keys: arrangement, census, betti, nets, pencil, monodromy.
Json analysis_report(const Arrangement& a);

}  // namespace linearr
