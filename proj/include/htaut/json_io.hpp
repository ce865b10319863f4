#pragma once

#include "htaut/delliptic.hpp"
#include "htaut/finite_group.hpp"
#include "htaut/ggraph.hpp"
#include "htaut/hbar_intersection.hpp"
#include "htaut/hbar_pullback.hpp"
#include "htaut/quasimodular.hpp"
#include "htaut/rational.hpp"
#include "htaut/stable_graph.hpp"
#include "htaut/tautological.hpp"

#include <json.hpp>

namespace htaut {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings ("p" when integral); plain JSON integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

// Permutations are 1-based one-line image arrays.
Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

// {"degree", "generators"}; also {"symmetric": d}, {"cyclic": n} or {"product": [g, h]}.
Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);
Json element_to_json(const FiniteGroup& g, Element e);
Element element_from_json(const FiniteGroup& g, const Json& j);

// {"genera", "half_edge_vertex", "edges": [[h, h']], "legs": [[label, vertex]]}; indices 0-based,
// leg labels 1..n.
Json to_json(const StableGraph& g);
StableGraph stable_graph_from_json(const Json& j);

Json to_json(const GraphMorphism& f);
Json to_json(const Decoration& d);
Decoration decoration_from_json(const Json& j);
Json to_json(const GraphClass& c);
Json to_json(const StratumClass& c);
StratumClass stratum_class_from_json(const Json& j);

Json to_json(const MonodromyDatum& xi);
Json to_json(const HurwitzSpaceId& id);

// The "group" field may be omitted when `group` is supplied.
Json to_json(const AdmissibleGGraph& g, bool include_group = true);
AdmissibleGGraph ggraph_from_json(const Json& j, GroupPtr group = nullptr);
HurwitzSpaceId hurwitz_id_from_json(const Json& j, const GroupPtr& group);

Json to_json(const ValidationReport& r, const FiniteGroup& g);
Json to_json(const HIntersectionTerm& t);
Json to_json(const HClassTerm& t);

Json to_json(const StratumContribution& c);
Json to_json(const QuasimodularFit& f);

}  // namespace htaut
