#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "quivernc/cluster.hpp"
#include "quivernc/latt.hpp"
#include "quivernc/replab.hpp"
#include "quivernc/report.hpp"
#include "quivernc/stab.hpp"
#include "quivernc/weyl.hpp"

namespace quivernc {

using Json = nlohmann::ordered_json;

/// {"vertices": n, "arrows": [[s,t],...]}
Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json root_to_json(const DimVector& v);
/// Integral entries as numbers, others as "a/b" strings.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"dims": [...], "maps": {"0": [[row],...]}, "field": "Q"}
Json rep_to_json(const Representation& m);
Representation rep_from_json(const Quiver& q, const Json& j);

/// {"word": [...], "description": "...", "matrix": [[...],...]}
Json group_element_to_json(const Quiver& q, const GroupElement& w);

Json indec_set_to_json(const IndecSet& s);
IndecSet indec_set_from_json(const Json& j);

/// {"summands": [{"rep": [...]} | {"shift": v}, ...]}
Json cluster_to_json(const ClusterTilting& t);
ClusterTilting cluster_from_json(const Json& j);

Json stability_to_json(const Stability& theta);

/// {"elements": [...], "cover_relations": [[i,j],...]}
Json poset_to_json(const FinitePoset& p);
Json lattice_report_to_json(const FinitePoset& p, const LatticeReport& r);

/// {"check": name, "instances": k, "failures": [...]}
Json report_to_json(const Report& r);

/// Graphviz digraph of the AR quiver, vertices labelled by root.
std::string ar_quiver_dot(const ARQuiver& ar);

}  // namespace quivernc
