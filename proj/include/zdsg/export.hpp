#pragma once

#include <ostream>
#include <string>

#include "zdsg/classifier.hpp"
#include "zdsg/zd_graph.hpp"

namespace zdsg {

/// One JSON object per line, same schema as to_json(MulTable).
void write_ndjson(std::ostream& os, const MulTable& t);

/// Catalog array sorted by key, pretty-printed with one-space indent.
void write_catalog_json(std::ostream& os, const ClassCatalog& c);

/// Columns: target,n,class_id,x1_square_case,r,k,t,mu,multiplicity,key.
/// x1_square_case and r are filled for K_n+1 (r only when x_1^2 = x_1);
/// k, t and mu only for K_n. mu is space-separated.
void write_catalog_csv(std::ostream& os, const ClassCatalog& c, const TargetGraph& target);

/// The target graph, emitted once, with one annotation line per class.
void write_catalog_dot(std::ostream& os, const ClassCatalog& c, const TargetGraph& target);

/// The target graph itself in the standard layout (a_i = i, x_1 = n + 1).
SimpleGraph target_graph(const TargetGraph& target);

}  // namespace zdsg
