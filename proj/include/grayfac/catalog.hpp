#pragma once

#include <string>
#include <vector>

#include "grayfac/kernel.hpp"

namespace grayfac {

/// A locally thin 2-category presented by an acyclic graph and generating
/// 2-cell relations between parallel paths. 1-cells are all paths; there is
/// one 2-cell p => q exactly when q is reachable from p by whiskered
/// relations and transitivity.
struct ThinSpec {
  struct Edge {
    std::string name;
    int src;
    int tgt;
  };
  struct Relation {
    std::vector<std::string> lhs;  // edges in order of traversal
    std::vector<std::string> rhs;
    bool invertible = false;
  };
  std::string name;
  std::vector<std::string> objects;
  std::vector<Edge> edges;
  std::vector<Relation> relations;
};

Fin2CategoryPtr thin_from_graph(const ThinSpec& spec);

/// 1-cell of a thin 2-category named by its path (edges in traversal order).
CellId path_cell(const Fin2Category& c, const std::vector<std::string>& edges);

struct CatalogEntry {
  std::string name;
  std::string description;
  Fin2CategoryPtr (*make)();
};

const std::vector<CatalogEntry>& catalog();

/// Throws MalformedSpec for an unknown name.
Fin2CategoryPtr catalog_get(const std::string& name);

Fin2CategoryPtr walking_invertible_2cell();
Fin2CategoryPtr walking_isomorphism();
/// One object with a single non-identity endo-1-cell u, u∘u = 1.
Fin2CategoryPtr loop();
Fin2CategoryPtr pseudo_commutative_square();
/// Objects a, b, c, d; 1-cells f, f': a -> b, g, g': c -> d, r: a -> c,
/// s: b -> d; 2-cells alpha: f => f', beta: g => g', invertible
/// theta: g r => s f, theta': g' r => s f'.
Fin2CategoryPtr square_with_two_cells();

/// The catalog entries that are locally contractible.
std::vector<Fin2CategoryPtr> locally_contractible_catalog();

}  // namespace grayfac
