#pragma once

// On-disk JSON documents for finite 2-categories and 2-functors, reference
// resolution (catalog name, catalog directory, file path) and DOT export.
//
// A 2-category document lists objects, then one block per ordered pair of
// objects holding that hom's 1-cells, 2-cells and vertical composition, then
// the composition of 1-cells and the horizontal composition. Entries forced by
// the unit laws are left out on save and filled back in on load, so a saved
// document is a fixpoint of load followed by save.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "grayfac/kernel.hpp"

namespace grayfac {

using Json = nlohmann::ordered_json;

inline constexpr int kDocumentVersion = 1;

Json to_json(const Fin2Category& c);
/// Throws MalformedSpec on a shape error and AxiomViolation if the tables
/// fail a 2-category law.
Fin2CategoryPtr from_json(const Json& doc);

/// Canonical text: two-space indentation, trailing newline.
std::string save_document(const Fin2Category& c);
Fin2CategoryPtr load_document(std::string_view text);

/// A catalog name, a NAME.json in the directory named by GRAYFAC_CATALOG_DIR
/// (which takes precedence over the built-in catalog), or a path.
Fin2CategoryPtr resolve_2category(const std::string& ref);
/// As resolve_2category, but also accepts an inline document object.
Fin2CategoryPtr resolve_2category(const Json& ref);

/// {"dom": ref, "cod": ref, "obj": [...], "c1": [...], "c2": [...]} with
/// cells given by id or by name. Validated.
TwoFunctor functor_from_json(const Json& doc);
Json to_json(const TwoFunctor& f);

std::string read_file(const std::filesystem::path& p);

/// Objects as nodes, non-identity 1-cells as edges labelled with their name
/// and the number of 2-cells out of them.
std::string to_dot(const Fin2Category& c);

}  // namespace grayfac
