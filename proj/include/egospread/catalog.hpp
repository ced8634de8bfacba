#pragma once

#include <string>
#include <vector>

#include "egospread/small_graph.hpp"

namespace egospread {

// One of the 15 graphs on three or four vertices, in the fixed row-major
// layout used throughout reports and plots: the 4 order-3 classes first,
// then the 11 order-4 classes, both runs sorted by edge count.
struct SmallGraphClass {
    std::string name;   // display name, e.g. "K3bar", "e+v+v", "K4-e"
    std::string slug;   // file/CLI-safe identifier, e.g. "k3bar", "evv", "k4me"
    int order;
    SmallGraph graph;       // canonical representative
    CanonicalCode code;
    int complement_index;   // index of the complement class in the catalog
};

// The full 15-entry catalog. Complement pairing is derived, not hand-typed.
const std::vector<SmallGraphClass>& catalog();

// Index helpers; throw DomainError when the lookup fails.
const SmallGraphClass& catalog_entry(int index);
int catalog_index_by_slug(const std::string& slug);
int catalog_index_by_code(const CanonicalCode& code);  // -1 if not a catalog class

// True for K3bar/K3/K4bar/K4.
bool is_complete_or_empty(int catalog_index);

inline constexpr int kCatalogSize = 15;
inline constexpr int kOrder3Count = 4;
inline constexpr int kOrder4Count = 11;

}  // namespace egospread
