#include "egospread/catalog.hpp"

#include <map>
#include <mutex>

#include "egospread/errors.hpp"

namespace egospread {

namespace {

std::vector<SmallGraphClass> build_catalog() {
    struct Def {
        const char* name;
        const char* slug;
        int order;
        std::initializer_list<std::pair<int, int>> edges;
    };
    // Row-major order: K3bar P3bar P3 K3 / K4bar e+v+v e+e P3+v / K3+v K13 P4 K3+pendant / C4 K4-e K4.
    const Def defs[] = {
        {"K3bar", "k3bar", 3, {}},
        {"P3bar", "p3bar", 3, {{0, 1}}},
        {"P3", "p3", 3, {{0, 1}, {1, 2}}},
        {"K3", "k3", 3, {{0, 1}, {1, 2}, {0, 2}}},
        {"K4bar", "k4bar", 4, {}},
        {"e+v+v", "evv", 4, {{0, 1}}},
        {"e+e", "ee", 4, {{0, 1}, {2, 3}}},
        {"P3+v", "p3v", 4, {{0, 1}, {1, 2}}},
        {"K3+v", "k3v", 4, {{0, 1}, {1, 2}, {0, 2}}},
        {"K1,3", "k13", 4, {{0, 1}, {0, 2}, {0, 3}}},
        {"P4", "p4", 4, {{0, 1}, {1, 2}, {2, 3}}},
        {"K3+pendant", "k3pendant", 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}},
        {"C4", "c4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
        {"K4-e", "k4me", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}},
        {"K4", "k4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
    };

    std::vector<SmallGraphClass> cat;
    for (const Def& d : defs) {
        SmallGraph g = from_edges(d.order, d.edges);
        CanonicalCode code = canonical_code(g);
        cat.push_back({d.name, d.slug, d.order, SmallGraph{d.order, code.bits}, code, -1});
    }
    // Complement pairing by classifying each complement's canonical code.
    for (size_t i = 0; i < cat.size(); ++i) {
        CanonicalCode cc = canonical_code(cat[i].graph.complement());
        for (size_t j = 0; j < cat.size(); ++j) {
            if (cat[j].code == cc) {
                cat[i].complement_index = int(j);
                break;
            }
        }
        if (cat[i].complement_index < 0) throw Error("catalog complement classification failed");
    }
    return cat;
}

}  // namespace

const std::vector<SmallGraphClass>& catalog() {
    static const std::vector<SmallGraphClass> cat = build_catalog();
    return cat;
}

const SmallGraphClass& catalog_entry(int index) {
    if (index < 0 || index >= kCatalogSize) throw DomainError("catalog index out of range");
    return catalog()[size_t(index)];
}

int catalog_index_by_slug(const std::string& slug) {
    for (int i = 0; i < kCatalogSize; ++i)
        if (catalog()[size_t(i)].slug == slug) return i;
    throw DomainError("unknown target '" + slug + "'");
}

int catalog_index_by_code(const CanonicalCode& code) {
    for (int i = 0; i < kCatalogSize; ++i)
        if (catalog()[size_t(i)].code == code) return i;
    return -1;
}

bool is_complete_or_empty(int catalog_index) {
    const auto& e = catalog_entry(catalog_index);
    int m = e.graph.edge_count();
    return m == 0 || m == e.graph.total_pairs();
}

}  // namespace egospread
