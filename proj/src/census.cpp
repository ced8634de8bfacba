#include "egospread/census.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "egospread/errors.hpp"
#include "egospread/small_graph.hpp"

namespace egospread {

namespace {

i64 checked_i64(i128 v, const char* what) {
    if (v < 0 || v > i128(INT64_MAX)) throw Error(std::string("census overflow in ") + what);
    return i64(v);
}

// mask -> catalog index lookup for labeled graphs on 3 and 4 vertices.
struct ClassLut {
    std::array<int, 8> order3;
    std::array<int, 64> order4;
};

const ClassLut& class_lut() {
    static const ClassLut lut = [] {
        ClassLut t{};
        for (u64 bits = 0; bits < 8; ++bits)
            t.order3[bits] = catalog_index_by_code(canonical_code(SmallGraph{3, bits}));
        for (u64 bits = 0; bits < 64; ++bits)
            t.order4[bits] = catalog_index_by_code(canonical_code(SmallGraph{4, bits})) - kOrder3Count;
        return t;
    }();
    return lut;
}

template <size_t K>
std::array<std::array<i64, K>, K> derive_contain(int order, int catalog_offset) {
    std::array<std::array<i64, K>, K> c{};
    const auto& lut = class_lut();
    auto classify = [&](u64 bits) {
        return order == 3 ? lut.order3[bits] : lut.order4[bits];
    };
    for (size_t h = 0; h < K; ++h) {
        u64 host = catalog_entry(int(h) + catalog_offset).graph.bits;
        // Every spanning subgraph of the representative is an edge submask.
        u64 sub = host;
        while (true) {
            int p = classify(sub) - (order == 3 ? 0 : 0);
            c[size_t(p)][h] += 1;
            if (sub == 0) break;
            sub = (sub - 1) & host;
        }
    }
    return c;
}

// Inverse of a containment matrix. Unitriangular in catalog order (classes
// sorted by edge count, ties only on the diagonal), so the inverse is integral.
template <size_t K>
std::array<std::array<i64, K>, K> invert_unitriangular(const std::array<std::array<i64, K>, K>& c) {
    for (size_t i = 0; i < K; ++i) {
        if (c[i][i] != 1) throw Error("containment matrix is not unitriangular");
        for (size_t j = 0; j < i; ++j)
            if (c[i][j] != 0) throw Error("containment matrix has entries below the diagonal");
    }
    std::array<std::array<i64, K>, K> inv{};
    for (size_t col = 0; col < K; ++col) {
        // Solve c * x = e_col by back substitution.
        std::array<i64, K> x{};
        for (size_t i = K; i-- > 0;) {
            i128 acc = (i == col) ? 1 : 0;
            for (size_t j = i + 1; j < K; ++j) acc -= i128(c[i][j]) * x[j];
            x[i] = checked_i64(acc < 0 ? -acc : acc, "inverse") * (acc < 0 ? -1 : 1);
        }
        for (size_t i = 0; i < K; ++i) inv[i][col] = x[i];
    }
    return inv;
}

template <size_t K>
std::array<i64, K> apply_inverse(const std::array<std::array<i64, K>, K>& contain,
                                 const std::array<i128, K>& non_induced, const char* what) {
    std::array<i64, K> induced{};
    for (size_t i = K; i-- > 0;) {
        i128 acc = non_induced[i];
        for (size_t j = i + 1; j < K; ++j) acc -= i128(contain[i][j]) * induced[j];
        induced[i] = checked_i64(acc, what);
    }
    return induced;
}

// Flat bit matrix for neighborhood intersections.
struct BitAdjacency {
    int n;
    int words;
    std::vector<u64> rows;

    explicit BitAdjacency(const Graph& g) : n(g.vertex_count()), words((n + 63) / 64), rows(size_t(n) * size_t(words), 0) {
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) row(v)[size_t(u / 64)] |= u64(1) << (u % 64);
    }
    u64* row(int v) { return rows.data() + size_t(v) * size_t(words); }
    const u64* row(int v) const { return rows.data() + size_t(v) * size_t(words); }

    int intersect_count(int u, int v) const {
        const u64 *a = row(u), *b = row(v);
        int c = 0;
        for (int w = 0; w < words; ++w) c += __builtin_popcountll(a[w] & b[w]);
        return c;
    }
};

struct Primitives {
    i64 n = 0, m = 0;
    i128 wedges = 0;        // sum C(d,2)
    i128 stars3 = 0;        // sum C(d,3)
    i128 triangles = 0;
    i128 path_sum = 0;      // sum over edges of (du-1)(dv-1)
    i128 tailed = 0;        // sum over triangles of spare degrees
    i128 diamonds = 0;      // sum over edges of C(te,2)
    i128 c4_pairsum = 0;    // sum over vertex pairs of C(codeg,2)
    i128 k4_six = 0;        // 6 * number of non-induced K4
};

Primitives bitset_primitives(const Graph& g) {
    Primitives p;
    p.n = g.vertex_count();
    p.m = g.edge_count();
    int n = g.vertex_count();
    BitAdjacency bits(g);

    std::vector<i64> tri_at(size_t(n), 0);
    std::vector<u64> common(size_t(bits.words), 0);
    for (int u = 0; u < n; ++u) {
        i64 du = g.degree(u);
        p.wedges += i128(du) * (du - 1) / 2;
        p.stars3 += i128(du) * (du - 1) * (du - 2) / 6;
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            const u64 *ru = bits.row(u), *rv = bits.row(v);
            i64 te = 0;
            for (int w = 0; w < bits.words; ++w) {
                common[size_t(w)] = ru[w] & rv[w];
                te += __builtin_popcountll(common[size_t(w)]);
            }
            p.triangles += te;
            tri_at[size_t(u)] += te;
            tri_at[size_t(v)] += te;
            p.diamonds += i128(te) * (te - 1) / 2;
            p.path_sum += i128(du - 1) * (g.degree(v) - 1);
            if (te >= 2) {
                // Edges inside the common neighborhood: each K4 shows up once
                // per one of its six edges playing (u,v).
                for (int w = 0; w < bits.words; ++w) {
                    u64 block = common[size_t(w)];
                    while (block) {
                        int x = w * 64 + __builtin_ctzll(block);
                        block &= block - 1;
                        const u64* rx = bits.row(x);
                        for (int w2 = w; w2 < bits.words; ++w2) {
                            u64 higher = common[size_t(w2)] & rx[w2];
                            if (w2 == w) higher &= ~((u64(2) << (x % 64)) - 1);
                            p.k4_six += __builtin_popcountll(higher);
                        }
                    }
                }
            }
        }
    }
    if (p.triangles % 3 != 0) throw Error("triangle sum not divisible by 3");
    p.triangles /= 3;
    for (int v = 0; v < n; ++v) {
        if (tri_at[size_t(v)] % 2 != 0) throw Error("per-vertex triangle sum not even");
        p.tailed += i128(tri_at[size_t(v)] / 2) * (g.degree(v) - 2);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            i64 c = bits.intersect_count(u, v);
            p.c4_pairsum += i128(c) * (c - 1) / 2;
        }
    return p;
}

// Fallback for ego networks too large for the dense bit matrix: sorted-merge
// intersections and wedge-keyed codegree accumulation.
Primitives merge_primitives(const Graph& g) {
    Primitives p;
    p.n = g.vertex_count();
    p.m = g.edge_count();
    int n = g.vertex_count();

    std::vector<i64> tri_at(size_t(n), 0);
    std::vector<int> common;
    for (int u = 0; u < n; ++u) {
        i64 du = g.degree(u);
        p.wedges += i128(du) * (du - 1) / 2;
        p.stars3 += i128(du) * (du - 1) * (du - 2) / 6;
        const auto& nu = g.neighbors(u);
        for (int v : nu) {
            if (v <= u) continue;
            const auto& nv = g.neighbors(v);
            common.clear();
            std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
            i64 te = i64(common.size());
            p.triangles += te;
            tri_at[size_t(u)] += te;
            tri_at[size_t(v)] += te;
            p.diamonds += i128(te) * (te - 1) / 2;
            p.path_sum += i128(du - 1) * (g.degree(v) - 1);
            for (size_t a = 0; a < common.size(); ++a) {
                const auto& nx = g.neighbors(common[a]);
                size_t b = a + 1;
                auto it = nx.begin();
                while (b < common.size() && it != nx.end()) {
                    if (*it < common[b]) ++it;
                    else if (*it > common[b]) ++b;
                    else { ++p.k4_six; ++it; ++b; }
                }
            }
        }
    }
    if (p.triangles % 3 != 0) throw Error("triangle sum not divisible by 3");
    p.triangles /= 3;
    for (int v = 0; v < n; ++v) {
        if (tri_at[size_t(v)] % 2 != 0) throw Error("per-vertex triangle sum not even");
        p.tailed += i128(tri_at[size_t(v)] / 2) * (g.degree(v) - 2);
    }
    std::unordered_map<int, i64> codeg;
    for (int u = 0; u < n; ++u) {
        codeg.clear();
        for (int x : g.neighbors(u))
            for (int w : g.neighbors(x))
                if (w > u) ++codeg[w];
        for (auto [w, c] : codeg) p.c4_pairsum += i128(c) * (c - 1) / 2;
    }
    return p;
}

}  // namespace

const ConversionTables& conversion_tables() {
    static const ConversionTables tables = [] {
        ConversionTables t;
        t.contain3 = derive_contain<4>(3, 0);
        t.inverse3 = invert_unitriangular<4>(t.contain3);
        t.contain4 = derive_contain<11>(4, kOrder3Count);
        t.inverse4 = invert_unitriangular<11>(t.contain4);
        return t;
    }();
    return tables;
}

std::pair<i64, i64> MotifCensus::density(int catalog_index) const {
    int order = catalog_entry(catalog_index).order;
    i64 den = binomial(n, order);
    if (den == 0) return {0, 1};
    return {count(catalog_index), den};
}

std::pair<i64, i64> MotifCensus::edge_density() const {
    i64 den = binomial(n, 2);
    if (den == 0) return {0, 1};
    return {m, den};
}

void MotifCensus::validate() const {
    i128 s3 = 0, s4 = 0;
    for (i64 c : counts3) {
        if (c < 0) throw Error("negative order-3 census count");
        s3 += c;
    }
    for (i64 c : counts4) {
        if (c < 0) throw Error("negative order-4 census count");
        s4 += c;
    }
    if (s3 != i128(binomial(n, 3)) || s4 != i128(binomial(n, 4)))
        throw Error("census partition identity violated");
}

namespace {

MotifCensus census_from_primitives(const Primitives& p) {
    i64 n = p.n, m = p.m;
    std::array<i128, 4> non3{};
    non3[0] = binomial(n, 3);                       // K3bar pattern: any triple
    non3[1] = n >= 3 ? i128(m) * (n - 2) : 0;       // edge + spare vertex
    non3[2] = p.wedges;                             // P3
    non3[3] = p.triangles;                          // K3

    std::array<i128, 11> non4{};
    non4[0] = binomial(n, 4);                                     // K4bar
    non4[1] = n >= 4 ? i128(m) * binomial(n - 2, 2) : 0;          // e+v+v
    non4[2] = i128(m) * (m - 1) / 2 - p.wedges;                   // e+e
    non4[3] = n >= 4 ? p.wedges * (n - 3) : 0;                    // P3+v
    non4[4] = n >= 4 ? p.triangles * (n - 3) : 0;                 // K3+v
    non4[5] = p.stars3;                                           // K1,3
    non4[6] = p.path_sum - 3 * p.triangles;                       // P4
    non4[7] = p.tailed;                                           // K3+pendant
    non4[8] = p.c4_pairsum / 2;                                   // C4
    non4[9] = p.diamonds;                                         // K4-e
    non4[10] = p.k4_six / 6;                                      // K4
    if (p.c4_pairsum % 2 != 0) throw Error("4-cycle pair sum not even");
    if (p.k4_six % 6 != 0) throw Error("K4 edge sum not divisible by 6");

    const auto& tables = conversion_tables();
    MotifCensus result;
    result.n = n;
    result.m = m;
    result.counts3 = apply_inverse<4>(tables.contain3, non3, "order-3 counts");
    result.counts4 = apply_inverse<11>(tables.contain4, non4, "order-4 counts");
    result.validate();
    return result;
}

}  // namespace

MotifCensus census(const Graph& ego) {
    // Dense bit rows cost n^2/8 bytes; fall back to merges past ~128 MB.
    return census_from_primitives(ego.vertex_count() <= 32768 ? bitset_primitives(ego)
                                                              : merge_primitives(ego));
}

MotifCensus detail::census_merge_path(const Graph& ego) {
    return census_from_primitives(merge_primitives(ego));
}

namespace {

template <int K>
std::array<i64, K == 3 ? 4 : 11> brute_force_census_impl(const Graph& ego) {
    i64 n = ego.vertex_count();
    if (binomial(n, K) > 10'000'000) throw DomainError("brute-force census oracle too large");
    std::array<i64, K == 3 ? 4 : 11> counts{};
    if (n < K) return counts;
    const auto& lut = class_lut();
    std::array<int, K> sel{};
    for (int i = 0; i < K; ++i) sel[size_t(i)] = i;
    while (true) {
        u64 mask = 0;
        for (int j = 1; j < K; ++j)
            for (int i = 0; i < j; ++i)
                if (ego.has_edge(sel[size_t(i)], sel[size_t(j)]))
                    mask |= u64(1) << SmallGraph::pair_index(i, j);
        ++counts[size_t(K == 3 ? lut.order3[mask] : lut.order4[mask])];
        int pos = K - 1;
        while (pos >= 0 && sel[size_t(pos)] == n - K + pos) --pos;
        if (pos < 0) break;
        ++sel[size_t(pos)];
        for (int j = pos + 1; j < K; ++j) sel[size_t(j)] = sel[size_t(j - 1)] + 1;
    }
    return counts;
}

}  // namespace

std::array<i64, kOrder3Count> brute_force_census3(const Graph& ego) {
    return brute_force_census_impl<3>(ego);
}

std::array<i64, kOrder4Count> brute_force_census4(const Graph& ego) {
    return brute_force_census_impl<4>(ego);
}

}  // namespace egospread
