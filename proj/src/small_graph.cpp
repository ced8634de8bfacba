#include "egospread/small_graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "egospread/errors.hpp"

namespace egospread {

SmallGraph from_graph(const Graph& g) {
    if (g.vertex_count() > kMaxSmallOrder) throw UnsupportedSizeError("graph order exceeds small-graph limit");
    SmallGraph s{g.vertex_count(), 0};
    for (auto [u, v] : g.edges()) s.set_edge(u, v);
    return s;
}

Graph to_graph(const SmallGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.adj(i, j)) edges.emplace_back(i, j);
    return Graph(g.n, std::move(edges));
}

SmallGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    SmallGraph s{n, 0};
    for (auto [u, v] : edges) s.set_edge(u, v);
    return s;
}

std::string CanonicalCode::to_string() const {
    std::string s = "g" + std::to_string(order) + ":";
    for (int p = 0; p < order * (order - 1) / 2; ++p) s += char('0' + ((bits >> p) & 1));
    return s;
}

namespace {

// Depth-first search for the lexicographically minimal code. At each level
// only vertices whose adjacency bits to the placed prefix are minimal can
// extend a minimal ordering, so everything else is cut; remaining ties are
// explored exhaustively with a running best-prefix bound.
struct CanonSearch {
    const SmallGraph& g;
    int n;
    int total_bits;
    u64 best;  // MSB-first packed code of the best complete ordering so far
    std::array<int, kMaxSmallOrder> placed{};
    u64 used = 0;

    explicit CanonSearch(const SmallGraph& graph)
        : g(graph), n(graph.n), total_bits(graph.total_pairs()) {
        best = total_bits == 64 ? ~u64(0) : (u64(1) << total_bits) - 1;
    }

    void dfs(int level, u64 code, int code_bits) {
        if (level == n) {
            best = std::min(best, code);
            return;
        }
        u64 min_group = ~u64(0);
        std::array<int, kMaxSmallOrder> cand{};
        int cand_count = 0;
        for (int u = 0; u < n; ++u) {
            if (used & (u64(1) << u)) continue;
            u64 group = 0;
            for (int i = 0; i < level; ++i) group = (group << 1) | u64(g.adj(placed[i], u));
            if (group < min_group) {
                min_group = group;
                cand_count = 0;
            }
            if (group == min_group) cand[cand_count++] = u;
        }
        u64 next_code = (code << level) | min_group;
        int next_bits = code_bits + level;
        if (next_code > (best >> (total_bits - next_bits))) return;
        for (int c = 0; c < cand_count; ++c) {
            int u = cand[c];
            placed[level] = u;
            used |= u64(1) << u;
            dfs(level + 1, next_code, next_bits);
            used &= ~(u64(1) << u);
        }
    }
};

u64 msb_to_pair_bits(u64 code, int total_bits) {
    u64 bits = 0;
    for (int p = 0; p < total_bits; ++p)
        if ((code >> (total_bits - 1 - p)) & 1) bits |= u64(1) << p;
    return bits;
}

}  // namespace

CanonicalCode canonical_code(const SmallGraph& g) {
    if (g.n > kMaxSmallOrder) throw UnsupportedSizeError("canonical_code supports order <= 10");
    if (g.n <= 1) return {g.n, 0};
    int m = g.edge_count();
    if (m == 0) return {g.n, 0};
    if (m == g.total_pairs()) return {g.n, g.full_mask()};
    CanonSearch search(g);
    search.dfs(0, 0, 0);
    return {g.n, msb_to_pair_bits(search.best, g.total_pairs())};
}

CanonicalCode canonical_code(const Graph& g) { return canonical_code(from_graph(g)); }

const std::vector<SmallGraph>& enumerate_graph_classes(int n) {
    if (n < 1 || n > 8) throw UnsupportedSizeError("enumerate_graph_classes supports 1 <= n <= 8");
    static std::array<std::vector<SmallGraph>, 9> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache[1].empty()) cache[1] = {SmallGraph{1, 0}};
    for (int order = 2; order <= n; ++order) {
        if (!cache[size_t(order)].empty()) continue;
        std::set<u64> codes;
        int base = (order - 1) * (order - 2) / 2;
        for (const SmallGraph& parent : cache[size_t(order - 1)]) {
            for (u64 nb = 0; nb < (u64(1) << (order - 1)); ++nb) {
                SmallGraph child{order, parent.bits | (nb << base)};
                codes.insert(canonical_code(child).bits);
            }
        }
        std::vector<SmallGraph> classes;
        classes.reserve(codes.size());
        for (u64 c : codes) classes.push_back(SmallGraph{order, c});
        std::sort(classes.begin(), classes.end(), [](const SmallGraph& a, const SmallGraph& b) {
            return std::pair(a.edge_count(), a.bits) < std::pair(b.edge_count(), b.bits);
        });
        cache[size_t(order)] = std::move(classes);
    }
    return cache[size_t(n)];
}

std::pair<i64, i64> induced_density(const SmallGraph& target, const SmallGraph& host) {
    int k = target.n, n = host.n;
    if (k > n) return {0, 1};
    u64 target_code = canonical_code(target).bits;
    std::array<int, kMaxSmallOrder> sel{};
    for (int i = 0; i < k; ++i) sel[size_t(i)] = i;
    i64 count = 0;
    while (true) {
        SmallGraph sub{k, 0};
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i)
                if (host.adj(sel[size_t(i)], sel[size_t(j)])) sub.set_edge(i, j);
        if (canonical_code(sub).bits == target_code) ++count;
        int pos = k - 1;
        while (pos >= 0 && sel[size_t(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++sel[size_t(pos)];
        for (int j = pos + 1; j < k; ++j) sel[size_t(j)] = sel[size_t(j - 1)] + 1;
    }
    return {count, binomial(n, k)};
}

}  // namespace egospread
