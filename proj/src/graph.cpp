#include "egospread/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "egospread/errors.hpp"

namespace egospread {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), adj_(n) {
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge endpoint out of range");
        if (u == v) continue;
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges) {
        if (u == v) continue;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int w = (&a == &adj_[u]) ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_t(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string LoadedGraph::summary() const {
    std::ostringstream os;
    os << "vertices=" << graph.vertex_count() << " edges=" << graph.edge_count()
       << " self_loops_dropped=" << stats.self_loops_dropped
       << " duplicates_collapsed=" << stats.duplicates_collapsed;
    return os.str();
}

namespace {

bool parse_id(const std::string& tok, i64& out) {
    if (tok.empty()) return false;
    i64 v = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        v = v * 10 + (c - '0');
        if (v < 0) return false;
    }
    out = v;
    return true;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, const LoadOptions& opts) {
    LoadedGraph result;
    std::unordered_map<i64, int> id_map;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    long line_no = 0;
    i64 max_raw_id = -1;

    auto intern = [&](i64 raw) {
        if (!opts.relabel) {
            max_raw_id = std::max(max_raw_id, raw);
            if (raw > (1 << 30)) throw ParseError("vertex id too large without relabeling", line_no);
            return int(raw);
        }
        auto [it, inserted] = id_map.try_emplace(raw, int(result.original_ids.size()));
        if (inserted) result.original_ids.push_back(raw);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') continue;

        std::string cleaned = line.substr(start);
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::istringstream ls(cleaned);
        std::string t1, t2, extra;
        ls >> t1 >> t2;
        if (t2.empty()) throw ParseError("expected two integer tokens", line_no);
        if (ls >> extra) throw ParseError("unexpected extra token '" + extra + "'", line_no);
        i64 a, b;
        if (!parse_id(t1, a) || !parse_id(t2, b))
            throw ParseError("non-integer token in edge line", line_no);
        ++result.stats.lines_parsed;

        if (a == b) {
            if (!opts.drop_self_loops) throw ParseError("self loop not allowed", line_no);
            ++result.stats.self_loops_dropped;
            continue;
        }
        int ia = intern(a);
        int ib = intern(b);
        edges.emplace_back(ia, ib);
    }
    if (result.stats.lines_parsed == 0) throw ParseError("empty edge list input");

    int n = opts.relabel ? int(result.original_ids.size()) : int(max_raw_id + 1);
    if (!opts.relabel) {
        result.original_ids.resize(size_t(n));
        for (int v = 0; v < n; ++v) result.original_ids[size_t(v)] = v;
    }

    // Count collapsed duplicates before Graph construction dedupes.
    {
        auto sorted = edges;
        for (auto& e : sorted)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(sorted.begin(), sorted.end());
        i64 uniq = i64(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
        result.stats.duplicates_collapsed = i64(sorted.size()) - uniq;
        if (!opts.dedupe && result.stats.duplicates_collapsed > 0)
            throw ParseError("duplicate edges present and dedupe disabled");
    }

    result.graph = Graph(n, std::move(edges));
    return result;
}

LoadedGraph load_edge_list_file(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open edge list: " + path);
    return load_edge_list(in, opts);
}

Graph ego_network(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw DomainError("ego vertex out of range");
    const auto& nbrs = g.neighbors(v);  // already sorted
    std::unordered_map<int, int> index;
    index.reserve(nbrs.size() * 2);
    for (size_t i = 0; i < nbrs.size(); ++i) index[nbrs[i]] = int(i);

    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < nbrs.size(); ++i) {
        for (int w : g.neighbors(nbrs[i])) {
            auto it = index.find(w);
            if (it != index.end() && int(i) < it->second) edges.emplace_back(int(i), it->second);
        }
    }
    return Graph(int(nbrs.size()), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

}  // namespace egospread
