#include "frieze/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace frieze {

Quiver::Quiver(int n, std::vector<std::vector<int>> matrix) : n_(n), matrix_(std::move(matrix)) {
    if (n < 1) throw InvalidInput("quiver needs at least one vertex");
    if (static_cast<int>(matrix_.size()) != n)
        throw InvalidInput("exchange matrix size does not match vertex count");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(matrix_[i].size()) != n)
            throw InvalidInput("exchange matrix is not square");
        for (int j = 0; j < n; ++j)
            if (matrix_[i][j] != -matrix_[j][i])
                throw InvalidInput("exchange matrix is not skew-symmetric");
    }
}

std::vector<Arrow> Quiver::arrows() const {
    std::vector<Arrow> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (b(i, j) > 0) out.push_back({i, j, b(i, j)});
    return out;
}

bool Quiver::is_acyclic() const {
    // Kahn over the arrow digraph.
    std::vector<int> indeg(n_, 0);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (b(i, j) > 0) ++indeg[j - 1];
    std::queue<int> ready;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) ready.push(v);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++seen;
        for (int j = 0; j < n_; ++j)
            if (matrix_[v][j] > 0 && --indeg[j] == 0) ready.push(j);
    }
    return seen == n_;
}

bool Quiver::is_admissible() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (b(i, j) > 0 && i <= j) return false;
    return true;
}

bool Quiver::is_sink(int vertex) const {
    for (int j = 1; j <= n_; ++j)
        if (b(vertex, j) > 0) return false;
    return true;
}

bool Quiver::is_source(int vertex) const {
    for (int j = 1; j <= n_; ++j)
        if (b(j, vertex) > 0) return false;
    return true;
}

LoadedQuiver load_quiver(int n, const std::vector<Arrow>& arrows) {
    if (n < 1) throw InvalidInput("quiver needs at least one vertex");
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    std::set<std::pair<int, int>> seen;
    for (const Arrow& a : arrows) {
        if (a.from < 1 || a.from > n || a.to < 1 || a.to > n)
            throw InvalidArrow("arrow endpoint out of range");
        if (a.from == a.to) throw InvalidArrow("self-loop arrows are not allowed");
        if (a.multiplicity < 1) throw InvalidArrow("arrow multiplicity must be positive");
        if (!seen.insert({a.from, a.to}).second)
            throw InvalidArrow("duplicate arrow in the input");
        if (seen.count({a.to, a.from}))
            throw InvalidArrow("arrows in both directions between two vertices");
        m[a.from - 1][a.to - 1] = a.multiplicity;
        m[a.to - 1][a.from - 1] = -a.multiplicity;
    }
    Quiver q(n, std::move(m));
    if (!q.is_acyclic()) throw NotAcyclic("the arrow digraph has an oriented cycle");

    std::vector<int> relabeling(n);
    std::iota(relabeling.begin(), relabeling.end(), 1);
    if (q.is_admissible()) return {q, relabeling, false};

    // Kahn from sinks, smallest original index first, so sinks get label 1, 2, ...
    std::vector<int> outdeg(n, 0);
    for (const Arrow& a : arrows) ++outdeg[a.from - 1];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (outdeg[v] == 0) ready.push(v);
    int next_label = 1;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        relabeling[v] = next_label++;
        for (int u = 0; u < n; ++u)
            if (q.b(u + 1, v + 1) > 0 && --outdeg[u] == 0) ready.push(u);
    }
    std::vector<std::vector<int>> rm(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rm[relabeling[i] - 1][relabeling[j] - 1] = q.matrix()[i][j];
    return {Quiver(n, std::move(rm)), relabeling, true};
}

Quiver mutate_quiver(const Quiver& q, int k) {
    const int n = q.n();
    if (k < 1 || k > n) throw InvalidInput("mutation vertex out of range");
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == k || j == k) {
                m[i - 1][j - 1] = -q.b(i, j);
            } else {
                int path = q.b(i, k) * q.b(k, j);
                int sign = q.b(i, k) > 0 ? 1 : (q.b(i, k) < 0 ? -1 : 0);
                m[i - 1][j - 1] = q.b(i, j) + sign * std::max(path, 0);
            }
        }
    }
    return Quiver(n, std::move(m));
}

Quiver coxeter_mutate_quiver(const Quiver& q) {
    if (!q.is_admissible()) throw InvalidInput("quiver is not admissibly labeled");
    Quiver cur = q;
    for (int k = 1; k <= q.n(); ++k) cur = mutate_quiver(cur, k);
    return cur;
}

std::string to_string(QuiverKind kind) {
    switch (kind) {
        case QuiverKind::Finite: return "finite";
        case QuiverKind::Tame: return "tame";
        case QuiverKind::Wild: return "wild";
    }
    return "?";
}

namespace {

struct Component {
    std::vector<int> vertices;  // 0-based
    int edges = 0;
    int max_multiplicity = 1;
};

std::vector<Component> undirected_components(const Quiver& q) {
    const int n = q.n();
    std::vector<int> comp(n, -1);
    std::vector<Component> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        Component c;
        std::vector<int> stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            c.vertices.push_back(v);
            for (int u = 0; u < n; ++u) {
                int w = std::abs(q.matrix()[v][u]);
                if (w == 0) continue;
                if (u > v) {
                    ++c.edges;
                    c.max_multiplicity = std::max(c.max_multiplicity, w);
                }
                if (comp[u] == -1) {
                    comp[u] = static_cast<int>(out.size());
                    stack.push_back(u);
                }
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

// Branch lengths from a vertex of a tree, one entry per neighbor.
std::vector<int> branch_lengths(const Quiver& q, const std::vector<int>& verts, int center) {
    std::vector<int> lengths;
    for (int u : verts) {
        if (u == center || q.matrix()[center][u] == 0) continue;
        int len = 1, prev = center, cur = u;
        for (;;) {
            int next = -1;
            for (int w : verts)
                if (w != prev && q.matrix()[cur][w] != 0) {
                    next = w;
                    break;
                }
            if (next == -1) break;
            prev = cur;
            cur = next;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::pair<QuiverKind, std::string> classify_component(const Quiver& q, const Component& c) {
    const int v = static_cast<int>(c.vertices.size());
    if (c.max_multiplicity >= 2) {
        if (v == 2 && c.edges == 1 && c.max_multiplicity == 2)
            return {QuiverKind::Tame, "Kronecker"};
        return {QuiverKind::Wild, ""};
    }
    if (v == 1) return {QuiverKind::Finite, "A1"};
    if (c.edges == v) {
        // One cycle: a pure cycle is extended A, anything extra is wild.
        for (int x : c.vertices) {
            int deg = 0;
            for (int u : c.vertices)
                if (q.matrix()[x][u] != 0) ++deg;
            if (deg != 2) return {QuiverKind::Wild, ""};
        }
        return {QuiverKind::Tame, "A~" + std::to_string(v - 1)};
    }
    if (c.edges > v) return {QuiverKind::Wild, ""};

    // Tree: inspect the degree profile.
    std::vector<int> deg3, deg4plus;
    for (int x : c.vertices) {
        int deg = 0;
        for (int u : c.vertices)
            if (q.matrix()[x][u] != 0) ++deg;
        if (deg == 3) deg3.push_back(x);
        if (deg >= 4) deg4plus.push_back(x);
    }
    if (deg4plus.size() == 1 && deg3.empty()) {
        int deg = 0;
        for (int u : c.vertices)
            if (q.matrix()[deg4plus[0]][u] != 0) ++deg;
        if (deg == 4 && v == 5) return {QuiverKind::Tame, "D~4"};
        return {QuiverKind::Wild, ""};
    }
    if (!deg4plus.empty()) return {QuiverKind::Wild, ""};
    if (deg3.empty()) return {QuiverKind::Finite, "A" + std::to_string(v)};
    if (deg3.size() == 1) {
        std::vector<int> br = branch_lengths(q, c.vertices, deg3[0]);
        if (br == std::vector<int>{1, 1, v - 3}) return {QuiverKind::Finite, "D" + std::to_string(v)};
        if (br == std::vector<int>{1, 2, 2}) return {QuiverKind::Finite, "E6"};
        if (br == std::vector<int>{1, 2, 3}) return {QuiverKind::Finite, "E7"};
        if (br == std::vector<int>{1, 2, 4}) return {QuiverKind::Finite, "E8"};
        if (br == std::vector<int>{2, 2, 2}) return {QuiverKind::Tame, "E~6"};
        if (br == std::vector<int>{1, 3, 3}) return {QuiverKind::Tame, "E~7"};
        if (br == std::vector<int>{1, 2, 5}) return {QuiverKind::Tame, "E~8"};
        return {QuiverKind::Wild, ""};
    }
    if (deg3.size() == 2) {
        // Extended D: a path with a fork of two leaves at each end.
        for (int center : deg3) {
            int leaves = 0;
            for (int u : c.vertices) {
                if (q.matrix()[center][u] == 0) continue;
                int deg = 0;
                for (int w : c.vertices)
                    if (q.matrix()[u][w] != 0) ++deg;
                if (deg == 1) ++leaves;
            }
            if (leaves < 2) return {QuiverKind::Wild, ""};
        }
        return {QuiverKind::Tame, "D~" + std::to_string(v - 1)};
    }
    return {QuiverKind::Wild, ""};
}

}  // namespace

QuiverClass classify(const Quiver& q) {
    auto comps = undirected_components(q);
    QuiverKind kind = QuiverKind::Finite;
    std::string diagram;
    for (const auto& c : comps) {
        auto [k, d] = classify_component(q, c);
        if (static_cast<int>(k) > static_cast<int>(kind)) kind = k;
        diagram = d;
    }
    QuiverClass result{kind, std::nullopt};
    if (comps.size() == 1 && !diagram.empty()) result.diagram = diagram;
    return result;
}

std::optional<SymmetryPair> find_symmetry_pair(const Quiver& q) {
    const int n = q.n();
    for (int i = 1; i <= n; ++i) {
        if (!q.is_sink(i)) continue;
        for (int j = 1; j <= n; ++j) {
            if (j == i || !q.is_source(j)) continue;
            std::map<int, int> mult;
            bool ok = true;
            for (int k = 1; k <= n && ok; ++k) {
                if (k == i || k == j) continue;
                int into_sink = std::max(q.b(k, i), 0);
                int from_source = std::max(q.b(j, k), 0);
                if (into_sink != from_source) ok = false;
                else if (into_sink > 0) mult[k] = into_sink;
            }
            if (ok) return SymmetryPair{i, j, std::move(mult)};
        }
    }
    return std::nullopt;
}

namespace {

void search_automorphisms(const Quiver& q, std::vector<int>& sigma, std::vector<bool>& used,
                          int depth, std::vector<std::vector<int>>& out) {
    const int n = q.n();
    if (depth == n) {
        out.push_back(sigma);
        return;
    }
    for (int image = 1; image <= n; ++image) {
        if (used[image - 1]) continue;
        bool ok = true;
        for (int prev = 1; prev <= depth && ok; ++prev) {
            if (q.b(sigma[prev - 1], image) != q.b(prev, depth + 1)) ok = false;
            if (q.b(image, sigma[prev - 1]) != q.b(depth + 1, prev)) ok = false;
        }
        if (!ok) continue;
        sigma[depth] = image;
        used[image - 1] = true;
        search_automorphisms(q, sigma, used, depth + 1, out);
        used[image - 1] = false;
    }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Quiver& q) {
    if (q.n() > 10)
        throw VertexCountTooLarge("automorphism search is limited to 10 vertices");
    std::vector<std::vector<int>> out;
    std::vector<int> sigma(q.n(), 0);
    std::vector<bool> used(q.n(), false);
    search_automorphisms(q, sigma, used, 0, out);
    return out;
}

}  // namespace frieze
