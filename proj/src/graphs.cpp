#include "latticecf/graphs.hpp"

#include "latticecf/errors.hpp"
#include "latticecf/json_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latticecf {

void WeightedDualGraph::check(std::size_t v) const {
    if (v >= vertices_.size())
        fail(ErrorKind::unknown_vertex, "no vertex with id " + std::to_string(v));
}

std::size_t WeightedDualGraph::add_vertex(Integer weight, Integer genus, std::optional<std::string> label) {
    if (genus < 0)
        fail(ErrorKind::domain, "vertex genus must be >= 0");
    if (label && find_label(*label))
        fail(ErrorKind::domain, "duplicate vertex label '" + *label + "'");
    vertices_.push_back(GraphVertex{std::move(genus), std::move(weight), std::move(label)});
    return vertices_.size() - 1;
}

void WeightedDualGraph::add_edge(std::size_t i, std::size_t j) {
    check(i);
    check(j);
    edges_.emplace_back(std::min(i, j), std::max(i, j));
}

void WeightedDualGraph::add_arrow(std::size_t v) {
    check(v);
    arrows_.push_back(v);
}

const GraphVertex& WeightedDualGraph::vertex(std::size_t v) const {
    check(v);
    return vertices_[v];
}

std::vector<Edge> WeightedDualGraph::edges() const {
    std::vector<Edge> out = edges_;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> WeightedDualGraph::arrows() const {
    std::vector<std::size_t> out = arrows_;
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t WeightedDualGraph::valency(std::size_t v) const {
    check(v);
    std::size_t n = 0;
    for (const auto& [a, b] : edges_)
        n += (a == v ? 1 : 0) + (b == v ? 1 : 0);
    return n;
}

std::optional<std::size_t> WeightedDualGraph::find_label(const std::string& label) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].label == label)
            return i;
    }
    return std::nullopt;
}

bool WeightedDualGraph::connected() const {
    if (vertices_.empty())
        return true;
    std::vector<std::vector<std::size_t>> adj(vertices_.size());
    for (const auto& [a, b] : edges_) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == vertices_.size();
}

WeightedDualGraph WeightedDualGraph::without_arrows() const {
    WeightedDualGraph g = *this;
    g.arrows_.clear();
    return g;
}

bool operator==(const WeightedDualGraph& a, const WeightedDualGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges() == b.edges() && a.arrows() == b.arrows();
}

IntMatrix intersection_matrix(const WeightedDualGraph& g) {
    const std::size_t n = g.size();
    IntMatrix m(n, IntSeq(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = g.vertices()[i].weight;
    for (const auto& [a, b] : g.edges()) {
        if (a == b)
            continue;
        ++m[a][b];
        ++m[b][a];
    }
    return m;
}

IntSeq leading_minors(const IntMatrix& input) {
    // Bareiss elimination without pivoting: after step k the pivot entry is
    // the (k+1)-th leading principal minor d_{k+1}. Rows are sparse. A row
    // with no entry in the pivot column is only rescaled by d_{k+1}/d_k, so
    // that rescaling is deferred: entries of row i are exact after valid[i]
    // steps, and catching up from t to k steps multiplies by d_k/d_t.
    const std::size_t n = input.size();
    std::vector<std::map<std::size_t, Integer>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (input[i][j] != 0)
                rows[i][j] = input[i][j];
    std::vector<std::size_t> valid(n, 0);
    IntSeq d{1};
    auto catch_up = [&](std::size_t i, std::size_t k) {
        if (valid[i] == k)
            return;
        for (auto& [j, v] : rows[i])
            v = v * d[k] / d[valid[i]];
        valid[i] = k;
    };

    IntSeq minors;
    for (std::size_t k = 0; k < n; ++k) {
        catch_up(k, k);
        const auto diag = rows[k].find(k);
        const Integer pivot = diag == rows[k].end() ? Integer(0) : diag->second;
        minors.push_back(pivot);
        if (pivot == 0) {
            minors.resize(n, Integer(0));
            break;
        }
        // The pattern stays symmetric, so the rows to update are the
        // columns of the pivot row beyond k.
        std::vector<std::pair<std::size_t, Integer>> tail;
        for (auto it = rows[k].upper_bound(k); it != rows[k].end(); ++it)
            tail.emplace_back(it->first, it->second);
        for (const auto& [i, unused] : tail) {
            catch_up(i, k);
            const Integer lead = rows[i].count(k) ? rows[i][k] : Integer(0);
            std::map<std::size_t, Integer> next;
            for (auto it = rows[i].upper_bound(k); it != rows[i].end(); ++it)
                next[it->first] = it->second * pivot;
            for (const auto& [j, v] : tail)
                next[j] -= lead * v;
            for (auto it = next.begin(); it != next.end();) {
                if (it->second == 0) {
                    it = next.erase(it);
                } else {
                    it->second /= d[k];
                    ++it;
                }
            }
            rows[i] = std::move(next);
            valid[i] = k + 1;
        }
        d.push_back(pivot);
    }
    return minors;
}

bool is_contractible(const WeightedDualGraph& g) {
    const IntSeq minors = leading_minors(intersection_matrix(g));
    for (std::size_t k = 0; k < minors.size(); ++k) {
        const bool want_negative = k % 2 == 0; // d_1 < 0, d_2 > 0, ...
        if (want_negative ? minors[k] >= 0 : minors[k] <= 0)
            return false;
    }
    return true;
}

IntSeq fundamental_cycle(const WeightedDualGraph& g) {
    if (!g.connected())
        fail(ErrorKind::disconnected, "fundamental_cycle: graph is not connected");
    if (!is_contractible(g))
        fail(ErrorKind::not_contractible, "fundamental_cycle: intersection matrix is not negative definite");
    const IntMatrix m = intersection_matrix(g);
    const std::size_t n = g.size();
    IntSeq z(n, Integer(1));
    auto product = [&](std::size_t i) {
        Integer s = 0;
        for (std::size_t j = 0; j < n; ++j)
            s += z[j] * m[j][i];
        return s;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (product(i) > 0) {
                ++z[i];
                changed = true;
            }
        }
    }
    return z;
}

Integer euler_normalized(const WeightedDualGraph& g, std::size_t v) {
    return g.vertex(v).weight - Integer(g.valency(v));
}

WeightedDualGraph chain(const IntSeq& weights) {
    WeightedDualGraph g;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        g.add_vertex(weights[i]);
        if (i > 0)
            g.add_edge(i - 1, i);
    }
    return g;
}

WeightedDualGraph cycle_graph(const IntSeq& weights) {
    WeightedDualGraph g;
    for (const auto& w : weights)
        g.add_vertex(w);
    const std::size_t n = weights.size();
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string to_dot(const WeightedDualGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const GraphVertex& v = g.vertices()[i];
        std::string text = v.weight.str();
        if (v.genus != 0)
            text += " [" + v.genus.str() + "]";
        if (v.label)
            text = dot_escape(*v.label) + "\\n" + text;
        out << "  v" << i << " [label=\"" << text << "\", weight=\"" << v.weight.str()
            << "\", genus=\"" << v.genus.str() << "\"];\n";
    }
    for (const auto& [a, b] : g.edges())
        out << "  v" << a << " -- v" << b << ";\n";
    const auto arrows = g.arrows();
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        out << "  a" << k << " [shape=point, label=\"\"];\n";
        out << "  v" << arrows[k] << " -- a" << k << " [dir=forward, arrowhead=normal];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_json(const WeightedDualGraph& g) {
    nlohmann::json j;
    j["schema"] = json_schema;
    nlohmann::json verts = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const GraphVertex& v = g.vertices()[i];
        nlohmann::json jv;
        jv["id"] = i;
        jv["genus"] = integer_json(v.genus);
        jv["weight"] = integer_json(v.weight);
        jv["label"] = v.label ? nlohmann::json(*v.label) : nlohmann::json(nullptr);
        verts.push_back(std::move(jv));
    }
    j["vertices"] = std::move(verts);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges())
        edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["arrows"] = g.arrows();
    return j.dump(2) + "\n";
}

WeightedDualGraph graph_from_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        WeightedDualGraph g;
        const auto& verts = j.at("vertices");
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const auto& jv = verts[i];
            if (jv.at("id").get<std::size_t>() != i)
                fail(ErrorKind::parse, "vertex ids must be 0..n-1 in order");
            std::optional<std::string> label;
            if (jv.contains("label") && !jv.at("label").is_null())
                label = jv.at("label").get<std::string>();
            const Integer genus = jv.contains("genus") ? integer_from_json(jv.at("genus")) : Integer(0);
            g.add_vertex(integer_from_json(jv.at("weight")), genus, std::move(label));
        }
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                fail(ErrorKind::parse, "edges must be pairs of vertex ids");
            g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        if (j.contains("arrows")) {
            for (const auto& a : j.at("arrows"))
                g.add_arrow(a.get<std::size_t>());
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::parse, std::string("invalid graph JSON: ") + e.what());
    }
}

} // namespace latticecf
