#ifndef tpa_quiver_hpp
#define tpa_quiver_hpp

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "tpa/dim_vector.hpp"
#include "tpa/errors.hpp"

namespace tpa {

struct Arrow {
    std::string name;
    size_t source = 0; // 0-based
    size_t target = 0; // 0-based

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/*
 * A finite quiver. Vertices are 0-based internally and 1-based in all text I/O.
 * Arrows are kept sorted by name, so arrow indices follow the lexicographic
 * order used for every deterministic enumeration in the library.
 */
class Quiver {
public:
    Quiver() = default;

    Quiver(size_t vertex_count, std::vector<Arrow> arrows)
        : n_(vertex_count), arrows_(std::move(arrows)) {
        std::sort(arrows_.begin(), arrows_.end(),
                  [](const Arrow& a, const Arrow& b) { return a.name < b.name; });
        for (size_t i = 0; i < arrows_.size(); ++i) {
            const Arrow& a = arrows_[i];
            if (a.name.empty()) {
                throw input_error("arrow with empty name");
            }
            if (i > 0 && arrows_[i - 1].name == a.name) {
                throw input_error("duplicate arrow name '" + a.name + "'");
            }
            if (a.source >= n_ || a.target >= n_) {
                throw input_error("arrow '" + a.name + "' has an out-of-range endpoint");
            }
        }
        out_.assign(n_, {});
        in_.assign(n_, {});
        for (size_t i = 0; i < arrows_.size(); ++i) {
            out_[arrows_[i].source].push_back(i);
            in_[arrows_[i].target].push_back(i);
        }
        compute_topological_order();
    }

    size_t vertex_count() const { return n_; }
    size_t arrow_count() const { return arrows_.size(); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(size_t i) const { return arrows_[i]; }

    // arrow indices leaving / entering a vertex, in name order
    const std::vector<size_t>& out_arrows(size_t v) const { return out_[v]; }
    const std::vector<size_t>& in_arrows(size_t v) const { return in_[v]; }

    std::optional<size_t> arrow_index(const std::string& name) const {
        auto it = std::lower_bound(arrows_.begin(), arrows_.end(), name,
                                   [](const Arrow& a, const std::string& s) { return a.name < s; });
        if (it == arrows_.end() || it->name != name) {
            return std::nullopt;
        }
        return size_t(it - arrows_.begin());
    }

    bool is_acyclic() const { return acyclic_; }

    // empty when the quiver has an oriented cycle
    const std::vector<size_t>& topological_order() const { return topo_; }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.n_ == b.n_ && a.arrows_ == b.arrows_;
    }

private:
    // Kahn's algorithm
    void compute_topological_order() {
        std::vector<size_t> in_degree(n_);
        std::vector<size_t> stack;
        for (size_t v = 0; v < n_; ++v) {
            in_degree[v] = in_[v].size();
            if (in_degree[v] == 0) {
                stack.push_back(v);
            }
        }
        std::vector<size_t> order;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (size_t a : out_[v]) {
                if (--in_degree[arrows_[a].target] == 0) {
                    stack.push_back(arrows_[a].target);
                }
            }
        }
        acyclic_ = order.size() == n_;
        if (acyclic_) {
            topo_ = std::move(order);
        }
    }

    size_t n_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<size_t>> out_;
    std::vector<std::vector<size_t>> in_;
    std::vector<size_t> topo_;
    bool acyclic_ = true;
};

enum class Orientation { B, A };

/*
 * B_ij = number of arrows i -> j; A is its transpose. Semisimples act as row
 * vectors, so `apply(v)` returns v * M.
 */
struct AdjMatrix {
    Orientation orientation = Orientation::B;
    std::vector<std::vector<Entry>> entries;

    size_t size() const { return entries.size(); }
    Entry operator()(size_t i, size_t j) const { return entries[i][j]; }

    AdjMatrix transposed() const {
        AdjMatrix t;
        t.orientation = orientation == Orientation::B ? Orientation::A : Orientation::B;
        t.entries.assign(size(), std::vector<Entry>(size(), 0));
        for (size_t i = 0; i < size(); ++i) {
            for (size_t j = 0; j < size(); ++j) {
                t.entries[j][i] = entries[i][j];
            }
        }
        return t;
    }

    DimVector apply(const DimVector& v) const {
        if (v.size() != size()) {
            throw input_error("vector of length " + std::to_string(v.size())
                              + " applied to " + std::to_string(size()) + "x" + std::to_string(size())
                              + " matrix");
        }
        DimVector r(size());
        for (size_t i = 0; i < size(); ++i) {
            if (v[i] == 0) {
                continue;
            }
            for (size_t j = 0; j < size(); ++j) {
                r[j] += v[i] * entries[i][j];
            }
        }
        return r;
    }

    friend bool operator==(const AdjMatrix&, const AdjMatrix&) = default;
};

inline AdjMatrix adjacency(const Quiver& q) {
    AdjMatrix b;
    b.entries.assign(q.vertex_count(), std::vector<Entry>(q.vertex_count(), 0));
    for (const Arrow& a : q.arrows()) {
        ++b.entries[a.source][a.target];
    }
    return b;
}

inline AdjMatrix transpose_adjacency(const Quiver& q) {
    return adjacency(q).transposed();
}

// A path in Q; arrows are listed in traversal order (first arrow first).
struct QPath {
    size_t start = 0;
    size_t end = 0;
    std::vector<size_t> arrows;

    size_t length() const { return arrows.size(); }

    friend bool operator==(const QPath&, const QPath&) = default;
};

// Paths compose right to left, so the last arrow is written first:
// "a5 b" is b followed by a5. Trivial paths print as "e<v>".
inline std::string path_string(const Quiver& q, const QPath& p) {
    if (p.arrows.empty()) {
        return "e" + std::to_string(p.start + 1);
    }
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty()) {
            s += ' ';
        }
        s += q.arrow(*it).name;
    }
    return s;
}

inline size_t max_path_length(const Quiver& q) {
    if (!q.is_acyclic()) {
        throw hypothesis_violation("longest path requested on a quiver with oriented cycles");
    }
    std::vector<size_t> longest(q.vertex_count(), 0);
    size_t best = 0;
    for (size_t v : q.topological_order()) {
        for (size_t a : q.out_arrows(v)) {
            size_t t = q.arrow(a).target;
            longest[t] = std::max(longest[t], longest[v] + 1);
            best = std::max(best, longest[t]);
        }
    }
    return best;
}

// All paths of length <= max_len starting at v, in depth-first preorder with
// arrows taken in name order. Terminates on cyclic quivers because of the
// length cap.
inline std::vector<QPath> paths_from(const Quiver& q, size_t v, size_t max_len) {
    std::vector<QPath> result;
    QPath current{v, v, {}};
    auto recurse = [&](auto& self) -> void {
        result.push_back(current);
        if (current.length() == max_len) {
            return;
        }
        for (size_t a : q.out_arrows(current.end)) {
            size_t prev_end = current.end;
            current.arrows.push_back(a);
            current.end = q.arrow(a).target;
            self(self);
            current.arrows.pop_back();
            current.end = prev_end;
        }
    };
    recurse(recurse);
    return result;
}

inline Quiver opposite(const Quiver& q) {
    std::vector<Arrow> reversed;
    reversed.reserve(q.arrow_count());
    for (const Arrow& a : q.arrows()) {
        reversed.push_back({a.name, a.target, a.source});
    }
    return Quiver(q.vertex_count(), std::move(reversed));
}

inline Quiver parse_quiver(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("arrows")) {
        throw input_error("quiver document needs 'vertices' and 'arrows'");
    }
    const auto& vertices = doc.at("vertices");
    if (!vertices.is_number_integer() || vertices.get<long long>() <= 0) {
        throw input_error("'vertices' must be a positive integer");
    }
    size_t n = vertices.get<size_t>();
    if (!doc.at("arrows").is_array()) {
        throw input_error("'arrows' must be a list");
    }
    std::vector<Arrow> arrows;
    for (const auto& entry : doc.at("arrows")) {
        if (!entry.is_object() || !entry.contains("name") || !entry.contains("source")
            || !entry.contains("target") || !entry.at("name").is_string()
            || !entry.at("source").is_number_integer() || !entry.at("target").is_number_integer()) {
            throw input_error("each arrow needs a string 'name' and integer 'source'/'target'");
        }
        long long s = entry.at("source").get<long long>();
        long long t = entry.at("target").get<long long>();
        std::string name = entry.at("name").get<std::string>();
        if (s < 1 || t < 1 || size_t(s) > n || size_t(t) > n) {
            throw input_error("arrow '" + name + "' has an out-of-range endpoint");
        }
        arrows.push_back({std::move(name), size_t(s - 1), size_t(t - 1)});
    }
    return Quiver(n, std::move(arrows));
}

inline Quiver parse_quiver(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("malformed quiver JSON: ") + e.what());
    }
    return parse_quiver(doc);
}

inline Quiver parse_quiver(const char* text) { return parse_quiver(std::string(text)); }

inline nlohmann::json quiver_to_json(const Quiver& q) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const Arrow& a : q.arrows()) {
        arrows.push_back({{"name", a.name}, {"source", a.source + 1}, {"target", a.target + 1}});
    }
    return {{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

inline std::string quiver_to_dot(const Quiver& q) {
    std::ostringstream out;
    out << "digraph quiver {\n";
    for (size_t v = 0; v < q.vertex_count(); ++v) {
        out << "  " << v + 1 << ";\n";
    }
    for (const Arrow& a : q.arrows()) {
        out << "  " << a.source + 1 << " -> " << a.target + 1 << " [label=\"" << a.name << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}

#endif /* tpa_quiver_hpp */
