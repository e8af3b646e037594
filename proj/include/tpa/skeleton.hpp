#ifndef tpa_skeleton_hpp
#define tpa_skeleton_hpp

#include <algorithm>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "tpa/dim_vector.hpp"
#include "tpa/errors.hpp"
#include "tpa/layers.hpp"
#include "tpa/quiver.hpp"
#include "tpa/representation.hpp"

namespace tpa {

/*
 * A path p z_r in the distinguished projective cover P = (+)_r Lambda z_r:
 * top element r followed by the arrows of p in traversal order. Ordering is
 * lexicographic on (top, arrow indices), i.e. on (top, arrow names).
 */
struct SkeletonPath {
    size_t top = 0;
    std::vector<size_t> arrows;

    size_t length() const { return arrows.size(); }

    SkeletonPath extended(size_t arrow) const {
        SkeletonPath p = *this;
        p.arrows.push_back(arrow);
        return p;
    }

    friend bool operator==(const SkeletonPath&, const SkeletonPath&) = default;
    friend auto operator<=>(const SkeletonPath&, const SkeletonPath&) = default;
};

struct Skeleton {
    std::vector<size_t> tops;         // vertex e(r) of each top element z_r
    std::vector<SkeletonPath> paths;  // sorted, closed under initial subpaths
    SemisimpleSequence layering;

    bool contains(const SkeletonPath& p) const {
        return std::binary_search(paths.begin(), paths.end(), p);
    }

    std::optional<size_t> index_of(const SkeletonPath& p) const {
        auto it = std::lower_bound(paths.begin(), paths.end(), p);
        if (it == paths.end() || *it != p) {
            return std::nullopt;
        }
        return size_t(it - paths.begin());
    }

    friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

inline size_t end_vertex(const Quiver& q, const std::vector<size_t>& tops, const SkeletonPath& p) {
    size_t v = tops.at(p.top);
    for (size_t a : p.arrows) {
        if (q.arrow(a).source != v) {
            throw input_error("arrows of a path do not compose");
        }
        v = q.arrow(a).target;
    }
    return v;
}

inline size_t end_vertex(const Quiver& q, const Skeleton& sk, const SkeletonPath& p) {
    return end_vertex(q, sk.tops, p);
}

// "a5 a3 z2": arrows written right to left, then the top element (1-based)
inline std::string path_string(const Quiver& q, const SkeletonPath& p) {
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        s += q.arrow(*it).name + ' ';
    }
    return s + "z" + std::to_string(p.top + 1);
}

inline SkeletonPath parse_skeleton_path(const Quiver& q, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) {
        tokens.push_back(token);
    }
    if (tokens.empty() || tokens.back().size() < 2 || tokens.back()[0] != 'z') {
        throw input_error("path '" + text + "' must end in a top element z<r>");
    }
    SkeletonPath p;
    try {
        size_t used = 0;
        long long r = std::stoll(tokens.back().substr(1), &used);
        if (r < 1 || used + 1 != tokens.back().size()) {
            throw input_error("");
        }
        p.top = size_t(r - 1);
    } catch (const std::exception&) {
        throw input_error("bad top element in path '" + text + "'");
    }
    for (size_t i = tokens.size() - 1; i-- > 0;) {
        auto a = q.arrow_index(tokens[i]);
        if (!a) {
            throw input_error("unknown arrow '" + tokens[i] + "' in path '" + text + "'");
        }
        p.arrows.push_back(*a);
    }
    return p;
}

/*
 * Builds a skeleton from explicit paths, checking closure under initial
 * subpaths and the length bound; the layering is read off the paths.
 */
inline Skeleton make_skeleton(const Quiver& q, std::vector<size_t> tops, std::vector<SkeletonPath> paths,
                              size_t L) {
    for (size_t v : tops) {
        if (v >= q.vertex_count()) {
            throw input_error("top element at an out-of-range vertex");
        }
    }
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
    Skeleton sk{std::move(tops), std::move(paths), SemisimpleSequence(L + 1, q.vertex_count())};
    for (size_t r = 0; r < sk.tops.size(); ++r) {
        if (!sk.contains(SkeletonPath{r, {}})) {
            throw input_error("skeleton is missing top element z" + std::to_string(r + 1));
        }
    }
    for (const auto& p : sk.paths) {
        if (p.top >= sk.tops.size()) {
            throw input_error("path refers to a nonexistent top element");
        }
        if (p.length() > L) {
            throw input_error("skeleton path " + path_string(q, p) + " is longer than L");
        }
        size_t v = end_vertex(q, sk, p);
        if (p.length() > 0) {
            SkeletonPath parent{p.top, {p.arrows.begin(), p.arrows.end() - 1}};
            if (!sk.contains(parent)) {
                throw input_error("skeleton is not closed under initial subpaths at " + path_string(q, p));
            }
        }
        ++sk.layering[p.length()][v];
    }
    return sk;
}

namespace detail {

class SkeletonEnumerator {
public:
    SkeletonEnumerator(const SemisimpleSequence& s, const Quiver& q) : s_(s), q_(q) {}

    template <class Visit>
    void run(std::optional<size_t> limit, Visit& visit) {
        limit_ = limit;
        emitted_ = 0;
        std::vector<SkeletonPath> layer0;
        for (size_t v = 0; v < q_.vertex_count(); ++v) {
            for (Entry k = 0; k < s_[0][v]; ++k) {
                tops_.push_back(v);
                layer0.push_back(SkeletonPath{tops_.size() - 1, {}});
            }
        }
        chosen_ = layer0;
        extend(0, layer0, visit);
    }

private:
    bool done() const { return stop_ || (limit_ && emitted_ >= *limit_); }

    template <class Visit>
    void emit(Visit& visit) {
        Skeleton sk{tops_, chosen_, s_};
        std::sort(sk.paths.begin(), sk.paths.end());
        ++emitted_;
        if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const Skeleton&>, bool>) {
            if (!visit(static_cast<const Skeleton&>(sk))) {
                stop_ = true;
            }
        } else {
            visit(static_cast<const Skeleton&>(sk));
        }
    }

    // layer l is fixed; pick the paths of length l+1
    template <class Visit>
    void extend(size_t l, const std::vector<SkeletonPath>& layer, Visit& visit) {
        if (done()) {
            return;
        }
        if (l == s_.loewy_bound()) {
            emit(visit);
            return;
        }
        std::vector<std::vector<SkeletonPath>> candidates(q_.vertex_count());
        for (const auto& u : layer) {
            for (size_t a : q_.out_arrows(end_vertex(q_, tops_, u))) {
                candidates[q_.arrow(a).target].push_back(u.extended(a));
            }
        }
        for (size_t v = 0; v < q_.vertex_count(); ++v) {
            if (Entry(candidates[v].size()) < s_[l + 1][v]) {
                throw input_error("no skeleton exists for " + s_.str() + " (realizability contradiction)");
            }
        }
        std::vector<SkeletonPath> next;
        choose_vertex(l, 0, candidates, next, visit);
    }

    template <class Visit>
    void choose_vertex(size_t l, size_t v, const std::vector<std::vector<SkeletonPath>>& candidates,
                       std::vector<SkeletonPath>& next, Visit& visit) {
        if (v == q_.vertex_count()) {
            size_t mark = chosen_.size();
            chosen_.insert(chosen_.end(), next.begin(), next.end());
            std::vector<SkeletonPath> layer = next;
            std::sort(layer.begin(), layer.end());
            extend(l + 1, layer, visit);
            chosen_.resize(mark);
            return;
        }
        choose_subset(l, v, 0, size_t(s_[l + 1][v]), candidates, next, visit);
    }

    // k-subsets of candidates[v] in lexicographic order
    template <class Visit>
    void choose_subset(size_t l, size_t v, size_t from, size_t k,
                       const std::vector<std::vector<SkeletonPath>>& candidates,
                       std::vector<SkeletonPath>& next, Visit& visit) {
        if (k == 0) {
            choose_vertex(l, v + 1, candidates, next, visit);
            return;
        }
        const auto& pool = candidates[v];
        for (size_t i = from; i + k <= pool.size() && !done(); ++i) {
            next.push_back(pool[i]);
            choose_subset(l, v, i + 1, k - 1, candidates, next, visit);
            next.pop_back();
        }
    }

    const SemisimpleSequence& s_;
    const Quiver& q_;
    std::vector<size_t> tops_;
    std::vector<SkeletonPath> chosen_;
    std::optional<size_t> limit_;
    size_t emitted_ = 0;
    bool stop_ = false;
};

}

/*
 * Visits the skeleta with layering S, each once. Tops are numbered by vertex;
 * layer l+1 is chosen among the one-arrow extensions of layer l, per end
 * vertex, as lexicographically ordered subsets.
 */
template <class Visit>
void enumerate_skeleta(const SemisimpleSequence& s, const Quiver& q, std::optional<size_t> limit, Visit&& visit) {
    if (s.width() != q.vertex_count()) {
        throw input_error("sequence width does not match the quiver");
    }
    if (!is_realizable(s, q)) {
        throw input_error("semisimple sequence " + s.str() + " is not realizable");
    }
    detail::SkeletonEnumerator(s, q).run(limit, visit);
}

inline std::vector<Skeleton> skeleta(const SemisimpleSequence& s, const Quiver& q,
                                     std::optional<size_t> limit = std::nullopt) {
    std::vector<Skeleton> out;
    enumerate_skeleta(s, q, limit, [&](const Skeleton& sk) { out.push_back(sk); });
    return out;
}

inline Skeleton first_skeleton(const SemisimpleSequence& s, const Quiver& q) {
    auto found = skeleta(s, q, 1);
    if (found.empty()) {
        throw input_error("no skeleton exists for " + s.str());
    }
    return found.front();
}

// paths of length <= L outside the skeleton whose proper initial subpaths all lie in it
inline std::vector<SkeletonPath> critical_paths(const Skeleton& sk, const Quiver& q, size_t L) {
    std::vector<SkeletonPath> critical;
    for (const auto& u : sk.paths) {
        if (u.length() >= L) {
            continue;
        }
        for (size_t a : q.out_arrows(end_vertex(q, sk, u))) {
            SkeletonPath ext = u.extended(a);
            if (!sk.contains(ext)) {
                critical.push_back(std::move(ext));
            }
        }
    }
    std::sort(critical.begin(), critical.end());
    return critical;
}

inline bool is_critical(const Skeleton& sk, const Quiver& q, const SkeletonPath& p) {
    if (p.top >= sk.tops.size() || p.length() == 0 || p.length() > sk.layering.loewy_bound()
        || sk.contains(p)) {
        return false;
    }
    SkeletonPath parent{p.top, {p.arrows.begin(), p.arrows.end() - 1}};
    if (!sk.contains(parent)) {
        return false;
    }
    return q.arrow(p.arrows.back()).source == end_vertex(q, sk, parent);
}

// skeleton paths at least as long as the critical path q, ending where q ends
inline std::vector<SkeletonPath> sigma_of(const Skeleton& sk, const Quiver& q, const SkeletonPath& critical) {
    if (!is_critical(sk, q, critical)) {
        throw input_error("path " + path_string(q, critical) + " is not critical for the skeleton");
    }
    size_t target = end_vertex(q, sk, critical);
    std::vector<SkeletonPath> out;
    for (const auto& p : sk.paths) {
        if (p.length() >= critical.length() && end_vertex(q, sk, p) == target) {
            out.push_back(p);
        }
    }
    return out;
}

struct PresentationTerm {
    SkeletonPath path;
    size_t scalar = 0; // symbol x_{scalar+1}

    friend bool operator==(const PresentationTerm&, const PresentationTerm&) = default;
};

// critical - sum_i x_i * terms[i].path
struct Relation {
    SkeletonPath critical;
    std::vector<PresentationTerm> terms;

    friend bool operator==(const Relation&, const Relation&) = default;
};

/*
 * P / R(sigma) with one relation per critical path and a fresh scalar symbol
 * for every (critical, sigma-path) pair, in the raw form without any
 * change of top elements.
 */
struct GenericPresentation {
    Skeleton skeleton;
    std::vector<Relation> relations;
    size_t scalar_count = 0;

    friend bool operator==(const GenericPresentation&, const GenericPresentation&) = default;
};

inline std::string scalar_name(size_t id) {
    return "x" + std::to_string(id + 1);
}

inline GenericPresentation build_presentation(const Skeleton& sk, const Quiver& q, size_t L) {
    GenericPresentation pres{sk, {}, 0};
    for (auto& crit : critical_paths(sk, q, L)) {
        Relation rel{crit, {}};
        for (auto& p : sigma_of(sk, q, crit)) {
            rel.terms.push_back({std::move(p), pres.scalar_count++});
        }
        pres.relations.push_back(std::move(rel));
    }
    return pres;
}

/*
 * The module P/R(sigma) for concrete scalars, on the basis sigma. An arrow
 * sends u to a*u when that path is in sigma, to the right-hand side of its
 * relation when a*u is critical, and to zero past length L.
 */
inline Representation instantiate(const GenericPresentation& pres, const Quiver& q,
                                  std::span<const uint64_t> assignment, const PrimeField& field) {
    if (assignment.size() < pres.scalar_count) {
        throw input_error("missing scalar " + scalar_name(assignment.size()) + " in assignment");
    }
    const Skeleton& sk = pres.skeleton;
    const size_t n = q.vertex_count();
    const size_t L = sk.layering.loewy_bound();

    // position of each sigma path inside its vertex block
    std::vector<size_t> local(sk.paths.size());
    std::vector<size_t> vertex_of(sk.paths.size());
    DimVector dims(n);
    for (size_t i = 0; i < sk.paths.size(); ++i) {
        vertex_of[i] = end_vertex(q, sk, sk.paths[i]);
        local[i] = size_t(dims[vertex_of[i]]++);
    }
    Representation m(field, q, dims);
    std::vector<Matrix> maps = m.maps;
    for (size_t i = 0; i < sk.paths.size(); ++i) {
        const SkeletonPath& u = sk.paths[i];
        if (u.length() >= L) {
            continue;
        }
        for (size_t a : q.out_arrows(vertex_of[i])) {
            SkeletonPath image = u.extended(a);
            if (auto j = sk.index_of(image)) {
                maps[a](local[*j], local[i]) = 1;
                continue;
            }
            auto rel = std::lower_bound(pres.relations.begin(), pres.relations.end(), image,
                                        [](const Relation& r, const SkeletonPath& p) { return r.critical < p; });
            if (rel == pres.relations.end() || rel->critical != image) {
                throw std::logic_error("extension " + path_string(q, image)
                                       + " is neither in the skeleton nor critical");
            }
            for (const auto& term : rel->terms) {
                size_t j = *sk.index_of(term.path);
                maps[a](local[j], local[i]) = field.add(maps[a](local[j], local[i]),
                                                       field.reduce(int64_t(assignment[term.scalar] % field.prime())));
            }
        }
    }
    for (size_t a = 0; a < q.arrow_count(); ++a) {
        m.set_map(a, std::move(maps[a]));
    }
    return m;
}

template <class Rng>
std::vector<uint64_t> random_assignment(const GenericPresentation& pres, const PrimeField& field, Rng& rng) {
    std::vector<uint64_t> values(pres.scalar_count);
    for (auto& v : values) {
        v = field.random_nonzero(rng);
    }
    return values;
}

inline nlohmann::json presentation_to_json(const GenericPresentation& pres, const Quiver& q) {
    nlohmann::json tops = nlohmann::json::array();
    for (size_t v : pres.skeleton.tops) {
        tops.push_back(v + 1);
    }
    nlohmann::json relations = nlohmann::json::array();
    for (const auto& rel : pres.relations) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : rel.terms) {
            terms.push_back({{"path", path_string(q, t.path)}, {"scalar", scalar_name(t.scalar)}});
        }
        relations.push_back({{"critical", path_string(q, rel.critical)}, {"terms", terms}});
    }
    return {{"tops", tops}, {"relations", relations}};
}

inline std::string relation_string(const Quiver& q, const Relation& rel) {
    std::string s = path_string(q, rel.critical);
    if (rel.terms.empty()) {
        return s;
    }
    s += " - (";
    for (size_t i = 0; i < rel.terms.size(); ++i) {
        s += (i ? " + " : "") + scalar_name(rel.terms[i].scalar) + " " + path_string(q, rel.terms[i].path);
    }
    return s + ")";
}

/*
 * Layered tree drawing of a skeleton: one node per skeleton path labeled by
 * its end vertex, solid edges inside the skeleton, dashed edges for the
 * critical paths. Nodes of equal path length share a rank.
 */
inline std::string skeleton_to_dot(const Skeleton& sk, const Quiver& q, size_t L) {
    std::ostringstream out;
    out << "digraph skeleton {\n  node [shape=plaintext];\n  edge [arrowhead=none];\n";
    std::vector<std::vector<std::string>> ranks(L + 2);
    auto id = [&](size_t i) { return "p" + std::to_string(i); };
    for (size_t i = 0; i < sk.paths.size(); ++i) {
        const auto& p = sk.paths[i];
        std::string label = std::to_string(end_vertex(q, sk, p) + 1);
        if (p.length() == 0) {
            label = "z" + std::to_string(p.top + 1) + ": " + label;
        }
        out << "  " << id(i) << " [label=\"" << label << "\", tooltip=\"" << path_string(q, p) << "\"];\n";
        ranks[p.length()].push_back(id(i));
        if (p.length() > 0) {
            SkeletonPath parent{p.top, {p.arrows.begin(), p.arrows.end() - 1}};
            out << "  " << id(*sk.index_of(parent)) << " -> " << id(i) << " [label=\""
                << q.arrow(p.arrows.back()).name << "\"];\n";
        }
    }
    auto critical = critical_paths(sk, q, L);
    for (size_t c = 0; c < critical.size(); ++c) {
        const auto& p = critical[c];
        std::string cid = "c" + std::to_string(c);
        out << "  " << cid << " [label=\"" << end_vertex(q, sk, p) + 1 << "\", fontcolor=gray, tooltip=\""
            << path_string(q, p) << "\"];\n";
        ranks[p.length()].push_back(cid);
        SkeletonPath parent{p.top, {p.arrows.begin(), p.arrows.end() - 1}};
        out << "  " << id(*sk.index_of(parent)) << " -> " << cid << " [style=dashed, label=\""
            << q.arrow(p.arrows.back()).name << "\"];\n";
    }
    for (const auto& rank : ranks) {
        if (rank.empty()) {
            continue;
        }
        out << "  { rank=same;";
        for (const auto& node : rank) {
            out << ' ' << node << ';';
        }
        out << " }\n";
    }
    out << "}\n";
    return out.str();
}

}

#endif /* tpa_skeleton_hpp */
