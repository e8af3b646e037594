#ifndef tpa_components_hpp
#define tpa_components_hpp

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "tpa/dim_vector.hpp"
#include "tpa/errors.hpp"
#include "tpa/layers.hpp"
#include "tpa/prime_field.hpp"
#include "tpa/quiver.hpp"
#include "tpa/representation.hpp"
#include "tpa/skeleton.hpp"
#include "tpa/socle.hpp"

namespace tpa {

/*
 * One irreducible component of Rep_d(Lambda), described by the generic data of
 * its dense stratum Rep S.
 */
struct Component {
    SemisimpleSequence rad;
    SemisimpleSequence soc;
    Skeleton skeleton;
    GenericPresentation presentation;
    DimVector c0;     // largest semisimple summand occurring generically
    size_t endo_dim = 0;
    bool generically_indecomposable = false;

    friend bool operator==(const Component&, const Component&) = default;
};

struct ClassifyOptions {
    size_t trials = 3;
    uint64_t prime = default_prime;
    uint64_t seed = 20130501;
};

// one pair (S, S*) for every realizable S with total d
inline std::vector<LayeredPair> rad_soc_pairs(const Quiver& q, const DimVector& d, size_t L) {
    std::vector<LayeredPair> pairs;
    enumerate_realizable(q, d, L, [&](const SemisimpleSequence& s) {
        pairs.push_back({s, generic_socle_layering(s, q)});
    });
    return pairs;
}

/*
 * Minimal elements under the componentwise dominance order, sorted by
 * (rad, soc) lexicographically, which is a linear extension of the order.
 */
inline std::vector<LayeredPair> minimal_pairs(const std::vector<LayeredPair>& pairs) {
    if (pairs.empty()) {
        return {};
    }
    // Sum of all prefix sums strictly increases along the order, so sorting by
    // it puts every strictly smaller pair first and a candidate only needs to
    // be checked against the minimal pairs already found.
    auto weight = [](const LayeredPair& p) {
        Entry w = 0;
        for (size_t l = 0; l < p.rad.layer_count(); ++l) {
            w += p.rad.prefix(l).total() + p.soc.prefix(l).total();
        }
        return w;
    };
    std::vector<std::pair<Entry, size_t>> order;
    order.reserve(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        order.emplace_back(weight(pairs[i]), i);
    }
    std::sort(order.begin(), order.end());

    std::vector<LayeredPair> minimal;
    for (auto [w, i] : order) {
        const LayeredPair& p = pairs[i];
        bool dominated = false;
        for (const auto& m : minimal) {
            if (m != p && pair_leq(m, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated && std::find(minimal.begin(), minimal.end(), p) == minimal.end()) {
            minimal.push_back(p);
        }
    }
    std::sort(minimal.begin(), minimal.end(), [](const LayeredPair& a, const LayeredPair& b) {
        return std::tie(a.rad, a.soc) < std::tie(b.rad, b.soc);
    });
    return minimal;
}

/*
 * Generic dim End(M) for M in Rep S, estimated as the minimum over `trials`
 * random instantiations of the generic presentation. Generic rank is maximal,
 * so the minimum nullity is the generic value unless every draw was unlucky.
 */
template <class Rng>
size_t generic_endo_dim(const GenericPresentation& pres, const Quiver& q, const PrimeField& field,
                        size_t trials, Rng& rng) {
    size_t best = SIZE_MAX;
    for (size_t t = 0; t < std::max<size_t>(trials, 1); ++t) {
        auto values = random_assignment(pres, field, rng);
        best = std::min(best, endo_dim(instantiate(pres, q, values, field)));
    }
    return best;
}

inline std::mt19937_64 component_rng(uint64_t seed, size_t index) {
    std::seed_seq seq{uint32_t(seed), uint32_t(seed >> 32), uint32_t(index), uint32_t(index >> 32)};
    return std::mt19937_64(seq);
}

inline Component describe_component(const LayeredPair& pair, const Quiver& q, const ClassifyOptions& options,
                                    size_t index) {
    const size_t L = pair.rad.loewy_bound();
    Component c;
    c.rad = pair.rad;
    c.soc = pair.soc;
    c.skeleton = first_skeleton(pair.rad, q);
    c.presentation = build_presentation(c.skeleton, q, L);
    c.c0 = c_layers(pair.rad, q).c[0];
    PrimeField field(options.prime);
    auto rng = component_rng(options.seed, index);
    c.endo_dim = generic_endo_dim(c.presentation, q, field, options.trials, rng);
    c.generically_indecomposable = c.endo_dim == 1;
    return c;
}

inline void require_classifiable(const Quiver& q, const DimVector& d) {
    if (!q.is_acyclic()) {
        throw hypothesis_violation("Main Theorem hypothesis violated: the quiver has oriented cycles");
    }
    if (d.size() != q.vertex_count()) {
        throw input_error("dimension vector has length " + std::to_string(d.size()) + " but the quiver has "
                          + std::to_string(q.vertex_count()) + " vertices");
    }
    if (!d.is_nonnegative()) {
        throw input_error("dimension vector has negative entries");
    }
}

/*
 * The irreducible components of Rep_d(KQ / <paths of length L+1>) for acyclic
 * Q: closures of Rep S for the first entries S of the minimal pairs (S, S*).
 */
inline std::vector<Component> classify(const Quiver& q, const DimVector& d, size_t L,
                                       const ClassifyOptions& options = {}) {
    require_classifiable(q, d);
    auto minimal = minimal_pairs(rad_soc_pairs(q, d, L));
    std::vector<Component> components;
    components.reserve(minimal.size());
    for (size_t i = 0; i < minimal.size(); ++i) {
        components.push_back(describe_component(minimal[i], q, options, i));
    }
    return components;
}

// sup{0, d - d*B}
inline DimVector generic_top(const DimVector& d, const Quiver& q) {
    if (d.size() != q.vertex_count()) {
        throw input_error("dimension vector does not match the quiver");
    }
    return sup(DimVector(d.size()), d - adjacency(q).apply(d));
}

/*
 * Generic radical layering of Rep_d(KQ) (L = longest path length): peel off
 * the generic top of whatever is left, layer by layer.
 */
inline SemisimpleSequence hereditary_generic_layering(const Quiver& q, const DimVector& d) {
    require_classifiable(q, d);
    const size_t L = max_path_length(q);
    SemisimpleSequence s(L + 1, q.vertex_count());
    DimVector remaining = d;
    for (size_t l = 0; l <= L; ++l) {
        s[l] = generic_top(remaining, q);
        remaining -= s[l];
    }
    if (!remaining.is_zero()) {
        throw std::logic_error("generic top recursion left " + remaining.str() + " unassigned");
    }
    return s;
}

inline nlohmann::ordered_json sequence_to_json(const SemisimpleSequence& s) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& layer : s.layers()) {
        out.push_back(layer.entries());
    }
    return out;
}

inline SemisimpleSequence sequence_from_json(const nlohmann::json& doc) {
    if (!doc.is_array() || doc.empty()) {
        throw input_error("a layering must be a nonempty array of arrays");
    }
    std::vector<DimVector> layers;
    for (const auto& layer : doc) {
        if (!layer.is_array()) {
            throw input_error("a layering must be a nonempty array of arrays");
        }
        std::vector<Entry> entries;
        for (const auto& e : layer) {
            if (!e.is_number_integer() || e.get<long long>() < 0) {
                throw input_error("layer entries must be nonnegative integers");
            }
            entries.push_back(e.get<Entry>());
        }
        layers.emplace_back(std::move(entries));
    }
    return SemisimpleSequence(std::move(layers));
}

inline nlohmann::ordered_json component_to_json(const Component& c, const Quiver& q) {
    nlohmann::ordered_json skeleton = nlohmann::ordered_json::array();
    for (const auto& p : c.skeleton.paths) {
        skeleton.push_back(path_string(q, p));
    }
    nlohmann::ordered_json out;
    out["rad"] = sequence_to_json(c.rad);
    out["soc"] = sequence_to_json(c.soc);
    out["c0"] = c.c0.entries();
    out["endo_dim"] = c.endo_dim;
    out["generically_indecomposable"] = c.generically_indecomposable;
    out["skeleton"] = skeleton;
    out["presentation"] = nlohmann::ordered_json(presentation_to_json(c.presentation, q));
    return out;
}

inline Component component_from_json(const nlohmann::json& doc, const Quiver& q) {
    for (const char* field : {"rad", "soc", "c0", "endo_dim", "generically_indecomposable", "skeleton",
                              "presentation"}) {
        if (!doc.contains(field)) {
            throw input_error(std::string("component is missing field '") + field + "'");
        }
    }
    Component c;
    c.rad = sequence_from_json(doc.at("rad"));
    c.soc = sequence_from_json(doc.at("soc"));
    c.c0 = DimVector(doc.at("c0").get<std::vector<Entry>>());
    c.endo_dim = doc.at("endo_dim").get<size_t>();
    c.generically_indecomposable = doc.at("generically_indecomposable").get<bool>();

    const auto& pres = doc.at("presentation");
    std::vector<size_t> tops;
    for (const auto& v : pres.at("tops")) {
        long long vertex = v.get<long long>();
        if (vertex < 1 || size_t(vertex) > q.vertex_count()) {
            throw input_error("top element at an out-of-range vertex");
        }
        tops.push_back(size_t(vertex - 1));
    }
    std::vector<SkeletonPath> paths;
    for (const auto& p : doc.at("skeleton")) {
        paths.push_back(parse_skeleton_path(q, p.get<std::string>()));
    }
    c.skeleton = make_skeleton(q, tops, std::move(paths), c.rad.loewy_bound());
    c.presentation.skeleton = c.skeleton;
    for (const auto& r : pres.at("relations")) {
        Relation rel{parse_skeleton_path(q, r.at("critical").get<std::string>()), {}};
        for (const auto& t : r.at("terms")) {
            std::string name = t.at("scalar").get<std::string>();
            if (name.size() < 2 || name[0] != 'x') {
                throw input_error("bad scalar symbol '" + name + "'");
            }
            size_t id = std::stoul(name.substr(1)) - 1;
            rel.terms.push_back({parse_skeleton_path(q, t.at("path").get<std::string>()), id});
            c.presentation.scalar_count = std::max(c.presentation.scalar_count, id + 1);
        }
        c.presentation.relations.push_back(std::move(rel));
    }
    return c;
}

}

#endif /* tpa_components_hpp */
