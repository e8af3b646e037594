#ifndef tpa_tests_fixtures_hpp
#define tpa_tests_fixtures_hpp

#include <random>
#include <string>
#include <vector>

#include "tpa/tpa.hpp"

namespace tpa::testing {

inline Quiver kronecker() {
    return parse_quiver(R"({"vertices":2,"arrows":[{"name":"a1","source":1,"target":2},
                                                  {"name":"a2","source":1,"target":2}]})");
}

// hereditary example: 9 vertices, longest path 6
inline Quiver hereditary9() {
    return parse_quiver(R"({"vertices":9,"arrows":[
        {"name":"beta1","source":1,"target":2}, {"name":"alpha1","source":1,"target":3},
        {"name":"alpha2","source":2,"target":4}, {"name":"alpha3","source":3,"target":5},
        {"name":"beta3","source":3,"target":7},  {"name":"alpha4","source":4,"target":5},
        {"name":"beta5","source":5,"target":6},  {"name":"alpha5","source":5,"target":7},
        {"name":"gamma5","source":5,"target":9}, {"name":"alpha6","source":6,"target":8},
        {"name":"beta6","source":6,"target":8},  {"name":"alpha7","source":7,"target":9},
        {"name":"alpha8","source":8,"target":9}]})");
}

// 1 -> 2 -> ... -> 7 with shortcuts i -> i+2
inline Quiver ladder7() {
    return parse_quiver(R"({"vertices":7,"arrows":[
        {"name":"alpha1","source":1,"target":2}, {"name":"alpha2","source":2,"target":3},
        {"name":"alpha3","source":3,"target":4}, {"name":"alpha4","source":4,"target":5},
        {"name":"alpha5","source":5,"target":6}, {"name":"alpha6","source":6,"target":7},
        {"name":"beta1","source":1,"target":3},  {"name":"beta2","source":2,"target":4},
        {"name":"beta3","source":3,"target":5},  {"name":"beta4","source":4,"target":6},
        {"name":"beta5","source":5,"target":7}]})");
}

// 1 -> 2 -> 3 over 4 -> 5 -> 6, joined by beta: 2 -> 5
inline Quiver two_rows6() {
    return parse_quiver(R"({"vertices":6,"arrows":[
        {"name":"alpha1","source":1,"target":2}, {"name":"alpha2","source":2,"target":3},
        {"name":"beta","source":2,"target":5},   {"name":"alpha4","source":4,"target":5},
        {"name":"alpha5","source":5,"target":6}]})");
}

inline DimVector ones(size_t n) {
    return DimVector(n, 1);
}

// sequence from per-layer lists of 1-based vertices, e.g. {{1,4},{2,5},{3,6}}
inline SemisimpleSequence layering(size_t n, size_t length, const std::vector<std::vector<size_t>>& simples) {
    SemisimpleSequence s(length, n);
    for (size_t l = 0; l < simples.size(); ++l) {
        for (size_t v : simples[l]) {
            ++s[l][v - 1];
        }
    }
    return s;
}

// generic radical layering for d = (0,1,1,0,3,2,3,5,10) on hereditary9
inline SemisimpleSequence hereditary_layering() {
    return SemisimpleSequence{
        DimVector{0, 1, 1, 0, 2, 0, 0, 1, 0}, DimVector{0, 0, 0, 0, 1, 1, 2, 0, 2},
        DimVector{0, 0, 0, 0, 0, 1, 1, 2, 3}, DimVector{0, 0, 0, 0, 0, 0, 0, 2, 3},
        DimVector{0, 0, 0, 0, 0, 0, 0, 0, 2}, DimVector(9), DimVector(9)};
}

inline SemisimpleSequence hereditary_socle() {
    return SemisimpleSequence{
        DimVector{0, 1, 0, 0, 0, 0, 0, 0, 10}, DimVector{0, 0, 0, 0, 0, 0, 3, 5, 0},
        DimVector{0, 0, 0, 0, 1, 2, 0, 0, 0}, DimVector{0, 0, 0, 0, 2, 0, 0, 0, 0},
        DimVector{0, 0, 1, 0, 0, 0, 0, 0, 0}, DimVector(9), DimVector(9)};
}

// a skeleton for hereditary_layering(): tops z1..z5 at vertices 2, 3, 5, 5, 8
inline Skeleton displayed_skeleton(const Quiver& q) {
    std::vector<std::string> paths{
        "z1",
        "z2", "beta3 z2", "alpha7 beta3 z2", "alpha3 z2", "beta5 alpha3 z2", "alpha6 beta5 alpha3 z2",
        "beta6 beta5 alpha3 z2", "alpha8 alpha6 beta5 alpha3 z2", "alpha8 beta6 beta5 alpha3 z2",
        "alpha5 alpha3 z2", "alpha7 alpha5 alpha3 z2", "gamma5 alpha3 z2",
        "z3", "beta5 z3", "alpha6 beta5 z3", "beta6 beta5 z3", "alpha8 alpha6 beta5 z3", "alpha8 beta6 beta5 z3",
        "gamma5 z3",
        "z4", "alpha5 z4", "alpha7 alpha5 z4", "gamma5 z4",
        "z5"};
    std::vector<SkeletonPath> parsed;
    for (const auto& p : paths) {
        parsed.push_back(parse_skeleton_path(q, p));
    }
    return make_skeleton(q, {1, 2, 4, 4, 7}, parsed, 6);
}

// nine generic modules drawn for ladder7 at L = 3, labeled A..I
inline std::vector<SemisimpleSequence> ladder_diagram_layerings() {
    return {
        layering(7, 4, {{1}, {2, 3}, {4, 5}, {6, 7}}),
        layering(7, 4, {{1, 2}, {3, 4}, {5}, {6, 7}}),
        layering(7, 4, {{1, 7}, {2, 3}, {4}, {5, 6}}),
        layering(7, 4, {{1, 3}, {2, 5}, {4, 6}, {7}}),
        layering(7, 4, {{1, 3}, {2, 4, 5}, {6}, {7}}),
        layering(7, 4, {{1, 4}, {2, 5}, {3, 6}, {7}}),
        layering(7, 4, {{1, 4}, {2, 3}, {5}, {6, 7}}),
        layering(7, 4, {{1, 5}, {2, 7}, {3, 4}, {6}}),
        layering(7, 4, {{1, 2, 6}, {3}, {4, 5}, {7}}),
    };
}

// random quiver on n vertices; arrows only go upward unless cycles are allowed
template <class Rng>
Quiver random_quiver(Rng& rng, size_t n, bool allow_cycles, double density = 0.35) {
    std::vector<Arrow> arrows;
    std::bernoulli_distribution coin(density);
    std::uniform_int_distribution<int> multiplicity(1, 2);
    size_t counter = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if ((!allow_cycles && j <= i) || !coin(rng)) {
                continue;
            }
            int k = multiplicity(rng);
            for (int c = 0; c < k; ++c) {
                arrows.push_back({"r" + std::to_string(counter++), i, j});
            }
        }
    }
    return Quiver(n, std::move(arrows));
}

// random realizable sequence with entries <= max_entry
template <class Rng>
SemisimpleSequence random_realizable(Rng& rng, const Quiver& q, size_t L, Entry max_entry) {
    const AdjMatrix b = adjacency(q);
    const size_t n = q.vertex_count();
    SemisimpleSequence s(L + 1, n);
    for (size_t v = 0; v < n; ++v) {
        s[0][v] = std::uniform_int_distribution<Entry>(0, max_entry)(rng);
    }
    for (size_t l = 0; l < L; ++l) {
        DimVector cap = b.apply(s[l]);
        for (size_t v = 0; v < n; ++v) {
            Entry hi = std::min(cap[v], max_entry);
            s[l + 1][v] = std::uniform_int_distribution<Entry>(0, hi)(rng);
        }
    }
    return s;
}

// random representation of an acyclic quiver; annihilated by paths longer
// than the longest path
template <class Rng>
Representation random_representation(Rng& rng, const Quiver& q, const DimVector& dims, const PrimeField& f,
                                      uint64_t max_value = 0) {
    Representation m(f, q, dims);
    uint64_t hi = max_value ? max_value : f.prime() - 1;
    std::uniform_int_distribution<uint64_t> dist(0, hi);
    for (size_t a = 0; a < q.arrow_count(); ++a) {
        Matrix mat = m.map(a);
        for (size_t r = 0; r < mat.rows(); ++r) {
            for (size_t c = 0; c < mat.cols(); ++c) {
                mat(r, c) = dist(rng);
            }
        }
        m.set_map(a, std::move(mat));
    }
    return m;
}

inline Representation direct_sum(const Representation& x, const Representation& y) {
    Representation s(x.field, x.quiver, x.dims + y.dims);
    for (size_t a = 0; a < x.quiver.arrow_count(); ++a) {
        const Matrix& mx = x.map(a);
        const Matrix& my = y.map(a);
        Matrix m(mx.rows() + my.rows(), mx.cols() + my.cols());
        for (size_t r = 0; r < mx.rows(); ++r) {
            for (size_t c = 0; c < mx.cols(); ++c) {
                m(r, c) = mx(r, c);
            }
        }
        for (size_t r = 0; r < my.rows(); ++r) {
            for (size_t c = 0; c < my.cols(); ++c) {
                m(mx.rows() + r, mx.cols() + c) = my(r, c);
            }
        }
        s.set_map(a, std::move(m));
    }
    return s;
}

}

#endif /* tpa_tests_fixtures_hpp */
