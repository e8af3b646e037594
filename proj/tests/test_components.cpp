#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace tpa;
using namespace tpa::testing;

namespace {

std::vector<SemisimpleSequence> rads(const std::vector<Component>& cs) {
    std::vector<SemisimpleSequence> out;
    for (const auto& c : cs) {
        out.push_back(c.rad);
    }
    return out;
}

bool has_rad(const std::vector<Component>& cs, const SemisimpleSequence& s) {
    auto r = rads(cs);
    return std::find(r.begin(), r.end(), s) != r.end();
}

std::set<std::pair<SemisimpleSequence, SemisimpleSequence>> pair_set(const std::vector<Component>& cs,
                                                                     bool swap) {
    std::set<std::pair<SemisimpleSequence, SemisimpleSequence>> out;
    for (const auto& c : cs) {
        out.insert(swap ? std::make_pair(c.soc, c.rad) : std::make_pair(c.rad, c.soc));
    }
    return out;
}

}

TEST(RadSocPairs, Kronecker) {
    auto pairs = rad_soc_pairs(kronecker(), DimVector{1, 2}, 1);
    LayeredPair want{SemisimpleSequence{DimVector{1, 0}, DimVector{0, 2}},
                     SemisimpleSequence{DimVector{0, 2}, DimVector{1, 0}}};
    EXPECT_NE(std::find(pairs.begin(), pairs.end(), want), pairs.end());
    EXPECT_EQ(pairs.size(), 3u);
}

TEST(RadSocPairs, ZeroDimension) {
    auto pairs = rad_soc_pairs(two_rows6(), DimVector(6), 2);
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_TRUE(pairs[0].rad.is_zero());
    EXPECT_TRUE(pairs[0].soc.is_zero());
}

TEST(RadSocPairs, TwoRowsContainsHat) {
    Quiver q = two_rows6();
    auto pairs = rad_soc_pairs(q, ones(6), 2);
    auto hat = layering(6, 3, {{1, 4}, {2, 5}, {3, 6}});
    LayeredPair want{hat, generic_socle_layering(hat, q)};
    EXPECT_NE(std::find(pairs.begin(), pairs.end(), want), pairs.end());
}

TEST(MinimalPairs, Trivial) {
    EXPECT_TRUE(minimal_pairs({}).empty());
    LayeredPair a{SemisimpleSequence{DimVector{1, 0}, DimVector{0, 2}},
                  SemisimpleSequence{DimVector{0, 2}, DimVector{1, 0}}};
    EXPECT_EQ(minimal_pairs({a}), std::vector<LayeredPair>{a});
    LayeredPair b{SemisimpleSequence{DimVector{1, 2}, DimVector{0, 0}},
                  SemisimpleSequence{DimVector{1, 2}, DimVector{0, 0}}};
    LayeredPair c{SemisimpleSequence{DimVector{1, 1}, DimVector{0, 1}},
                  SemisimpleSequence{DimVector{0, 2}, DimVector{1, 0}}};
    // c sits above a in both coordinates
    EXPECT_EQ(minimal_pairs({c, a}), std::vector<LayeredPair>{a});
    // b dominates a too; duplicates collapse
    EXPECT_EQ(minimal_pairs({a, b, c, a}), std::vector<LayeredPair>{a});
}

TEST(MinimalPairs, LadderCount) {
    auto minimal = minimal_pairs(rad_soc_pairs(ladder7(), ones(7), 3));
    EXPECT_EQ(minimal.size(), 28u);
}

TEST(MinimalPairs, MatchesQuadraticFilter) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        size_t n = 1 + rng() % 5;
        Quiver q = random_quiver(rng, n, false, 0.45);
        DimVector d(n);
        for (size_t v = 0; v < n; ++v) {
            d[v] = Entry(rng() % 3);
        }
        size_t L = rng() % 4;
        auto pairs = rad_soc_pairs(q, d, L);
        auto fast = minimal_pairs(pairs);
        auto slow = oracle::minimal_brute_force(pairs);
        std::set<std::pair<SemisimpleSequence, SemisimpleSequence>> a, b;
        for (const auto& p : fast) {
            a.insert({p.rad, p.soc});
        }
        for (const auto& p : slow) {
            b.insert({p.rad, p.soc});
        }
        EXPECT_EQ(a, b) << "trial " << trial;
        EXPECT_EQ(a.size(), fast.size());
    }
}

TEST(Classify, LadderUniserial) {
    auto cs = classify(ladder7(), ones(7), 6);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].rad, layering(7, 7, {{1}, {2}, {3}, {4}, {5}, {6}, {7}}));
    EXPECT_EQ(cs[0].endo_dim, 1u);
}

TEST(Classify, LadderLoewyFive) {
    auto cs = classify(ladder7(), ones(7), 5);
    ASSERT_EQ(cs.size(), 6u);
    for (const auto& c : cs) {
        EXPECT_EQ(c.endo_dim, 1u);
        EXPECT_TRUE(c.generically_indecomposable);
    }
    EXPECT_TRUE(has_rad(cs, layering(7, 6, {{1, 2}, {3}, {4}, {5}, {6}, {7}})));
    EXPECT_TRUE(has_rad(cs, layering(7, 6, {{1}, {2}, {3}, {4}, {5}, {6, 7}})));
}

TEST(Classify, LadderLoewyThree) {
    auto cs = classify(ladder7(), ones(7), 3);
    ASSERT_EQ(cs.size(), 28u);
    size_t indecomposable = 0, split = 0;
    for (const auto& c : cs) {
        indecomposable += c.endo_dim == 1;
        split += c.endo_dim == 2;
    }
    EXPECT_EQ(indecomposable, 12u);
    EXPECT_EQ(split, 16u);
    for (const auto& s : ladder_diagram_layerings()) {
        EXPECT_TRUE(has_rad(cs, s)) << s.str();
    }
}

TEST(Classify, LadderDiagramComparisons) {
    Quiver q = ladder7();
    auto layers = ladder_diagram_layerings();
    auto a = layers[0], b = layers[1], c = layers[2];
    auto sa = generic_socle_layering(a, q), sb = generic_socle_layering(b, q), sc = generic_socle_layering(c, q);
    EXPECT_TRUE(dominance_leq(a, b));
    EXPECT_NE(a, b);
    EXPECT_TRUE(dominance_leq(sb, sa));
    EXPECT_NE(sa, sb);
    EXPECT_TRUE(dominance_leq(sa, sc));
    EXPECT_NE(sa, sc);
    EXPECT_FALSE(dominance_leq(a, c));
    EXPECT_FALSE(dominance_leq(c, a));
}

TEST(Classify, TwoRows) {
    auto cs = classify(two_rows6(), ones(6), 2);
    std::set<SemisimpleSequence> got;
    for (const auto& c : cs) {
        got.insert(c.rad);
    }
    std::set<SemisimpleSequence> want{layering(6, 3, {{1, 4}, {2, 5}, {3, 6}}),
                                      layering(6, 3, {{1, 2, 4}, {3, 5}, {6}}),
                                      layering(6, 3, {{1, 4, 6}, {2}, {3, 5}})};
    EXPECT_EQ(got, want);
    EXPECT_EQ(cs.size(), 3u);
}

TEST(Classify, Errors) {
    Quiver cyclic = parse_quiver(
        R"({"vertices":2,"arrows":[{"name":"a","source":1,"target":2},{"name":"b","source":2,"target":1}]})");
    try {
        classify(cyclic, DimVector{1, 1}, 1);
        FAIL() << "expected a hypothesis violation";
    } catch (const hypothesis_violation& e) {
        EXPECT_NE(std::string(e.what()).find("Main Theorem hypothesis violated"), std::string::npos);
    }
    EXPECT_THROW(classify(kronecker(), DimVector{1, 2, 3}, 1), input_error);
    EXPECT_THROW(classify(kronecker(), DimVector{1, -2}, 1), input_error);
}

TEST(Classify, OutputInvariants) {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 1 + rng() % 5;
        Quiver q = random_quiver(rng, n, false, 0.45);
        DimVector d(n);
        for (size_t v = 0; v < n; ++v) {
            d[v] = Entry(rng() % 3);
        }
        size_t L = rng() % 4;
        auto cs = classify(q, d, L, {1, default_prime, 7});
        EXPECT_EQ(cs.size(), minimal_pairs(rad_soc_pairs(q, d, L)).size());
        for (size_t i = 0; i < cs.size(); ++i) {
            EXPECT_TRUE(is_realizable(cs[i].rad, q));
            EXPECT_EQ(cs[i].rad.total(), d);
            EXPECT_EQ(cs[i].soc.total(), d);
            EXPECT_EQ(cs[i].skeleton.layering, cs[i].rad);
            EXPECT_GE(cs[i].endo_dim, d.is_zero() ? 0u : 1u);
            EXPECT_EQ(cs[i].generically_indecomposable, cs[i].endo_dim == 1);
            if (i > 0) {
                EXPECT_LT(std::tie(cs[i - 1].rad, cs[i - 1].soc), std::tie(cs[i].rad, cs[i].soc));
            }
            for (size_t j = 0; j < cs.size(); ++j) {
                if (i != j) {
                    EXPECT_FALSE(pair_leq({cs[i].rad, cs[i].soc}, {cs[j].rad, cs[j].soc}));
                }
            }
        }
    }
}

TEST(Classify, EveryInstantiationLiesAbove) {
    Quiver q = two_rows6();
    std::mt19937_64 rng(63);
    PrimeField f;
    for (const auto& c : classify(q, ones(6), 2)) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<uint64_t> values(c.presentation.scalar_count);
            for (auto& x : values) {
                x = trial < 5 ? rng() % 2 : f.random_nonzero(rng);
            }
            auto m = instantiate(c.presentation, q, values, f);
            LayeredPair observed{radical_layering(m, 2), socle_layering(m, 2)};
            EXPECT_TRUE(pair_leq({c.rad, c.soc}, observed));
        }
    }
}

TEST(Duality, OppositeQuiverSwapsPairs) {
    struct Case {
        Quiver q;
        DimVector d;
        size_t L;
    };
    for (const auto& [q, d, L] : {Case{kronecker(), DimVector{1, 2}, 1}, Case{two_rows6(), ones(6), 2},
                                  Case{ladder7(), ones(7), 4}}) {
        auto cs = classify(q, d, L, {1, default_prime, 3});
        auto op = classify(opposite(q), d, L, {1, default_prime, 3});
        EXPECT_EQ(pair_set(op, false), pair_set(cs, true));
    }
}

TEST(Duality, KroneckerExplicit) {
    auto op = classify(opposite(kronecker()), DimVector{1, 2}, 1);
    ASSERT_EQ(op.size(), 1u);
    EXPECT_EQ(op[0].rad, (SemisimpleSequence{DimVector{0, 2}, DimVector{1, 0}}));
    EXPECT_EQ(op[0].soc, (SemisimpleSequence{DimVector{1, 0}, DimVector{0, 2}}));
}

TEST(GenericTop, Examples) {
    Quiver h = hereditary9();
    EXPECT_EQ(generic_top(DimVector{0, 1, 1, 0, 3, 2, 3, 5, 10}, h), (DimVector{0, 1, 1, 0, 2, 0, 0, 1, 0}));
    EXPECT_EQ(generic_top(DimVector(9), h), DimVector(9));
    DimVector sinks = DimVector::unit(9, 8);
    sinks[8] = 4;
    EXPECT_EQ(generic_top(sinks, h), sinks);
    EXPECT_THROW(generic_top(DimVector{1}, h), input_error);
}

TEST(HereditaryLayering, NineVertexExample) {
    Quiver h = hereditary9();
    DimVector d{0, 1, 1, 0, 3, 2, 3, 5, 10};
    auto s = hereditary_generic_layering(h, d);
    EXPECT_EQ(s.layer_count(), 7u);
    EXPECT_EQ(s[0], (DimVector{0, 1, 1, 0, 2, 0, 0, 1, 0}));
    EXPECT_EQ(d - s[0], (DimVector{0, 0, 0, 0, 1, 2, 3, 4, 10}));
    EXPECT_TRUE(is_realizable(s, h));
    EXPECT_EQ(s.total(), d);
}

TEST(HereditaryLayering, SmallCases) {
    EXPECT_EQ(hereditary_generic_layering(kronecker(), DimVector{1, 2}),
              (SemisimpleSequence{DimVector{1, 0}, DimVector{0, 2}}));
    auto s = hereditary_generic_layering(ladder7(), DimVector::unit(7, 0));
    EXPECT_EQ(s[0], DimVector::unit(7, 0));
    EXPECT_EQ(s.clipped_length(), 1u);
}

TEST(HereditaryLayering, UniqueMinimumOfRealizableSet) {
    std::mt19937_64 rng(64);
    size_t checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        size_t n = 1 + rng() % 5;
        Quiver q = random_quiver(rng, n, false, 0.45);
        DimVector d(n);
        for (size_t v = 0; v < n; ++v) {
            d[v] = Entry(rng() % 4);
        }
        size_t L = max_path_length(q);
        auto all = realizable_sequences(q, d, L);
        if (all.size() > 10000) {
            continue;
        }
        auto g = hereditary_generic_layering(q, d);
        for (const auto& s : all) {
            EXPECT_TRUE(dominance_leq(g, s)) << g.str() << " vs " << s.str();
        }
        auto cs = classify(q, d, L, {1, default_prime, 1});
        ASSERT_EQ(cs.size(), 1u);
        EXPECT_EQ(cs[0].rad, g);
        ++checked;
    }
    EXPECT_GT(checked, 50u);
}

TEST(ComponentJson, RoundTripAndDeterminism) {
    Quiver q = ladder7();
    auto cs = classify(q, ones(7), 5);
    for (const auto& c : cs) {
        auto doc = component_to_json(c, q);
        auto back = component_from_json(nlohmann::json::parse(doc.dump()), q);
        EXPECT_EQ(back, c);
    }
    auto dump = [&] {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : classify(q, ones(7), 5)) {
            arr.push_back(component_to_json(c, q));
        }
        return arr.dump(2);
    };
    EXPECT_EQ(dump(), dump());
}

TEST(ComponentJson, FieldOrder) {
    Quiver q = kronecker();
    auto doc = component_to_json(classify(q, DimVector{1, 2}, 1)[0], q);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        keys.push_back(it.key());
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"rad", "soc", "c0", "endo_dim", "generically_indecomposable",
                                              "skeleton", "presentation"}));
    EXPECT_EQ(doc.at("rad"), nlohmann::json::parse("[[1,0],[0,2]]"));
    EXPECT_EQ(doc.at("skeleton"), nlohmann::json::parse(R"(["z1","a1 z1","a2 z1"])"));
}

TEST(ComponentJson, Errors) {
    Quiver q = kronecker();
    auto doc = nlohmann::json::parse(component_to_json(classify(q, DimVector{1, 2}, 1)[0], q).dump());
    auto missing = doc;
    missing.erase("soc");
    EXPECT_THROW(component_from_json(missing, q), input_error);
    auto bad = doc;
    bad["rad"] = nlohmann::json::parse("[[1,-1]]");
    EXPECT_THROW(component_from_json(bad, q), input_error);
    EXPECT_THROW(sequence_from_json(nlohmann::json::parse("[]")), input_error);
    EXPECT_THROW(sequence_from_json(nlohmann::json::parse("[[1],[1,2]]")), input_error);
}
