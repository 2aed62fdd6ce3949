#include <catch2/catch_amalgamated.hpp>

#include <coxout/oracle.hpp>
#include <coxout/sil.hpp>

#include "test_support.hpp"

using namespace coxout;

TEST_CASE("is_sil") {
    const auto g = naive::g_va();
    SECTION("the G_VA SIL") {
        const auto w = is_sil(g, "x", "y", "z");
        REQUIRE(w);
        REQUIRE(w->z_component == VertexSet{"z"});
    }
    SECTION("component containing the other vertex fails") {
        REQUIRE(!is_sil(g, "x", "z", "y"));
    }
    SECTION("adjacent pairs never form a SIL") {
        REQUIRE(!is_sil(g, "c1", "c2", "z"));
    }
    SECTION("bad vertices are input errors") {
        REQUIRE_THROWS_AS(is_sil(g, "x", "x", "z"), InputError);
        REQUIRE_THROWS_AS(is_sil(g, "x", "y", "nope"), InputError);
    }
}

TEST_CASE("enumerate_sils") {
    SECTION("path has none") {
        REQUIRE(enumerate_sils(naive::path3()).empty());
    }
    SECTION("G_VA has exactly one") {
        const auto sils = enumerate_sils(naive::g_va());
        REQUIRE(sils.size() == 1);
        REQUIRE(sils[0].x1 == "x");
        REQUIRE(sils[0].x2 == "y");
        REQUIRE(sils[0].z_component == VertexSet{"z"});
    }
    SECTION("discrete triple has three") {
        const auto sils = enumerate_sils(naive::discrete(3));
        REQUIRE(sils.size() == 3);
        REQUIRE(sils[0].x1 == "a");
        REQUIRE(sils[0].x2 == "b");
        REQUIRE(sils[0].z_component == VertexSet{"c"});
        REQUIRE(sils[1].z_component == VertexSet{"b"});
        REQUIRE(sils[2].z_component == VertexSet{"a"});
    }
}

TEST_CASE("is_stil") {
    SECTION("discrete four") {
        const auto g = naive::discrete(4);
        const auto w = is_stil(g, "a", "b", "c", "d");
        REQUIRE(w);
        REQUIRE(w->z_component == VertexSet{"d"});
    }
    SECTION("one edge in the triple is allowed") {
        REQUIRE(is_stil(naive::gamma31(), "a", "b", "c", "d"));
    }
    SECTION("two edges in the span are too many") {
        REQUIRE(!is_stil(naive::g_va(), "x", "y", "c1", "z"));
    }
}

TEST_CASE("is_fsil") {
    SECTION("discrete triple") {
        REQUIRE(is_fsil(naive::discrete(3), "a", "b", "c"));
    }
    SECTION("star leaves") {
        const auto g = naive::star_graph(3);
        const auto w = is_fsil(g, "x1", "x2", "x3");
        REQUIRE(w);
        REQUIRE(w->sils[0].z_component == VertexSet{"x3"});
    }
    SECTION("G_VA is not flexible enough") {
        REQUIRE(!is_fsil(naive::g_va(), "x", "y", "z"));
    }
}

TEST_CASE("find_witness") {
    SECTION("FSIL precedes STIL on the discrete four") {
        const auto w = find_witness(naive::discrete(4));
        REQUIRE(w);
        const auto* f = std::get_if<FsilWitness>(&*w);
        REQUIRE(f != nullptr);
        REQUIRE(f->x1 == "a");
        REQUIRE(f->x2 == "b");
        REQUIRE(f->x3 == "c");
    }
    SECTION("non-Coxeter SIL on the heavy G_VA") {
        const auto w = find_witness(naive::g_va(3));
        REQUIRE(w);
        const auto* nc = std::get_if<NonCoxeterSilWitness>(&*w);
        REQUIRE(nc != nullptr);
        REQUIRE(nc->heavy_vertex == "x");
        REQUIRE(nc->underlying.z_component == VertexSet{"z"});
    }
    SECTION("plain G_VA has no witness") {
        REQUIRE(!find_witness(naive::g_va()));
    }
}

TEST_CASE("overlap_to_stil") {
    SECTION("two overlapping star SILs") {
        const auto g = naive::star_graph(4); // center m, leaves x1..x4
        const auto s1 = is_sil(g, "x1", "x2", "x4");
        const auto s2 = is_sil(g, "x1", "x3", "x4");
        REQUIRE(s1);
        REQUIRE(s2);
        const auto st = overlap_to_stil(g, *s1, *s2, "x4");
        REQUIRE(st.z_component == VertexSet{"x4"});
    }
    SECTION("z outside the overlap is an input error") {
        const auto g = naive::star_graph(4);
        const auto s1 = is_sil(g, "x1", "x2", "x3");
        const auto s2 = is_sil(g, "x1", "x3", "x2");
        REQUIRE(s1);
        REQUIRE(s2);
        // components are singleton leaves, so the two components are disjoint
        REQUIRE_THROWS_AS(overlap_to_stil(g, *s1, *s2, "x4"), InputError);
    }
    SECTION("disconnected graphs are rejected") {
        const auto g = naive::discrete(4);
        const auto s1 = is_sil(g, "a", "b", "d");
        const auto s2 = is_sil(g, "a", "c", "d");
        REQUIRE_THROWS_AS(overlap_to_stil(g, *s1, *s2, "d"), InputError);
    }
}

TEST_CASE("stilfind_trichotomy") {
    SECTION("equal witnesses force the STIL clause") {
        const auto g = naive::discrete(4);
        const auto r = stilfind_trichotomy(g, "a", "b", "c", "d", "d");
        REQUIRE(r.kind == StilfindResult::Kind::Stil);
        REQUIRE(r.stil->z_component == VertexSet{"d"});
    }
    SECTION("crossed witnesses force the FSIL clause") {
        const auto g = naive::star_graph(3);
        const auto r = stilfind_trichotomy(g, "x1", "x2", "x3", "x3", "x2");
        REQUIRE(r.kind == StilfindResult::Kind::Fsil);
    }
    SECTION("hypothesis violations are input errors") {
        REQUIRE_THROWS_AS(stilfind_trichotomy(naive::path3(), "a", "b", "c", "a", "a"),
                          InputError);
    }
    SECTION("the same-component clause on a frozen 7-vertex instance") {
        const auto g = naive::make_graph(
            {"a", "b", "c", "d", "e", "f", "g"},
            {{"a", "e"}, {"a", "g"}, {"b", "e"}, {"c", "d"}, {"d", "f"}, {"d", "g"}, {"e", "f"}});
        REQUIRE(is_sil(g, "f", "a", "b"));
        REQUIRE(is_sil(g, "f", "g", "c"));
        const auto r = stilfind_trichotomy(g, "f", "a", "g", "b", "c");
        REQUIRE(r.kind == StilfindResult::Kind::SameComponentCondition);
    }
    SECTION("every hypothesis tuple on small graphs lands in a clause") {
        long long fsil = 0, stil = 0, same_comp = 0;
        for_all_graphs(5, [&](const LabelledGraph& g) {
            const auto sils = enumerate_sils(g);
            for (std::size_t i = 0; i < sils.size(); ++i) {
                for (std::size_t j = 0; j < sils.size(); ++j) {
                    if (i == j) continue;
                    std::string x1;
                    int shared = 0;
                    for (const std::string& a : {sils[i].x1, sils[i].x2})
                        for (const std::string& b : {sils[j].x1, sils[j].x2})
                            if (a == b) {
                                x1 = a;
                                ++shared;
                            }
                    if (shared != 1) continue;
                    const std::string x2 = sils[i].x1 == x1 ? sils[i].x2 : sils[i].x1;
                    const std::string x3 = sils[j].x1 == x1 ? sils[j].x2 : sils[j].x1;
                    const auto r = stilfind_trichotomy(g, x1, x2, x3,
                                                       sils[i].z_component.front(),
                                                       sils[j].z_component.front());
                    switch (r.kind) {
                        case StilfindResult::Kind::Fsil: ++fsil; break;
                        case StilfindResult::Kind::Stil: ++stil; break;
                        case StilfindResult::Kind::SameComponentCondition: ++same_comp; break;
                    }
                }
            }
        });
        // FSIL and STIL clauses occur at this scale; the same-component
        // clause needs more vertices and has its frozen instance above.
        REQUIRE(fsil > 0);
        REQUIRE(stil > 0);
        REQUIRE(same_comp == 0);
    }
}

TEST_CASE("star_separates") {
    SECTION("G_VA") {
        REQUIRE(star_separates(naive::g_va(), "x", "y", "z"));
    }
    SECTION("arguments inside the star are input errors") {
        REQUIRE_THROWS_AS(star_separates(naive::path3(), "b", "a", "c"), InputError);
    }
    SECTION("five path") {
        const auto g = naive::make_graph({"a", "b", "c", "d", "e"},
                                         {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
        REQUIRE(star_separates(g, "c", "a", "e"));
        REQUIRE_THROWS_AS(star_separates(g, "c", "a", "a"), InputError);
    }
}

TEST_CASE("fsil_from_separating_star") {
    SECTION("discrete triple") {
        REQUIRE_NOTHROW(fsil_from_separating_star(naive::discrete(3), "a", "b", "c"));
    }
    SECTION("missing SIL context is an input error") {
        const auto g = naive::make_graph({"a", "b", "c", "d", "e"},
                                         {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
        // st(c) separates a and e, but (a,e | c) is not a SIL.
        REQUIRE(star_separates(g, "c", "a", "e"));
        REQUIRE_THROWS_AS(fsil_from_separating_star(g, "a", "e", "c"), InputError);
    }
    SECTION("non-separating star is an input error") {
        // In K_{1,3} plus an isolated vertex, st(w) with w isolated separates
        // nothing: the star graph stays connected.
        const auto g = naive::make_graph({"m", "x1", "x2", "x3", "w"},
                                         {{"m", "x1"}, {"m", "x2"}, {"m", "x3"}});
        REQUIRE(is_sil(g, "x1", "x2", "w").has_value());
        REQUIRE_THROWS_AS(fsil_from_separating_star(g, "x1", "x2", "w"), InputError);
    }
}

TEST_CASE("sil_from_double_separation") {
    SECTION("discrete triple") {
        const auto w = sil_from_double_separation(naive::discrete(3), "a", "b", "c");
        REQUIRE(w.z_component == VertexSet{"c"});
    }
    SECTION("star leaves") {
        const auto w = sil_from_double_separation(naive::star_graph(3), "x1", "x2", "x3");
        REQUIRE(w.z_component == VertexSet{"x3"});
    }
    SECTION("missing separation is an input error") {
        REQUIRE_THROWS_AS(sil_from_double_separation(naive::cycle4(), "a", "c", "b"), InputError);
    }
}

TEST_CASE("detectors agree with the naive scan on all 4-vertex graphs") {
    for_all_graphs(4, [](const LabelledGraph& g) {
        const auto sils = enumerate_sils(g);
        std::set<std::pair<std::pair<std::string, std::string>, std::set<std::string>>> mine;
        for (const auto& s : sils)
            mine.insert({{s.x1, s.x2},
                         std::set<std::string>(s.z_component.begin(), s.z_component.end())});
        REQUIRE(mine == naive::sil_pairs(g));

        const auto w = find_witness(g);
        bool mine_stil = false, mine_fsil = false;
        if (w) {
            mine_stil = std::holds_alternative<StilWitness>(*w);
            mine_fsil = std::holds_alternative<FsilWitness>(*w);
        }
        REQUIRE((mine_fsil || mine_stil) == (naive::has_fsil(g) || naive::has_stil(g)));
        if (mine_fsil) REQUIRE(naive::has_fsil(g));
        if (mine_stil) REQUIRE(naive::has_stil(g));
    });
}

TEST_CASE("witness soundness against raw definitions on random graphs") {
    GraphSampler s;
    s.seed = 31;
    s.min_vertices = 3;
    s.max_vertices = 7;
    s.edge_prob = 0.35;
    s.label_weights = {{2, 3.0}, {3, 1.0}};
    Rng rng(s.seed);
    for (int t = 0; t < 60; ++t) {
        const auto g = sample_graph_stream(rng, s);
        for (const auto& sw : enumerate_sils(g)) {
            for (const auto& z : sw.z_component) REQUIRE(naive::sil(g, sw.x1, sw.x2, z));
        }
        if (auto w = find_witness(g)) {
            if (const auto* st = std::get_if<StilWitness>(&*w)) {
                for (const auto& z : st->z_component)
                    REQUIRE(naive::stil(g, st->x1, st->x2, st->x3, z));
            } else if (const auto* f = std::get_if<FsilWitness>(&*w)) {
                REQUIRE(naive::fsil(g, f->x1, f->x2, f->x3));
            } else if (const auto* nc = std::get_if<NonCoxeterSilWitness>(&*w)) {
                REQUIRE(g.order_of(nc->heavy_vertex) >= 3);
                for (const auto& z : nc->underlying.z_component)
                    REQUIRE(naive::sil(g, nc->underlying.x1, nc->underlying.x2, z));
            }
        }
        // FSIL/STIL presence ignores the labels.
        std::vector<std::pair<std::string, long long>> relabelled;
        for (const auto& v : g.vertex_names()) relabelled.emplace_back(v, 2);
        const LabelledGraph g2(relabelled, g.edge_list());
        REQUIRE((naive::has_stil(g) == naive::has_stil(g2)));
        const auto w2 = find_witness(g2);
        const bool strong2 = w2.has_value();
        bool strong1 = false;
        if (auto w1 = find_witness(g))
            strong1 = !std::holds_alternative<NonCoxeterSilWitness>(*w1);
        REQUIRE(strong1 == strong2);
    }
}

TEST_CASE("witness json shapes") {
    const auto g = naive::g_va(3);
    const auto w = find_witness(g);
    REQUIRE(w);
    const auto j = to_json(*w);
    REQUIRE(j.at("kind") == "non_coxeter_sil");
    REQUIRE(j.at("heavy_vertex") == "x");
    REQUIRE(j.at("underlying").at("z_component") == nlohmann::json::array({"z"}));
}
