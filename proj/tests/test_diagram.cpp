#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "locc/diagram.hpp"
#include "locc/families.hpp"

using locc::Diagram;
using locc::DiagramFormat;
using locc::Ket;
using locc::StateSet;

TEST_CASE("ket expressions") {
    CHECK(locc::ket_expr(Ket::super(6, {{3, 1}, {5, -1}})) == "|3-5>");
    CHECK(locc::ket_expr(Ket::alternating(4)) == "|1-2+3-4>");
    CHECK(locc::ket_expr(Ket::basis(4, 2)) == "|2>");
}

TEST_CASE("layout of thm1 (6,4): split tile and omitted stopper") {
    StateSet s = locc::build_thm1({6, 4});
    Diagram d = locc::layout(s);
    CHECK(d.stopper_omitted);
    CHECK(d.tiles.size() == 10);  // 11 states minus stopper
    int split_tiles = 0;
    for (const auto& t : d.tiles) {
        if (!t.contiguous) {
            ++split_tiles;
            CHECK(t.label == "varphi_7");
            CHECK(t.cells == std::set<std::pair<int, int>>{{3, 2}, {5, 2}});
        }
    }
    CHECK(split_tiles == 1);
    CHECK(locc::tiles_disjoint(d));
}

TEST_CASE("simple tile cells") {
    StateSet s{3, 4, "custom", {}};
    s.states.push_back({"u", Ket::basis(3, 1), Ket::super(4, {{2, 1}, {3, 1}})});
    Diagram d = locc::layout(s);
    REQUIRE(d.tiles.size() == 1);
    CHECK(d.tiles[0].cells == std::set<std::pair<int, int>>{{1, 2}, {1, 3}});
    CHECK(d.tiles[0].contiguous);
    CHECK_FALSE(d.stopper_omitted);
}

TEST_CASE("empty diagram renders a blank grid") {
    StateSet s{2, 2, "custom", {}};
    Diagram d = locc::layout(s);
    std::string art = locc::render(d, DiagramFormat::ascii);
    CHECK(art.find("A1") != std::string::npos);
    CHECK(art.find("B2") != std::string::npos);
    CHECK(art.find('1') != std::string::npos);  // axis labels only
}

TEST_CASE("thm3 (9,7) diagram has 24 tiles, all disjoint") {
    StateSet s = locc::build_thm3({9, 7});
    Diagram d = locc::layout(s);
    CHECK(d.tiles.size() == 24);
    CHECK(d.stopper_omitted);
    CHECK(locc::tiles_disjoint(d));
}

TEST_CASE("non-stopper tiles are disjoint across the whole grid") {
    for (int m = 4; m <= 12; ++m)
        for (int n = m; n <= 12; ++n) {
            locc::FamilyParams p{n, m};
            StateSet s = locc::build_family(p, locc::auto_family(p));
            Diagram d = locc::layout(s);
            CAPTURE(n);
            CAPTURE(m);
            CHECK(d.stopper_omitted);
            CHECK(locc::tiles_disjoint(d));
            CHECK(d.tiles.size() == s.states.size() - 1);
        }
}

TEST_CASE("rendering is deterministic and the split tile shares its number") {
    StateSet s = locc::build_thm1({6, 4});
    Diagram d = locc::layout(s);
    std::string a1 = locc::render(d, DiagramFormat::ascii);
    std::string a2 = locc::render(d, DiagramFormat::ascii);
    CHECK(a1 == a2);
    std::string svg1 = locc::render(d, DiagramFormat::svg);
    std::string svg2 = locc::render(d, DiagramFormat::svg);
    CHECK(svg1 == svg2);
    CHECK(svg1.rfind("<svg", 0) == 0);
    // varphi_7 = |3-5>|2> is drawn as two separated cells with one number
    int seven = 0;
    for (const auto& t : d.tiles)
        if (t.label == "varphi_7") seven = t.number;
    std::string needle = ">" + std::to_string(seven) + "</text>";
    size_t first = svg1.find(needle);
    REQUIRE(first != std::string::npos);
    CHECK(svg1.find(needle, first + 1) != std::string::npos);
    // legend mentions the split
    CHECK(a1.find("(split cells)") != std::string::npos);
    CHECK(a1.find("stopper omitted") != std::string::npos);
}

TEST_CASE("overlapping tiles are rendered with a shared-cell marker") {
    StateSet s{2, 2, "custom", {}};
    s.states.push_back({"u", Ket::basis(2, 1), Ket::basis(2, 1)});
    s.states.push_back({"v", Ket::basis(2, 1), Ket::super(2, {{1, 1}, {2, 1}})});
    Diagram d = locc::layout(s);
    CHECK_FALSE(locc::tiles_disjoint(d));
    std::string art = locc::render(d, DiagramFormat::ascii);
    CHECK(art.find("##") != std::string::npos);
}
