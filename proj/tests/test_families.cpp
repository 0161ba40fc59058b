#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "locc/families.hpp"

using locc::Family;
using locc::FamilyParams;
using locc::Ket;
using locc::StateSet;

namespace {

const locc::ProductState& state(const StateSet& s, const std::string& label) {
    const auto* p = s.find(label);
    REQUIRE(p != nullptr);
    return *p;
}

std::vector<std::pair<int, long long>> amps(std::initializer_list<std::pair<int, long long>> xs) {
    return {xs};
}

}  // namespace

TEST_CASE("counts match the closed forms over the whole grid") {
    for (int m = 4; m <= 12; ++m) {
        for (int n = m; n <= 12; ++n) {
            FamilyParams p{n, m};
            Family f = locc::auto_family(p);
            StateSet s = locc::build_family(p, f);
            CHECK(static_cast<long>(s.states.size()) == locc::expected_count(p, f));
            CHECK(locc::verify_orthogonality(s).empty());
            CHECK_NOTHROW(locc::validate_state_set(s));
        }
    }
}

TEST_CASE("headline counts") {
    CHECK(locc::expected_count({6, 4}, Family::thm1) == 11);
    CHECK(locc::expected_count({4, 4}, Family::thm1_n4) == 8);
    CHECK(locc::expected_count({7, 6}, Family::thm2) == 18);
    CHECK(locc::expected_count({9, 7}, Family::thm3) == 25);
    CHECK(locc::expected_count({5, 5}, Family::thm3) == 9);
    CHECK(locc::build_thm1({6, 4}).states.size() == 11);
    CHECK(locc::build_thm2({7, 6}).states.size() == 18);
    CHECK(locc::build_thm2({8, 8}).states.size() == 24);
    CHECK(locc::build_thm3({9, 7}).states.size() == 25);
}

TEST_CASE("thm1 at (6,4), state by state") {
    StateSet s = locc::build_thm1({6, 4});
    CHECK(s.family_tag == "thm1");
    CHECK(state(s, "phi").a.amps == amps({{1, 1}, {2, -1}, {3, 1}, {4, -1}, {5, 1}, {6, -1}}));
    CHECK(state(s, "phi").b.amps == amps({{1, 1}, {2, -1}, {3, 1}, {4, -1}}));
    CHECK(state(s, "varphi_1").a.amps == amps({{1, 1}}));
    CHECK(state(s, "varphi_1").b.amps == amps({{2, 1}, {3, 1}}));
    // |varphi_6> = |5+6>_A |1>_B  (odd-range i=1)
    CHECK(state(s, "varphi_6").a.amps == amps({{5, 1}, {6, 1}}));
    CHECK(state(s, "varphi_6").b.amps == amps({{1, 1}}));
    // |varphi_7> = |3-5>_A |2>_B
    CHECK(state(s, "varphi_7").a.amps == amps({{3, 1}, {5, -1}}));
    CHECK(state(s, "varphi_7").b.amps == amps({{2, 1}}));
    CHECK(state(s, "varphi_10").a.amps == amps({{6, 1}}));
    CHECK(state(s, "varphi_10").b.amps == amps({{3, 1}, {4, 1}}));
    CHECK(s.find("varphi_11") == nullptr);
}

TEST_CASE("thm1 at (5,4): both parity ranges are empty") {
    StateSet s = locc::build_thm1({5, 4});
    CHECK(s.states.size() == 9);
    // varphi_6 is the |3-5>|2> state, not a parity-range state: the
    // odd range would need |6>_A which does not exist in C^5.
    CHECK(state(s, "varphi_6").a.amps == amps({{3, 1}, {5, -1}}));
    std::set<std::string> labels;
    for (const auto& st : s.states) labels.insert(st.label);
    CHECK(labels == std::set<std::string>{"phi", "varphi_1", "varphi_2", "varphi_3", "varphi_4",
                                          "varphi_5", "varphi_6", "varphi_7", "varphi_8"});
    CHECK(state(s, "varphi_7").a.amps == amps({{4, 1}}));
    CHECK(state(s, "varphi_8").a.amps == amps({{5, 1}}));
}

TEST_CASE("thm1 n=4 variant replaces the out-of-range state") {
    StateSet s = locc::build_thm1({4, 4});
    CHECK(s.family_tag == "thm1_n4");
    CHECK(s.states.size() == 8);
    CHECK(state(s, "varphi_7").a.amps == amps({{3, 1}, {4, 1}}));
    CHECK(state(s, "varphi_7").b.amps == amps({{2, 1}}));
    CHECK(state(s, "varphi_6").a.amps == amps({{4, 1}}));
    CHECK(state(s, "varphi_6").b.amps == amps({{3, 1}, {4, 1}}));
    CHECK(locc::verify_orthogonality(s).empty());
}

TEST_CASE("thm2 at (7,6), state by state") {
    StateSet s = locc::build_thm2({7, 6});
    CHECK(s.states.size() == 18);
    CHECK(state(s, "psi_3").a.amps == amps({{1, 1}, {2, 1}}));  // |(l-2)+(l-1)> at l=3
    CHECK(state(s, "psi_3").b.amps == amps({{3, 1}}));
    CHECK(state(s, "psi_4").a.amps == amps({{3, 1}}));  // psi_{3l-5}
    CHECK(state(s, "psi_4").b.amps == amps({{3, 1}, {4, 1}}));
    CHECK(state(s, "psi_7").a.amps == amps({{7, 1}}));  // psi_{i+3l-3}, i=1
    CHECK(state(s, "varphi_4").a.amps == amps({{4, 1}, {5, 1}}));  // varphi_{2l-2}
    CHECK(state(s, "varphi_4").b.amps == amps({{4, 1}}));
    // varphi_{2l-1}: A factor |l+3>; B factor carries the l,l+1 support
    CHECK(state(s, "varphi_5").a.amps == amps({{6, 1}}));
    CHECK(state(s, "varphi_5").b.amps == amps({{3, 1}, {4, 1}}));
    CHECK(state(s, "phi_3").a.amps == amps({{6, 1}, {7, 1}}));  // odd i=3
    CHECK(state(s, "phi_3").b.amps == amps({{5, 1}}));
    CHECK(state(s, "phi").b.amps == amps({{1, 1}, {2, -1}, {3, 1}, {4, -1}, {5, 1}, {6, -1}}));
}

TEST_CASE("thm2 at n = 2l has an empty tail range") {
    StateSet s = locc::build_thm2({6, 6});
    CHECK(s.states.size() == 16);
    CHECK(s.find("psi_7") == nullptr);  // psi_{i+3l-3} needs n > 2l
}

TEST_CASE("thm3 at (9,7), state by state") {
    StateSet s = locc::build_thm3({9, 7});
    CHECK(s.states.size() == 25);
    CHECK(state(s, "phi_1").a.amps == amps({{1, 1}, {2, 1}}));
    CHECK(state(s, "phi_1").b.amps == amps({{3, 1}}));
    CHECK(state(s, "phi_2").a.amps == amps({{6, 1}, {7, 1}}));
    CHECK(state(s, "phi_3").b.amps == amps({{6, 1}, {7, 1}}));
    CHECK(state(s, "phi_4").a.amps == amps({{5, 1}}));
    CHECK(state(s, "psi_4").b.amps == amps({{5, 1}}));  // B = |i+1> above the split
    CHECK(state(s, "psi_7").a.amps == amps({{1, 1}}));  // psi_{i+2k}, i=1
    CHECK(state(s, "psi_7").b.amps == amps({{4, 1}, {5, 1}}));
    CHECK(state(s, "psi_8").a.amps == amps({{7, 1}}));  // psi_{i+2k-5}, i=k+4
    CHECK(state(s, "psi_8").b.amps == amps({{3, 1}, {4, 1}}));
    CHECK(state(s, "varphi_4").a.amps == amps({{5, 1}}));  // A = |i+1| above the split
    CHECK(state(s, "varphi_7").a.amps == amps({{3, 1}, {4, 1}}));
    CHECK(state(s, "varphi_8").a.amps == amps({{4, 1}, {5, 1}}));
    CHECK(state(s, "varphi_8").b.amps == amps({{7, 1}}));
    // phi_{i+5}: even i=0 then odd i=1
    CHECK(state(s, "phi_5").a.amps == amps({{8, 1}, {9, 1}}));
    CHECK(state(s, "phi_5").b.amps == amps({{7, 1}}));
    CHECK(state(s, "phi_6").a.amps == amps({{7, 1}, {8, 1}}));
    CHECK(state(s, "phi_6").b.amps == amps({{6, 1}}));
    CHECK(state(s, "phi").b.amps == amps({{1, 1}, {2, -1}, {3, 1}, {4, -1}, {5, 1}, {6, -1}, {7, 1}}));
}

TEST_CASE("thm3 at m=5 drops the four phi states and the empty ranges") {
    StateSet s = locc::build_thm3({7, 5});
    CHECK(s.states.size() == 13);
    CHECK(s.find("phi_1") == nullptr);
    CHECK(s.find("phi_2") == nullptr);
    CHECK(s.find("phi_3") == nullptr);
    CHECK(s.find("phi_4") == nullptr);
    // psi_{i+2k} and varphi_{i+2k} ranges are empty at k=2
    CHECK(state(s, "psi_5").a.amps == amps({{6, 1}}));  // line psi_{i+2k-5} with i=6
    CHECK(state(s, "varphi_4").a.amps == amps({{5, 1}}));
    StateSet five = locc::build_thm3({5, 5});
    CHECK(five.states.size() == 9);
}

TEST_CASE("parity ranges partition the expected index window") {
    for (int n = 5; n <= 12; ++n) {
        StateSet s = locc::build_thm1({n, 4});
        // varphi_{i+5} for i = 1..n-5 all exist, with B factor |1> for odd i
        // and |2> for even i.
        for (int i = 1; i <= n - 5; ++i) {
            const auto& st = state(s, "varphi_" + std::to_string(i + 5));
            CHECK(st.a.amps == amps({{4 + i, 1}, {5 + i, 1}}));
            CHECK(st.b.amps == amps({{(i % 2 == 1) ? 1 : 2, 1}}));
        }
    }
    for (int l = 3; l <= 6; ++l) {
        for (int n = 2 * l; n <= 12; ++n) {
            StateSet s = locc::build_thm2({n, 2 * l});
            for (int i = 1; i <= n - l - 1; ++i) {
                const auto& st = state(s, "phi_" + std::to_string(i));
                CHECK(st.a.amps == amps({{l + i, 1}, {l + 1 + i, 1}}));
                CHECK(st.b.amps == amps({{(i % 2 == 1) ? l + 2 : l + 3, 1}}));
            }
        }
    }
}

TEST_CASE("parameter violations name the bound") {
    CHECK_THROWS_WITH_AS(locc::build_thm1({3, 4}), "thm1 family requires n >= m = 4",
                         locc::parameter_error);
    CHECK_THROWS_AS(locc::build_thm2({5, 6}), locc::parameter_error);
    CHECK_THROWS_AS(locc::build_thm2({8, 7}), locc::parameter_error);
    CHECK_THROWS_AS(locc::build_thm3({4, 5}), locc::parameter_error);
    CHECK_THROWS_AS(locc::build_thm3({8, 8}), locc::parameter_error);
    CHECK_THROWS_AS(locc::auto_family({3, 4}), locc::parameter_error);
    CHECK_THROWS_AS(locc::auto_family({5, 3}), locc::parameter_error);
    CHECK(locc::auto_family({4, 4}) == Family::thm1_n4);
    CHECK(locc::auto_family({9, 4}) == Family::thm1);
    CHECK(locc::auto_family({8, 6}) == Family::thm2);
    CHECK(locc::auto_family({9, 7}) == Family::thm3);
}
