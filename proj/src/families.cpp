#include "locc/families.hpp"

namespace locc {

std::string family_name(Family f) {
    switch (f) {
        case Family::thm1: return "thm1";
        case Family::thm1_n4: return "thm1_n4";
        case Family::thm2: return "thm2";
        case Family::thm3: return "thm3";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "thm1") return Family::thm1;
    if (name == "thm1_n4") return Family::thm1_n4;
    if (name == "thm2") return Family::thm2;
    if (name == "thm3") return Family::thm3;
    throw parameter_error("unknown family \"" + name + "\" (expected thm1, thm1_n4, thm2 or thm3)");
}

Family auto_family(const FamilyParams& p) {
    if (p.m < 4) throw parameter_error("no construction for m < 4 (need m >= 4)");
    if (p.n < p.m) throw parameter_error("no construction for n < m (need n >= m)");
    if (p.m == 4) return p.n == 4 ? Family::thm1_n4 : Family::thm1;
    if (p.m % 2 == 0) return Family::thm2;
    return Family::thm3;
}

namespace {

ProductState ps(std::string label, Ket a, Ket b) {
    return ProductState{std::move(label), std::move(a), std::move(b)};
}

std::string idx_label(const char* stem, int i) { return std::string(stem) + "_" + std::to_string(i); }

}  // namespace

StateSet build_thm1(const FamilyParams& p) {
    const int n = p.n;
    if (p.m != 4) throw parameter_error("thm1 family requires m = 4");
    if (n < 4) throw parameter_error("thm1 family requires n >= m = 4");

    StateSet s{n, 4, n == 4 ? "thm1_n4" : "thm1", {}};
    auto A = [&](int i) { return Ket::basis(n, i); };
    auto A2 = [&](int i, int j) { return Ket::super(n, {{i, 1}, {j, 1}}); };
    auto B = [&](int i) { return Ket::basis(4, i); };
    auto B2 = [&](int i, int j) { return Ket::super(4, {{i, 1}, {j, 1}}); };

    s.states.push_back(ps("phi", Ket::alternating(n), Ket::alternating(4)));
    s.states.push_back(ps("varphi_1", A(1), B2(2, 3)));
    s.states.push_back(ps("varphi_2", A2(2, 3), B(3)));
    s.states.push_back(ps("varphi_3", A2(1, 2), B(4)));
    s.states.push_back(ps("varphi_4", A(2), B2(1, 2)));
    s.states.push_back(ps("varphi_5", A2(3, 4), B(1)));

    if (n == 4) {
        s.states.push_back(ps("varphi_6", A(4), B2(3, 4)));
        s.states.push_back(ps("varphi_7", A2(3, 4), B(2)));
        return s;
    }

    const int odd_hi = 2 * ((n - 4) / 2) - 1;
    const int even_hi = 2 * ((n - 3) / 2) - 2;  // 2*ceil((n-4)/2) - 2
    for (int i = 1; i <= n - 5; ++i) {
        if (i % 2 == 1 && i <= odd_hi)
            s.states.push_back(ps(idx_label("varphi", i + 5), A2(4 + i, 5 + i), B(1)));
        else if (i % 2 == 0 && i <= even_hi)
            s.states.push_back(ps(idx_label("varphi", i + 5), A2(4 + i, 5 + i), B(2)));
    }
    s.states.push_back(ps(idx_label("varphi", n + 1), Ket::super(n, {{3, 1}, {5, -1}}), B(2)));
    for (int i = 0; i <= n - 4; ++i)
        s.states.push_back(ps(idx_label("varphi", i + n + 2), A(4 + i), B2(3, 4)));
    return s;
}

StateSet build_thm2(const FamilyParams& p) {
    const int n = p.n, m = p.m, l = p.l();
    if (m % 2 != 0 || m < 6) throw parameter_error("thm2 family requires even m = 2l with 2l > 4");
    if (n < m) throw parameter_error("thm2 family requires n >= 2l");

    StateSet s{n, m, "thm2", {}};
    auto A = [&](int i) { return Ket::basis(n, i); };
    auto A2 = [&](int i, int j) { return Ket::super(n, {{i, 1}, {j, 1}}); };
    auto B = [&](int i) { return Ket::basis(m, i); };
    auto B2 = [&](int i, int j) { return Ket::super(m, {{i, 1}, {j, 1}}); };

    s.states.push_back(ps("phi", Ket::alternating(n), Ket::alternating(m)));
    for (int i = 1; i <= l - 1; ++i) s.states.push_back(ps(idx_label("psi", i), A2(i, i + 1), B(i)));
    s.states.push_back(ps(idx_label("psi", l), A2(l - 2, l - 1), B(l)));
    for (int i = 1; i <= l - 3; ++i)
        s.states.push_back(ps(idx_label("psi", i + l), A(i), B2(l, l + 1)));
    for (int i = 1; i <= l - 3; ++i)
        s.states.push_back(ps(idx_label("psi", i + 2 * l - 3), A(l + 3 + i), B2(l, l + 1)));
    s.states.push_back(ps(idx_label("psi", 3 * l - 5), A(l), B2(l, l + 1)));
    s.states.push_back(ps(idx_label("psi", 3 * l - 4), A(l + 2), B2(l - 1, l)));
    s.states.push_back(ps(idx_label("psi", 3 * l - 3), A(l + 1), B2(l - 1, l)));
    for (int i = 1; i <= n - 2 * l; ++i)
        s.states.push_back(ps(idx_label("psi", i + 3 * l - 3), A(2 * l + i), B2(l, l + 1)));

    for (int i = 1; i <= l - 1; ++i)
        s.states.push_back(ps(idx_label("varphi", i), A(i), B2(2 * l - i, 2 * l + 1 - i)));
    for (int i = 1; i <= l - 2; ++i)
        s.states.push_back(ps(idx_label("varphi", i + l - 1), A(2 * l + 1 - i), B2(i, i + 1)));
    s.states.push_back(ps(idx_label("varphi", 2 * l - 2), A2(l + 1, l + 2), B(l + 1)));
    // B factor |l+(l+1)> here; with |1+(l+1)> the set is not mutually
    // orthogonal (collides with varphi_l when l = 3 and with the stopper when
    // l is even), and the diagonal-chain derivation needs the overlap at l.
    s.states.push_back(ps(idx_label("varphi", 2 * l - 1), A(l + 3), B2(l, l + 1)));
    for (int i = 1; i <= l - 2; ++i)
        s.states.push_back(ps(idx_label("varphi", i + 2 * l - 1), A2(l, l + 1), B(i)));
    for (int i = 1; i <= l - 2; ++i)
        s.states.push_back(ps(idx_label("varphi", i + 3 * l - 3), A2(l, l + 1), B(l + 2 + i)));

    const int odd_hi = 2 * ((n - l) / 2) - 1;
    const int even_hi = 2 * ((n - l + 1) / 2) - 2;  // 2*ceil((n-l)/2) - 2
    for (int i = 1; i <= n - l - 1; ++i) {
        if (i % 2 == 1 && i <= odd_hi)
            s.states.push_back(ps(idx_label("phi", i), A2(l + i, l + 1 + i), B(l + 2)));
        else if (i % 2 == 0 && i <= even_hi)
            s.states.push_back(ps(idx_label("phi", i), A2(l + i, l + 1 + i), B(l + 3)));
    }
    return s;
}

StateSet build_thm3(const FamilyParams& p) {
    const int n = p.n, m = p.m, k = p.k();
    if (m % 2 != 1 || m < 5) throw parameter_error("thm3 family requires odd m = 2k+1 with 2k+1 >= 5");
    if (n < m) throw parameter_error("thm3 family requires n >= 2k+1");

    StateSet s{n, m, "thm3", {}};
    auto A = [&](int i) { return Ket::basis(n, i); };
    auto A2 = [&](int i, int j) { return Ket::super(n, {{i, 1}, {j, 1}}); };
    auto B = [&](int i) { return Ket::basis(m, i); };
    auto B2 = [&](int i, int j) { return Ket::super(m, {{i, 1}, {j, 1}}); };

    s.states.push_back(ps("phi", Ket::alternating(n), Ket::alternating(m)));
    if (k >= 3) {
        // For k = 2 these four states have out-of-range indices (k-2 = 0,
        // k+4 = 6 > m) or duplicate a phi_{i+5} state; the m = 5 count
        // 2(n-m)+9 excludes them.
        s.states.push_back(ps("phi_1", A2(k - 2, k - 1), B(k)));
        s.states.push_back(ps("phi_2", A2(k + 3, k + 4), B(k + 2)));
        s.states.push_back(ps("phi_3", A(k), B2(k + 3, k + 4)));
        s.states.push_back(ps("phi_4", A(k + 2), B2(k - 2, k - 1)));
    }
    for (int i = 1; i <= k; ++i) s.states.push_back(ps(idx_label("psi", i), A2(i, i + 1), B(i)));
    for (int i = k + 1; i <= 2 * k; ++i)
        s.states.push_back(ps(idx_label("psi", i), A2(i, i + 1), B(i + 1)));
    for (int i = 1; i <= k - 2; ++i)
        s.states.push_back(ps(idx_label("psi", i + 2 * k), A(i), B2(k + 1, k + 2)));
    for (int i = k + 4; i <= n; ++i)
        s.states.push_back(ps(idx_label("psi", i + 2 * k - 5), A(i), B2(k, k + 1)));

    for (int i = 1; i <= k; ++i)
        s.states.push_back(ps(idx_label("varphi", i), A(i), B2(2 * k + 1 - i, 2 * k + 2 - i)));
    for (int i = k + 1; i <= 2 * k; ++i)
        s.states.push_back(ps(idx_label("varphi", i), A(i + 1), B2(2 * k + 1 - i, 2 * k + 2 - i)));
    for (int i = 1; i <= k - 2; ++i)
        s.states.push_back(ps(idx_label("varphi", i + 2 * k), A2(k, k + 1), B(i)));
    for (int i = k + 4; i <= 2 * k + 1; ++i)
        s.states.push_back(ps(idx_label("varphi", i + 2 * k - 5), A2(k + 1, k + 2), B(i)));

    const int odd_hi = 2 * ((n - m + 1) / 2) - 1;   // 2*ceil((n-m)/2) - 1
    const int even_hi = 2 * ((n - m) / 2) - 2;      // 2*floor((n-m)/2) - 2
    for (int i = 0; i <= odd_hi; ++i) {
        if (i % 2 == 1 && i <= odd_hi)
            s.states.push_back(ps(idx_label("phi", i + 5), A2(2 * k + i, 2 * k + 1 + i), B(2 * k)));
        else if (i % 2 == 0 && i <= even_hi)
            s.states.push_back(ps(idx_label("phi", i + 5), A2(2 * k + 2 + i, 2 * k + 3 + i), B(2 * k + 1)));
    }
    return s;
}

StateSet build_family(const FamilyParams& p, Family f) {
    switch (f) {
        case Family::thm1:
            if (p.n == 4) throw parameter_error("thm1 family requires n > 4 (n = 4 is the thm1_n4 variant)");
            return build_thm1(p);
        case Family::thm1_n4:
            if (p.n != 4 || p.m != 4) throw parameter_error("thm1_n4 variant requires n = m = 4");
            return build_thm1(p);
        case Family::thm2: return build_thm2(p);
        case Family::thm3: return build_thm3(p);
    }
    throw parameter_error("unknown family");
}

long expected_count(const FamilyParams& p, Family f) {
    switch (f) {
        case Family::thm1:
            if (p.m != 4 || p.n <= 4) throw parameter_error("thm1 count requires m = 4, n > 4");
            return 2L * p.n - 1;
        case Family::thm1_n4:
            if (p.m != 4 || p.n != 4) throw parameter_error("thm1_n4 count requires n = m = 4");
            return 8;
        case Family::thm2:
            if (p.m % 2 != 0 || p.m < 6 || p.n < p.m) throw parameter_error("thm2 count requires n >= 2l > 4");
            return 2L * (p.n + p.m) - 8;
        case Family::thm3:
            if (p.m % 2 != 1 || p.m < 5 || p.n < p.m) throw parameter_error("thm3 count requires n >= 2k+1 >= 5");
            return p.m == 5 ? 2L * (p.n - p.m) + 9 : 2L * (p.n + p.m) - 7;
    }
    throw parameter_error("unknown family");
}

}  // namespace locc
