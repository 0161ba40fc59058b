#include <algorithm>
#include <set>
#include <unordered_set>

#include "locc/split.hpp"

namespace locc {

namespace {

Vec canonical_ray(const Vec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            Vec r(v.size());
            Rational inv = Rational(1) / x;
            for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * inv;
            return r;
        }
    }
    return v;
}

void merge_parallel(std::vector<Component>& comps) {
    auto first_nonzero = [](const Vec& v) -> int {
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return static_cast<int>(i);
        return -1;
    };
    auto drop_zero = [&]() {
        comps.erase(std::remove_if(comps.begin(), comps.end(),
                                   [](const Component& c) { return is_zero(c.a) || is_zero(c.b); }),
                    comps.end());
    };
    drop_zero();
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < comps.size() && !merged; ++i) {
            for (size_t j = i + 1; j < comps.size() && !merged; ++j) {
                int fi = first_nonzero(comps[i].a), fj = first_nonzero(comps[j].a);
                if (fi == fj && fi >= 0) {
                    Rational c = comps[j].a[fi] / comps[i].a[fi];
                    if (scale(comps[i].a, c) == comps[j].a) {
                        comps[i].b = add(comps[i].b, scale(comps[j].b, c));
                        comps.erase(comps.begin() + static_cast<long>(j));
                        merged = true;
                        break;
                    }
                }
                fi = first_nonzero(comps[i].b);
                fj = first_nonzero(comps[j].b);
                if (fi == fj && fi >= 0) {
                    Rational c = comps[j].b[fi] / comps[i].b[fi];
                    if (scale(comps[i].b, c) == comps[j].b) {
                        comps[i].a = add(comps[i].a, scale(comps[j].a, c));
                        comps.erase(comps.begin() + static_cast<long>(j));
                        merged = true;
                        break;
                    }
                }
            }
        }
        drop_zero();
    }
}

}  // namespace

SplitState split_of_joint(const JointState& st) {
    const int n = st.n, m = st.m;
    const int ra = 2 * n, rb = 2 * m;
    // Matrix across the aA | bB cut.
    std::vector<Vec> mrows(ra, Vec(rb));
    for (int anc_a = 0; anc_a < 2; ++anc_a)
        for (int a0 = 0; a0 < n; ++a0)
            for (int anc_b = 0; anc_b < 2; ++anc_b)
                for (int b0 = 0; b0 < m; ++b0)
                    mrows[anc_a * n + a0][anc_b * m + b0] =
                        st.amps[JointState::index(a0, b0, anc_a, anc_b, m)];

    SplitState out;
    out.origin = st.origin;
    out.n = n;
    out.m = m;
    // Greedy outer-product peeling; terminates after rank(M) rounds.
    while (true) {
        int pr = -1, pc = -1;
        for (int i = 0; i < ra && pr < 0; ++i)
            for (int j = 0; j < rb; ++j)
                if (!mrows[i][j].is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        Component c;
        c.a.assign(ra, Rational(0));
        c.b = mrows[pr];
        Rational inv = Rational(1) / mrows[pr][pc];
        for (int i = 0; i < ra; ++i) c.a[i] = mrows[i][pc] * inv;
        for (int i = 0; i < ra; ++i) {
            if (c.a[i].is_zero()) continue;
            for (int j = 0; j < rb; ++j)
                if (!c.b[j].is_zero()) mrows[i][j] -= c.a[i] * c.b[j];
        }
        out.comps.push_back(std::move(c));
    }
    return out;
}

JointState joint_of_split(const SplitState& st) {
    JointState j;
    j.n = st.n;
    j.m = st.m;
    j.origin = st.origin;
    j.amps.assign(static_cast<size_t>(st.n) * st.m * 4, Rational(0));
    for (const auto& c : st.comps)
        for (int anc_a = 0; anc_a < 2; ++anc_a)
            for (int a0 = 0; a0 < st.n; ++a0) {
                const Rational& av = c.a[anc_a * st.n + a0];
                if (av.is_zero()) continue;
                for (int anc_b = 0; anc_b < 2; ++anc_b)
                    for (int b0 = 0; b0 < st.m; ++b0) {
                        const Rational& bv = c.b[anc_b * st.m + b0];
                        if (!bv.is_zero())
                            j.amps[JointState::index(a0, b0, anc_a, anc_b, st.m)] += av * bv;
                    }
            }
    return j;
}

Rational split_inner(const SplitState& x, const SplitState& y) {
    Rational s;
    for (const auto& cx : x.comps)
        for (const auto& cy : y.comps) {
            Rational da = dot(cx.a, cy.a);
            if (!da.is_zero()) s += da * dot(cx.b, cy.b);
        }
    return s;
}

SplitState apply_local_split(const LocalOp& op, const SplitState& st) {
    SplitState out;
    out.origin = st.origin;
    out.n = st.n;
    out.m = st.m;
    for (const auto& c : st.comps) {
        Component nc;
        if (op.party == Party::A) {
            nc.a = mat_vec(op.mat, c.a);
            nc.b = c.b;
        } else {
            nc.a = c.a;
            nc.b = mat_vec(op.mat, c.b);
        }
        out.comps.push_back(std::move(nc));
    }
    merge_parallel(out.comps);
    return out;
}

std::string split_fingerprint(const SplitState& st) {
    JointState j = joint_of_split(st);
    Rational scale_inv;
    bool found = false;
    std::string s;
    for (size_t i = 0; i < j.amps.size(); ++i) {
        if (j.amps[i].is_zero()) continue;
        if (!found) {
            scale_inv = Rational(1) / j.amps[i];
            found = true;
        }
        s += std::to_string(i) + ":" + (j.amps[i] * scale_inv).str() + ";";
    }
    return s;
}

namespace {

// A projector candidate: orthogonal subspaces W_1..W_t on one party's local
// space; the induced measurement is {P_{W_1}, ..., P_{W_t}, complement}.
struct Span {
    std::vector<Vec> gens;
    std::vector<Vec> ortho;  // Gram-Schmidt basis of gens, unnormalized
};

Span make_span(const std::vector<Vec>& gens) {
    Span sp;
    sp.gens = gens;
    for (const Vec& g : gens) {
        Vec r = g;
        for (const Vec& o : sp.ortho) {
            Rational c = dot(o, r) / dot(o, o);
            if (!c.is_zero()) r = sub(r, scale(o, c));
        }
        if (!is_zero(r)) sp.ortho.push_back(std::move(r));
    }
    return sp;
}

Vec project(const Span& sp, const Vec& v) {
    Vec p(v.size());
    for (const Vec& o : sp.ortho) {
        Rational c = dot(o, v) / dot(o, o);
        if (!c.is_zero()) p = add(p, scale(o, c));
    }
    return p;
}

struct Move {
    Party party = Party::A;
    std::vector<Span> spans;
};

struct Searcher {
    int n;
    int m;
    long budget = 400000;
    std::unordered_set<std::string> failed;

    int local_dim(Party p) const { return p == Party::A ? 2 * n : 2 * m; }
    int sys_dim(Party p) const { return p == Party::A ? n : m; }

    std::string key_of(const std::vector<SplitState>& sv) const {
        std::vector<std::string> fps;
        for (const auto& st : sv) fps.push_back(split_fingerprint(st));
        std::sort(fps.begin(), fps.end());
        std::string k;
        for (auto& f : fps) k += f + "|";
        return k;
    }

    std::vector<Move> gen_moves(const std::vector<SplitState>& sv, Party last) const {
        std::vector<Move> moves;
        Party order[2] = {other(last), last};
        for (Party p : order) {
            const int d = local_dim(p), sd = sys_dim(p);
            // Distinct component rays on this side, in discovery order.
            std::vector<Vec> rays;
            auto add_ray = [&](const Vec& v) {
                Vec c = canonical_ray(v);
                for (const auto& r : rays)
                    if (r == c) return;
                rays.push_back(std::move(c));
            };
            for (const auto& st : sv)
                for (const auto& comp : st.comps) add_ray(p == Party::A ? comp.a : comp.b);

            // k-way rotated split on pairwise orthogonal product factors.
            {
                bool all_product = true;
                for (const auto& st : sv)
                    if (st.comps.size() != 1) all_product = false;
                if (all_product && rays.size() >= 2) {
                    bool orth = true;
                    for (size_t i = 0; i < rays.size() && orth; ++i)
                        for (size_t j = i + 1; j < rays.size() && orth; ++j)
                            if (!dot(rays[i], rays[j]).is_zero()) orth = false;
                    if (orth) {
                        Move mv{p, {}};
                        for (const auto& r : rays) mv.spans.push_back(make_span({r}));
                        moves.push_back(std::move(mv));
                    }
                }
            }

            // Ancilla-level slice.
            {
                std::vector<Vec> gens;
                for (int i = 0; i < sd; ++i) {
                    Vec e(d);
                    e[i] = Rational(1);
                    gens.push_back(std::move(e));
                }
                moves.push_back(Move{p, {make_span(gens)}});
            }

            // Structured local-index sets: singletons, component supports and
            // small unions of supports.
            std::vector<std::set<int>> tsets;
            auto add_t = [&](const std::set<int>& t) {
                if (t.empty()) return;
                if (std::find(tsets.begin(), tsets.end(), t) == tsets.end()) tsets.push_back(t);
            };
            std::vector<std::set<int>> supports;
            std::set<int> occupied;
            for (const auto& r : rays) {
                std::set<int> sup;
                for (int anc = 0; anc < 2; ++anc)
                    for (int i = 0; i < sd; ++i)
                        if (!r[anc * sd + i].is_zero()) {
                            sup.insert(i);
                            occupied.insert(i);
                        }
                supports.push_back(std::move(sup));
            }
            for (int i : occupied) add_t({i});
            for (const auto& sup : supports) add_t(sup);
            for (size_t i = 0; i < supports.size(); ++i)
                for (size_t j = i + 1; j < supports.size(); ++j) {
                    std::set<int> u = supports[i];
                    u.insert(supports[j].begin(), supports[j].end());
                    add_t(u);
                    for (size_t k2 = j + 1; k2 < supports.size(); ++k2) {
                        std::set<int> u3 = u;
                        u3.insert(supports[k2].begin(), supports[k2].end());
                        add_t(u3);
                    }
                }
            std::stable_sort(tsets.begin(), tsets.end(),
                             [](const std::set<int>& a, const std::set<int>& b) {
                                 if (a.size() != b.size()) return a.size() < b.size();
                                 return a < b;
                             });
            if (tsets.size() > 80) tsets.resize(80);
            auto basis_vec = [&](int anc, int i) {
                Vec e(d);
                e[anc * sd + i] = Rational(1);
                return e;
            };
            for (const auto& t : tsets) {
                for (int anc = 0; anc < 2; ++anc) {
                    std::vector<Vec> gens;
                    for (int i : t) gens.push_back(basis_vec(anc, i));
                    moves.push_back(Move{p, {make_span(gens)}});
                }
                std::vector<Vec> gens;
                for (int i : t) {
                    gens.push_back(basis_vec(0, i));
                    gens.push_back(basis_vec(1, i));
                }
                moves.push_back(Move{p, {make_span(gens)}});
            }

            // Subsets of component rays (sizes 1..3).
            const size_t R = rays.size();
            for (size_t i = 0; i < R; ++i) moves.push_back(Move{p, {make_span({rays[i]})}});
            for (size_t i = 0; i < R; ++i)
                for (size_t j = i + 1; j < R; ++j)
                    moves.push_back(Move{p, {make_span({rays[i], rays[j]})}});
            for (size_t i = 0; i < R; ++i)
                for (size_t j = i + 1; j < R; ++j)
                    for (size_t k2 = j + 1; k2 < R; ++k2)
                        moves.push_back(Move{p, {make_span({rays[i], rays[j], rays[k2]})}});

            // Gram-Schmidt residual rays.
            for (size_t i = 0; i < R; ++i)
                for (size_t j = 0; j < R; ++j) {
                    if (i == j) continue;
                    Rational ov = dot(rays[j], rays[i]);
                    if (ov.is_zero()) continue;
                    Vec w = sub(rays[i], scale(rays[j], ov / dot(rays[j], rays[j])));
                    if (!is_zero(w)) moves.push_back(Move{p, {make_span({w})}});
                }

            // Interference pairs: equal-norm orthogonal rays u, v give the
            // projective pair {P[u+v], P[u-v]}.
            for (size_t i = 0; i < R; ++i)
                for (size_t j = i + 1; j < R; ++j) {
                    if (!dot(rays[i], rays[j]).is_zero()) continue;
                    if (!(dot(rays[i], rays[i]) == dot(rays[j], rays[j]))) continue;
                    Vec plus = add(rays[i], rays[j]);
                    Vec minus = sub(rays[i], rays[j]);
                    moves.push_back(Move{p, {make_span({plus}), make_span({minus})}});
                }
        }
        return moves;
    }

    // Applies move to survivors; returns branch survivor sets (one per span
    // plus the complement) or nullopt when the move is invalid.
    std::optional<std::vector<std::vector<SplitState>>> eval_move(
        const Move& mv, const std::vector<SplitState>& sv, bool* clean) const {
        const size_t t = mv.spans.size();
        std::vector<std::vector<SplitState>> branches(t + 1);
        *clean = true;
        for (const auto& st : sv) {
            std::vector<SplitState> parts(t + 1);
            for (auto& p2 : parts) {
                p2.origin = st.origin;
                p2.n = st.n;
                p2.m = st.m;
            }
            for (const auto& comp : st.comps) {
                const Vec& side = mv.party == Party::A ? comp.a : comp.b;
                Vec rem = side;
                for (size_t si = 0; si < t; ++si) {
                    Vec pr = project(mv.spans[si], side);
                    if (!is_zero(pr)) {
                        Component nc;
                        if (mv.party == Party::A) {
                            nc.a = pr;
                            nc.b = comp.b;
                        } else {
                            nc.a = comp.a;
                            nc.b = pr;
                        }
                        parts[si].comps.push_back(std::move(nc));
                        rem = sub(rem, pr);
                    }
                }
                if (!is_zero(rem)) {
                    Component nc;
                    if (mv.party == Party::A) {
                        nc.a = rem;
                        nc.b = comp.b;
                    } else {
                        nc.a = comp.a;
                        nc.b = rem;
                    }
                    parts[t].comps.push_back(std::move(nc));
                }
            }
            int where = -1;
            int live = 0;
            for (size_t bi = 0; bi <= t; ++bi) {
                merge_parallel(parts[bi].comps);
                if (!parts[bi].is_zero()) {
                    ++live;
                    where = static_cast<int>(bi);
                    branches[bi].push_back(parts[bi]);
                }
            }
            if (live == 0) return std::nullopt;  // projector annihilated a state entirely
            if (live > 1) *clean = false;
            (void)where;
        }
        int nonempty = 0;
        for (const auto& b : branches)
            if (!b.empty()) ++nonempty;
        if (nonempty < 2) return std::nullopt;
        for (const auto& b : branches)
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = i + 1; j < b.size(); ++j)
                    if (!split_inner(b[i], b[j]).is_zero()) return std::nullopt;
        return branches;
    }

    Node emit_node(const Move& mv, std::vector<Node> children_for_spans, Node complement_child) const {
        const int d = local_dim(mv.party);
        Node node;
        node.party = mv.party;
        Mat sum(d, d);
        for (size_t i = 0; i < mv.spans.size(); ++i) {
            Mat p = projector_onto(mv.spans[i].ortho);
            sum = sum + p;
            node.outcomes.push_back(Outcome{
                std::string(mv.party == Party::A ? "a" : "b") + "x" + std::to_string(i + 1),
                LocalOp{mv.party, std::move(p)}});
            node.children.push_back(std::move(children_for_spans[i]));
        }
        Mat compl_mat = Mat::identity(d) - sum;
        if (!compl_mat.is_zero()) {
            node.outcomes.push_back(Outcome{
                std::string(mv.party == Party::A ? "a" : "b") + "xc", LocalOp{mv.party, compl_mat}});
            node.children.push_back(std::move(complement_child));
        }
        return node;
    }

    std::optional<Node> solve(const std::vector<SplitState>& sv, Party last, int depth) {
        if (sv.empty()) return Node::make_leaf("unreachable");
        if (sv.size() == 1) return Node::make_leaf(sv[0].origin);
        if (depth > 24 || budget <= 0) return std::nullopt;
        for (size_t i = 0; i < sv.size(); ++i)
            for (size_t j = i + 1; j < sv.size(); ++j)
                if (!split_inner(sv[i], sv[j]).is_zero()) return std::nullopt;
        std::string key = key_of(sv);
        if (failed.count(key)) return std::nullopt;

        std::vector<Move> moves = gen_moves(sv, last);
        struct Cand {
            const Move* mv;
            std::vector<std::vector<SplitState>> branches;
            bool clean;
        };
        std::vector<Cand> clean_cands, split_cands;
        for (const auto& mv : moves) {
            if (--budget <= 0) break;
            bool clean = false;
            auto br = eval_move(mv, sv, &clean);
            if (!br) continue;
            Cand c{&mv, std::move(*br), clean};
            (clean ? clean_cands : split_cands).push_back(std::move(c));
        }
        auto try_cands = [&](std::vector<Cand>& cands) -> std::optional<Node> {
            for (auto& c : cands) {
                std::vector<Node> children;
                bool ok = true;
                for (size_t bi = 0; bi < c.mv->spans.size(); ++bi) {
                    auto child = solve(c.branches[bi], c.mv->party, depth + 1);
                    if (!child) {
                        ok = false;
                        break;
                    }
                    children.push_back(std::move(*child));
                }
                if (!ok) continue;
                auto compl_child = solve(c.branches.back(), c.mv->party, depth + 1);
                if (!compl_child) continue;
                return emit_node(*c.mv, std::move(children), std::move(*compl_child));
            }
            return std::nullopt;
        };
        if (auto r = try_cands(clean_cands)) return r;
        if (auto r = try_cands(split_cands)) return r;
        if (budget > 0) failed.insert(key);
        return std::nullopt;
    }
};

}  // namespace

std::optional<Node> refine_search(std::vector<SplitState> survivors, Party last_actor, int n, int m) {
    std::stable_sort(survivors.begin(), survivors.end(),
                     [](const SplitState& a, const SplitState& b) { return a.origin < b.origin; });
    Searcher s{n, m, 400000, {}};
    return s.solve(survivors, last_actor, 0);
}

}  // namespace locc
