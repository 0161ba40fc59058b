#include "locc/protocol.hpp"

#include <functional>
#include <map>
#include <set>

#include "json.hpp"
#include "locc/split.hpp"

namespace locc {

Rational JointState::squared_norm() const {
    Rational s;
    for (const auto& x : amps)
        if (!x.is_zero()) s += x * x;
    return s;
}

bool JointState::is_zero() const { return locc::is_zero(amps); }

Resource::Resource() : amp(2, 2) {
    amp.at(0, 0) = Rational(1);
    amp.at(1, 1) = Rational(1);
}

Resource::Resource(Mat amp2x2) : amp(std::move(amp2x2)) {
    if (amp.rows() != 2 || amp.cols() != 2) throw invalid_state("resource must be 2x2");
    if (schmidt_rank() != 2) throw invalid_state("resource must have Schmidt rank 2");
}

int Resource::schmidt_rank() const { return rank(amp); }

Mat product_ancilla_11() {
    Mat m(2, 2);
    m.at(0, 0) = Rational(1);
    return m;
}

JointState make_joint(const ProductState& st, int n, int m, const Mat& ancilla) {
    if (st.a.dim != n || st.b.dim != m) throw dimension_error("make_joint: dimension mismatch");
    JointState j;
    j.n = n;
    j.m = m;
    j.origin = st.label;
    j.amps.assign(static_cast<size_t>(n) * m * 4, Rational(0));
    for (const auto& [ia, ca] : st.a.amps)
        for (const auto& [ib, cb] : st.b.amps)
            for (int aa = 0; aa < 2; ++aa)
                for (int bb = 0; bb < 2; ++bb) {
                    const Rational& r = ancilla.at(aa, bb);
                    if (!r.is_zero())
                        j.amps[JointState::index(ia - 1, ib - 1, aa, bb, m)] = Rational(ca * cb) * r;
                }
    return j;
}

JointState apply_local(const LocalOp& op, const JointState& st) {
    const int n = st.n, m = st.m;
    JointState out;
    out.n = n;
    out.m = m;
    out.origin = st.origin;
    out.amps.assign(st.amps.size(), Rational(0));
    if (op.party == Party::A) {
        const int d = 2 * n;
        if (op.mat.rows() != d || op.mat.cols() != d) throw dimension_error("apply_local: A op shape");
        for (int b0 = 0; b0 < m; ++b0) {
            for (int banc = 0; banc < 2; ++banc) {
                Vec v(d);
                bool any = false;
                for (int anc = 0; anc < 2; ++anc)
                    for (int a0 = 0; a0 < n; ++a0) {
                        const Rational& x = st.amps[JointState::index(a0, b0, anc, banc, m)];
                        if (!x.is_zero()) any = true;
                        v[anc * n + a0] = x;
                    }
                if (!any) continue;
                Vec w = mat_vec(op.mat, v);
                for (int anc = 0; anc < 2; ++anc)
                    for (int a0 = 0; a0 < n; ++a0)
                        out.amps[JointState::index(a0, b0, anc, banc, m)] = w[anc * n + a0];
            }
        }
    } else {
        const int d = 2 * m;
        if (op.mat.rows() != d || op.mat.cols() != d) throw dimension_error("apply_local: B op shape");
        for (int a0 = 0; a0 < n; ++a0) {
            for (int aanc = 0; aanc < 2; ++aanc) {
                Vec v(d);
                bool any = false;
                for (int anc = 0; anc < 2; ++anc)
                    for (int b0 = 0; b0 < m; ++b0) {
                        const Rational& x = st.amps[JointState::index(a0, b0, aanc, anc, m)];
                        if (!x.is_zero()) any = true;
                        v[anc * m + b0] = x;
                    }
                if (!any) continue;
                Vec w = mat_vec(op.mat, v);
                for (int anc = 0; anc < 2; ++anc)
                    for (int b0 = 0; b0 < m; ++b0)
                        out.amps[JointState::index(a0, b0, aanc, anc, m)] = w[anc * m + b0];
            }
        }
    }
    return out;
}

Node Node::make_leaf(std::string label) {
    Node n;
    n.leaf = true;
    n.leaf_label = std::move(label);
    return n;
}

namespace {

void validate_node(const Node& node, int n, int m, const std::string& path) {
    if (node.leaf) return;
    if (node.outcomes.empty()) throw tree_invalid("node " + path + " has no outcomes");
    if (node.outcomes.size() != node.children.size())
        throw tree_invalid("node " + path + " outcome/child count mismatch");
    const int d = node.party == Party::A ? 2 * n : 2 * m;
    Mat sum(d, d);
    for (const auto& oc : node.outcomes) {
        if (oc.op.party != node.party) throw tree_invalid("node " + path + " outcome party mismatch");
        if (oc.op.mat.rows() != d || oc.op.mat.cols() != d)
            throw tree_invalid("node " + path + " outcome " + oc.label + " has wrong local dimension");
        if (oc.op.mat * oc.op.mat != oc.op.mat)
            throw tree_invalid("node " + path + " outcome " + oc.label + " is not idempotent");
        sum = sum + oc.op.mat;
    }
    for (size_t i = 0; i < node.outcomes.size(); ++i)
        for (size_t j = i + 1; j < node.outcomes.size(); ++j)
            if (!(node.outcomes[i].op.mat * node.outcomes[j].op.mat).is_zero())
                throw tree_invalid("node " + path + " outcomes " + node.outcomes[i].label + " and " +
                                   node.outcomes[j].label + " are not orthogonal");
    if (sum != Mat::identity(d))
        throw tree_invalid("node " + path + " outcomes do not sum to the identity");
    for (size_t i = 0; i < node.children.size(); ++i)
        validate_node(node.children[i], n, m, path + "/" + node.outcomes[i].label);
}

void descend(const Node& node, const JointState& st, const std::string& path,
             std::vector<LeafMass>& out, const Rational& norm0) {
    if (st.is_zero()) return;
    if (node.leaf) {
        out.push_back(LeafMass{path, node.leaf_label, st.squared_norm() / norm0});
        return;
    }
    for (size_t i = 0; i < node.outcomes.size(); ++i) {
        JointState next = apply_local(node.outcomes[i].op, st);
        descend(node.children[i], next, path + "/" + node.outcomes[i].label, out, norm0);
    }
}

RunReport run_impl(const ProtocolTree& t, const StateSet& s, const Mat& ancilla) {
    validate_tree(t);
    if (!verify_orthogonality(s).empty())
        throw precondition_error("run: input set is not mutually orthogonal");
    if (s.n != t.n || s.m != t.m) throw dimension_error("run: tree/set dimension mismatch");

    RunReport rep;
    std::map<std::string, std::set<std::string>> leaf_sources;
    for (const auto& st : s.states) {
        JointState j = make_joint(st, s.n, s.m, ancilla);
        Rational norm0 = j.squared_norm();
        StateRun sr;
        sr.label = st.label;
        descend(t.root, j, "", sr.leaves, norm0);
        Rational total, own;
        for (const auto& lm : sr.leaves) {
            total += lm.p;
            if (lm.leaf_label == st.label) own += lm.p;
            if (!lm.p.is_zero()) leaf_sources[lm.path].insert(st.label);
        }
        if (!(total == Rational(1)))
            throw tree_invalid("run: probability mass for " + st.label + " sums to " + total.str());
        sr.own_mass = own;
        sr.ok = own == Rational(1);
        rep.states.push_back(std::move(sr));
    }
    rep.perfect = true;
    for (const auto& sr : rep.states) {
        if (!sr.ok) {
            rep.perfect = false;
            if (rep.violation.empty())
                rep.violation = "state " + sr.label + " keeps only mass " + sr.own_mass.str() +
                                " on its own leaves";
        }
    }
    for (const auto& [path, sources] : leaf_sources) {
        if (sources.size() > 1) {
            rep.perfect = false;
            if (rep.violation.empty())
                rep.violation = "leaf " + path + " receives mass from " +
                                std::to_string(sources.size()) + " distinct inputs";
        }
    }
    return rep;
}

}  // namespace

void validate_tree(const ProtocolTree& t) { validate_node(t.root, t.n, t.m, "root"); }

RunReport run(const ProtocolTree& t, const StateSet& s) { return run_impl(t, s, Resource().amp); }

RunReport run_with_ancilla(const ProtocolTree& t, const StateSet& s, const Mat& ancilla) {
    return run_impl(t, s, ancilla);
}

// ---------------------------------------------------------------------------
// Tree builders
// ---------------------------------------------------------------------------

namespace {

struct Builder {
    int n;
    int m;

    int local_dim(Party p) const { return p == Party::A ? 2 * n : 2 * m; }
    int local_sys_dim(Party p) const { return p == Party::A ? n : m; }

    // |anc><anc| (x) sum_{i in idxs} |i><i|, 1-based system indices.
    Mat anc_block(Party p, int anc, const std::vector<int>& idxs) const {
        const int d = local_dim(p), sd = local_sys_dim(p);
        Mat mat(d, d);
        for (int i : idxs) mat.at(anc * sd + i - 1, anc * sd + i - 1) = Rational(1);
        return mat;
    }

    // |anc><anc| (x) |k><k| / <k|k> for an integer-amplitude ket k.
    Mat anc_ray(Party p, int anc, const Ket& k) const {
        const int d = local_dim(p), sd = local_sys_dim(p);
        Mat mat(d, d);
        int128 nrm = dot(k, k);
        for (const auto& [i, ci] : k.amps)
            for (const auto& [j, cj] : k.amps)
                mat.at(anc * sd + i - 1, anc * sd + j - 1) = Rational(checked_mul(ci, cj), nrm);
        return mat;
    }

    static std::vector<int> range(int lo, int hi) {  // inclusive, empty when lo > hi
        std::vector<int> v;
        for (int i = lo; i <= hi; ++i) v.push_back(i);
        return v;
    }

    Node measurement(Party party, std::vector<Outcome> outcomes,
                     const std::vector<SplitState>& incoming,
                     const std::vector<std::function<Node(const std::vector<SplitState>&)>>& special =
                         {}) const {
        const int d = local_dim(party);
        // Append the orthogonal-complement outcome when the named outcomes
        // do not already resolve the identity.
        Mat sum(d, d);
        for (const auto& oc : outcomes) sum = sum + oc.op.mat;
        Mat compl_mat = Mat::identity(d) - sum;
        if (!compl_mat.is_zero())
            outcomes.push_back(Outcome{outcomes.front().label + "c", LocalOp{party, compl_mat}});

        Node node;
        node.party = party;
        node.outcomes = std::move(outcomes);
        for (size_t i = 0; i < node.outcomes.size(); ++i) {
            std::vector<SplitState> branch;
            for (const auto& st : incoming) {
                SplitState next = apply_local_split(node.outcomes[i].op, st);
                if (!next.is_zero()) branch.push_back(std::move(next));
            }
            if (i < special.size() && special[i]) {
                node.children.push_back(special[i](branch));
            } else {
                node.children.push_back(finish(branch, party));
            }
        }
        return node;
    }

    Node finish(const std::vector<SplitState>& branch, Party last) const {
        if (branch.empty()) return Node::make_leaf("unreachable");
        if (branch.size() == 1) return Node::make_leaf(branch[0].origin);
        auto sub = refine_search(branch, last, n, m);
        if (!sub) {
            std::string who;
            for (const auto& st : branch) who += " " + st.origin;
            throw build_failure("no separating measurement sequence found for survivors:" + who);
        }
        return *sub;
    }
};

std::vector<SplitState> initial_splits(const StateSet& s, const Mat& ancilla) {
    std::vector<SplitState> out;
    for (const auto& st : s.states) out.push_back(split_of_joint(make_joint(st, s.n, s.m, ancilla)));
    return out;
}

}  // namespace

ProtocolTree build_thm4_tree(const FamilyParams& p) {
    StateSet fam = build_thm1(p);
    const int n = p.n;
    Builder bd{n, 4};
    auto inputs = initial_splits(fam, Resource().amp);

    ProtocolTree tree;
    tree.n = n;
    tree.m = 4;
    tree.theorem = 4;

    auto branch_under = [&](int sw, const std::vector<SplitState>& states) {
        auto a = [&](int anc) { return sw ? 1 - anc : anc; };
        // Bob's three named outcomes; the appended complement outcome is
        // reachable only by the stopper.
        std::vector<Outcome> bob;
        bob.push_back(Outcome{"B1", LocalOp{Party::B, bd.anc_ray(Party::B, a(0), Ket::super(4, {{2, 1}, {3, 1}}))}});
        bob.push_back(Outcome{"B2", LocalOp{Party::B, bd.anc_block(Party::B, a(1), {1, 2})}});
        bob.push_back(Outcome{"B3", LocalOp{Party::B, bd.anc_block(Party::B, a(0), {4}) +
                                                          bd.anc_block(Party::B, a(1), {3, 4})}});

        auto b2_child = [&](const std::vector<SplitState>& sv) {
            std::vector<Outcome> alice;
            alice.push_back(Outcome{"A21", LocalOp{Party::A, bd.anc_block(Party::A, a(1), {2})}});
            alice.push_back(
                Outcome{"A22", LocalOp{Party::A, bd.anc_block(Party::A, a(1), bd.range(3, n))}});
            return bd.measurement(Party::A, std::move(alice), sv);
        };
        auto b3_child = [&](const std::vector<SplitState>& sv) {
            std::vector<Outcome> alice;
            alice.push_back(Outcome{"A31", LocalOp{Party::A, bd.anc_block(Party::A, a(0), {1}) +
                                                                 bd.anc_block(Party::A, a(1), {2, 3})}});
            for (int i = 2; i <= n - 2; ++i)
                alice.push_back(Outcome{"A3" + std::to_string(i),
                                        LocalOp{Party::A, bd.anc_block(Party::A, a(1), {2 + i})}});
            return bd.measurement(Party::A, std::move(alice), sv);
        };
        return bd.measurement(Party::B, std::move(bob), states,
                              {nullptr, b2_child, b3_child, nullptr});
    };

    std::vector<Outcome> root;
    root.push_back(Outcome{"A1", LocalOp{Party::A, bd.anc_block(Party::A, 0, {1}) +
                                                       bd.anc_block(Party::A, 1, bd.range(2, n))}});
    root.push_back(Outcome{"A2", LocalOp{Party::A, bd.anc_block(Party::A, 1, {1}) +
                                                       bd.anc_block(Party::A, 0, bd.range(2, n))}});
    tree.root = bd.measurement(
        Party::A, std::move(root), inputs,
        {[&](const std::vector<SplitState>& sv) { return branch_under(0, sv); },
         [&](const std::vector<SplitState>& sv) { return branch_under(1, sv); }});
    return tree;
}

ProtocolTree build_thm5_tree(const FamilyParams& p) {
    StateSet fam = build_thm2(p);
    const int n = p.n, m = p.m, l = p.l();
    Builder bd{n, m};
    auto inputs = initial_splits(fam, Resource().amp);

    ProtocolTree tree;
    tree.n = n;
    tree.m = m;
    tree.theorem = 5;

    auto branch_under = [&](int sw, const std::vector<SplitState>& states) {
        auto a = [&](int anc) { return sw ? 1 - anc : anc; };
        std::vector<Outcome> bob;
        std::vector<std::function<Node(const std::vector<SplitState>&)>> special;
        for (int i = 1; i <= l - 2; ++i) {
            bob.push_back(Outcome{"B" + std::to_string(i),
                                  LocalOp{Party::B, bd.anc_block(Party::B, a(0), {i})}});
            special.push_back(nullptr);
        }
        bob.push_back(Outcome{"B" + std::to_string(l - 1),
                              LocalOp{Party::B, bd.anc_block(Party::B, a(0), bd.range(l, m))}});
        special.push_back([&](const std::vector<SplitState>& sv) {
            std::vector<Outcome> alice;
            for (int i = 1; i <= l - 3; ++i)
                alice.push_back(Outcome{"AL" + std::to_string(l - 1) + "_" + std::to_string(i),
                                        LocalOp{Party::A, bd.anc_block(Party::A, a(0), {i})}});
            // The rank-1 ray |(l-2)+(l-1)> would map two varphi survivors onto
            // nonorthogonal residues; the span projector onto {l-2, l-1} keeps
            // every survivor separable.
            alice.push_back(Outcome{"AL" + std::to_string(l - 1) + "_" + std::to_string(l - 2),
                                    LocalOp{Party::A, bd.anc_block(Party::A, a(0), {l - 2, l - 1})}});
            return bd.measurement(Party::A, std::move(alice), sv);
        });
        bob.push_back(Outcome{"B" + std::to_string(l),
                              LocalOp{Party::B, bd.anc_block(Party::B, a(0), {l - 1}) +
                                                    bd.anc_block(Party::B, a(1), bd.range(1, l + 1))}});
        special.push_back([&](const std::vector<SplitState>& sv) {
            std::vector<Outcome> alice;
            alice.push_back(Outcome{"AL" + std::to_string(l) + "_1",
                                    LocalOp{Party::A, bd.anc_block(Party::A, a(0), {l - 1}) +
                                                          bd.anc_block(Party::A, a(1), {l, l + 1, l + 2})}});
            for (int i = 2; i <= n - l - 1; ++i)
                alice.push_back(Outcome{"AL" + std::to_string(l) + "_" + std::to_string(i),
                                        LocalOp{Party::A, bd.anc_block(Party::A, a(1), {l + 1 + i})}});
            return bd.measurement(Party::A, std::move(alice), sv);
        });
        for (int i = 1; i <= m - l - 1; ++i) {
            bob.push_back(Outcome{"B" + std::to_string(l + i),
                                  LocalOp{Party::B, bd.anc_block(Party::B, a(1), {l + 1 + i})}});
            special.push_back(nullptr);
        }
        return bd.measurement(Party::B, std::move(bob), states, special);
    };

    std::vector<Outcome> root;
    // The second block runs through n so the two outcomes resolve the
    // identity on a x A.
    root.push_back(Outcome{"A1", LocalOp{Party::A, bd.anc_block(Party::A, 0, bd.range(1, l - 1)) +
                                                       bd.anc_block(Party::A, 1, bd.range(l, n))}});
    root.push_back(Outcome{"A2", LocalOp{Party::A, bd.anc_block(Party::A, 1, bd.range(1, l - 1)) +
                                                       bd.anc_block(Party::A, 0, bd.range(l, n))}});
    tree.root = bd.measurement(
        Party::A, std::move(root), inputs,
        {[&](const std::vector<SplitState>& sv) { return branch_under(0, sv); },
         [&](const std::vector<SplitState>& sv) { return branch_under(1, sv); }});
    return tree;
}

ProtocolTree build_thm6_tree(const FamilyParams& p) {
    StateSet fam = build_thm3(p);
    const int n = p.n, m = p.m, k = p.k();
    Builder bd{n, m};
    auto inputs = initial_splits(fam, Resource().amp);

    ProtocolTree tree;
    tree.n = n;
    tree.m = m;
    tree.theorem = 6;

    auto branch_under = [&](int sw, const std::vector<SplitState>& states) {
        auto a = [&](int anc) { return sw ? 1 - anc : anc; };
        std::vector<Outcome> alice;
        std::vector<std::function<Node(const std::vector<SplitState>&)>> special;
        alice.push_back(Outcome{"A1", LocalOp{Party::A, bd.anc_block(Party::A, a(0), {k + 3})}});
        alice.push_back(Outcome{"A2", LocalOp{Party::A, bd.anc_block(Party::A, a(1), {k - 1})}});
        alice.push_back(Outcome{"A3", LocalOp{Party::A, bd.anc_block(Party::A, a(0), {k + 2})}});
        special.assign(3, nullptr);
        for (int i = 1; i <= n - k - 3; ++i) {
            alice.push_back(Outcome{"A" + std::to_string(i + 3),
                                    LocalOp{Party::A, bd.anc_block(Party::A, a(0), {k + 3 + i})}});
            special.push_back(nullptr);
        }
        alice.push_back(Outcome{"A" + std::to_string(n - k + 1),
                                LocalOp{Party::A, bd.anc_block(Party::A, a(1), bd.range(k + 1, n))}});
        special.push_back(nullptr);
        std::vector<int> low = bd.range(1, k - 2);
        low.push_back(k);
        alice.push_back(Outcome{"A" + std::to_string(n - k + 2),
                                LocalOp{Party::A, bd.anc_block(Party::A, a(0), bd.range(1, k + 1)) +
                                                      bd.anc_block(Party::A, a(1), low)}});
        special.push_back([&](const std::vector<SplitState>& sv) {
            std::vector<Outcome> bob;
            for (int i = 1; i <= k; ++i)
                bob.push_back(Outcome{"BN" + std::to_string(i),
                                      LocalOp{Party::B, bd.anc_block(Party::B, a(0), {i})}});
            bob.push_back(Outcome{"BN" + std::to_string(k + 1),
                                  LocalOp{Party::B, bd.anc_block(Party::B, a(0), {k + 1}) +
                                                        bd.anc_block(Party::B, a(1), {k + 2})}});
            // Starts at k+3: BN(k+1) already covers |k+2> on the second
            // ancilla level, and outcomes must stay orthogonal.
            bob.push_back(Outcome{"BN" + std::to_string(k + 2),
                                  LocalOp{Party::B, bd.anc_block(Party::B, a(1), bd.range(k + 3, m))}});
            return bd.measurement(Party::B, std::move(bob), sv);
        });
        return bd.measurement(Party::A, std::move(alice), states, special);
    };

    std::vector<Outcome> root;
    root.push_back(Outcome{"B1", LocalOp{Party::B, bd.anc_block(Party::B, 0, bd.range(1, k + 1)) +
                                                       bd.anc_block(Party::B, 1, bd.range(k + 2, m))}});
    root.push_back(Outcome{"B2", LocalOp{Party::B, bd.anc_block(Party::B, 1, bd.range(1, k + 1)) +
                                                       bd.anc_block(Party::B, 0, bd.range(k + 2, m))}});
    tree.root = bd.measurement(
        Party::B, std::move(root), inputs,
        {[&](const std::vector<SplitState>& sv) { return branch_under(0, sv); },
         [&](const std::vector<SplitState>& sv) { return branch_under(1, sv); }});
    return tree;
}

ProtocolTree build_protocol_tree(const FamilyParams& p, int theorem) {
    switch (theorem) {
        case 4: return build_thm4_tree(p);
        case 5: return build_thm5_tree(p);
        case 6: return build_thm6_tree(p);
        default: throw parameter_error("theorem must be 4, 5 or 6");
    }
}

std::optional<Node> refine_leaf(const std::vector<JointState>& survivors, Party last_actor) {
    if (survivors.empty()) return Node::make_leaf("unreachable");
    std::vector<SplitState> split;
    for (const auto& st : survivors) {
        SplitState sp = split_of_joint(st);
        if (!sp.is_zero()) split.push_back(std::move(sp));
    }
    if (split.empty()) return Node::make_leaf("unreachable");
    if (split.size() == 1) return Node::make_leaf(split[0].origin);
    return refine_search(split, last_actor, survivors[0].n, survivors[0].m);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json mat_json(const Mat& mat) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < mat.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < mat.cols(); ++j) row.push_back(mat.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::ordered_json node_json(const Node& node) {
    nlohmann::ordered_json j;
    if (node.leaf) {
        j["leaf"] = node.leaf_label;
        return j;
    }
    j["party"] = party_name(node.party);
    j["outcomes"] = nlohmann::ordered_json::array();
    for (const auto& oc : node.outcomes)
        j["outcomes"].push_back({{"label", oc.label}, {"projector", mat_json(oc.op.mat)}});
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : node.children) j["children"].push_back(node_json(c));
    return j;
}

}  // namespace

std::string tree_to_json(const ProtocolTree& t) {
    nlohmann::ordered_json j;
    j["n"] = t.n;
    j["m"] = t.m;
    j["theorem"] = t.theorem;
    j["root"] = node_json(t.root);
    return j.dump(2) + "\n";
}

std::string report_to_json(const RunReport& r, const ProtocolTree& t) {
    nlohmann::ordered_json j;
    j["n"] = t.n;
    j["m"] = t.m;
    j["theorem"] = t.theorem;
    j["perfect"] = r.perfect;
    if (!r.perfect) j["violation"] = r.violation;
    j["states"] = nlohmann::ordered_json::array();
    for (const auto& sr : r.states) {
        nlohmann::ordered_json e;
        e["label"] = sr.label;
        e["ok"] = sr.ok;
        e["own_mass"] = sr.own_mass.str();
        e["leaves"] = nlohmann::ordered_json::array();
        for (const auto& lm : sr.leaves)
            if (!lm.p.is_zero())
                e["leaves"].push_back({{"path", lm.path}, {"label", lm.leaf_label}, {"p", lm.p.str()}});
        j["states"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

}  // namespace locc
