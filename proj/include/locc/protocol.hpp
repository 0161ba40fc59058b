#ifndef LOCC_PROTOCOL_HPP
#define LOCC_PROTOCOL_HPP

#include <optional>
#include <string>
#include <vector>

#include "locc/certify.hpp"
#include "locc/families.hpp"
#include "locc/linalg.hpp"
#include "locc/states.hpp"

namespace locc {

struct tree_invalid : std::logic_error {
    explicit tree_invalid(const std::string& what) : std::logic_error(what) {}
};

struct build_failure : std::runtime_error {
    explicit build_failure(const std::string& what) : std::runtime_error(what) {}
};

// Unnormalized exact state of system x ancilla, A(n) x B(m) x a(2) x b(2),
// stored dense with basis order (A, B, a, b) lexicographic.
struct JointState {
    int n = 0;
    int m = 0;
    std::string origin;  // label of the input ProductState it descends from
    Vec amps;            // length n*m*4

    static size_t index(int a_sys, int b_sys, int a_anc, int b_anc, int m) {
        return ((static_cast<size_t>(a_sys) * m + b_sys) * 2 + a_anc) * 2 + b_anc;
    }
    Rational squared_norm() const;
    bool is_zero() const;
};

// The one entangled resource: ancilla pair state on C^2 x C^2, |11>+|22>
// unnormalized. Schmidt rank 2 by construction.
struct Resource {
    Mat amp;  // 2x2, amp(a_anc, b_anc)

    Resource();
    explicit Resource(Mat amp2x2);
    int schmidt_rank() const;
};

// Ancilla state used when deliberately running without entanglement.
Mat product_ancilla_11();

JointState make_joint(const ProductState& st, int n, int m, const Mat& ancilla);

// Local operator: Alice acts on a x A (dim 2n, index anc*n + (A-1)),
// Bob on b x B (dim 2m, index anc*m + (B-1)).
struct LocalOp {
    Party party = Party::A;
    Mat mat;
};

JointState apply_local(const LocalOp& op, const JointState& st);

struct Outcome {
    std::string label;
    LocalOp op;
};

struct Node {
    bool leaf = false;
    std::string leaf_label;  // state label, or "unreachable"
    Party party = Party::A;
    std::vector<Outcome> outcomes;
    std::vector<Node> children;

    static Node make_leaf(std::string label);
};

struct ProtocolTree {
    int n = 0;
    int m = 0;
    int theorem = 0;
    Node root;
};

// Throws tree_invalid unless every measurement node has idempotent, mutually
// orthogonal outcome projectors summing to the identity on the acting party's
// space.
void validate_tree(const ProtocolTree& t);

struct LeafMass {
    std::string path;
    std::string leaf_label;
    Rational p;
};

struct StateRun {
    std::string label;
    std::vector<LeafMass> leaves;
    Rational own_mass;  // total probability on leaves carrying this label
    bool ok = false;
};

struct RunReport {
    bool perfect = false;
    std::vector<StateRun> states;
    std::string violation;  // first failure, empty when perfect
};

RunReport run(const ProtocolTree& t, const StateSet& s);
RunReport run_with_ancilla(const ProtocolTree& t, const StateSet& s, const Mat& ancilla);

ProtocolTree build_thm4_tree(const FamilyParams& p);
ProtocolTree build_thm5_tree(const FamilyParams& p);
ProtocolTree build_thm6_tree(const FamilyParams& p);
ProtocolTree build_protocol_tree(const FamilyParams& p, int theorem);

// Greedy exact search for a finishing subtree distinguishing the given
// survivors (joint states over the same n, m). Returns the subtree, or
// nullopt when no separating measurement sequence was found (never a wrong
// tree). last_actor is the party that acted on the survivors most recently.
std::optional<Node> refine_leaf(const std::vector<JointState>& survivors, Party last_actor);

std::string tree_to_json(const ProtocolTree& t);
std::string report_to_json(const RunReport& r, const ProtocolTree& t);

}  // namespace locc

#endif
