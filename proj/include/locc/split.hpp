#ifndef LOCC_SPLIT_HPP
#define LOCC_SPLIT_HPP

#include <string>
#include <vector>

#include "locc/protocol.hpp"

namespace locc {

// Rank factorization of a JointState across the aA | bB cut:
// state = sum_k a_side[k] (x) b_side[k], a_side in Q^{2n}, b_side in Q^{2m}.
struct Component {
    Vec a;  // dim 2n, index anc*n + (A-1)
    Vec b;  // dim 2m, index anc*m + (B-1)
};

struct SplitState {
    std::string origin;
    int n = 0;
    int m = 0;
    std::vector<Component> comps;

    bool is_zero() const { return comps.empty(); }
    bool is_product() const { return comps.size() == 1; }
};

SplitState split_of_joint(const JointState& st);
JointState joint_of_split(const SplitState& st);

Rational split_inner(const SplitState& x, const SplitState& y);

// Apply a local operator to the party-side vectors of every component, then
// drop zero components and merge parallel ones.
SplitState apply_local_split(const LocalOp& op, const SplitState& st);

// Canonical dense fingerprint (scale-normalized); equal strings iff equal rays.
std::string split_fingerprint(const SplitState& st);

std::optional<Node> refine_search(std::vector<SplitState> survivors, Party last_actor, int n, int m);

}  // namespace locc

#endif
