#ifndef LOCC_STATES_HPP
#define LOCC_STATES_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "locc/linalg.hpp"
#include "locc/rational.hpp"

namespace locc {

struct invalid_state : std::invalid_argument {
    explicit invalid_state(const std::string& what) : std::invalid_argument(what) {}
};

// Unnormalized ket with integer amplitudes over a computational basis with
// 1-based labels, stored as a strictly increasing (index, coeff) list.
// |i+j> is {i:1, j:1}; normalization factors are never materialized.
struct Ket {
    int dim = 0;
    std::vector<std::pair<int, long long>> amps;

    Ket() = default;
    Ket(int dim_, std::vector<std::pair<int, long long>> amps_);

    static Ket basis(int dim, int i);
    // sum of sign·|index| terms, e.g. super(6, {{3,1},{5,-1}}) = |3-5>.
    static Ket super(int dim, std::initializer_list<std::pair<int, int>> terms);
    static Ket super(int dim, const std::vector<std::pair<int, long long>>& terms);
    // |1-2+3-...+-n>, signs alternating starting positive.
    static Ket alternating(int dim);

    std::vector<int> support() const;
    Vec dense() const;  // 0-based, length dim
};

// Exact inner product; accumulation is overflow-checked.
int128 dot(const Ket& a, const Ket& b);

struct ProductState {
    std::string label;
    Ket a;
    Ket b;
};

struct StateSet {
    int n = 0;
    int m = 0;
    std::string family_tag;
    std::vector<ProductState> states;

    const ProductState* find(const std::string& label) const;
    StateSet without(const std::string& label) const;
};

// <x|y> on unnormalized amplitudes: dot(x.a, y.a) * dot(x.b, y.b).
Rational inner_product(const ProductState& x, const ProductState& y);

// All unordered pairs of labels with nonzero inner product; empty means the
// set is mutually orthogonal.
std::vector<std::pair<std::string, std::string>> verify_orthogonality(const StateSet& s);

void validate_state_set(const StateSet& s);

std::string state_set_to_json(const StateSet& s);
StateSet state_set_from_json(const std::string& text);

}  // namespace locc

#endif
