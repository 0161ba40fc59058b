#ifndef LOCC_CERTIFY_HPP
#define LOCC_CERTIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locc/linalg.hpp"
#include "locc/states.hpp"

namespace locc {

struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

enum class Party { A, B };

inline Party other(Party p) { return p == Party::A ? Party::B : Party::A; }
inline std::string party_name(Party p) { return p == Party::A ? "A" : "B"; }

// A Hermitian matrix over rationals, split into a symmetric real part and an
// antisymmetric imaginary part.
struct HermitianMat {
    Mat real;
    Mat imag;

    int dim() const { return real.rows(); }
    bool is_scalar() const;
};

// Basis of the Hermitian solution space of the orthogonality-preservation
// constraints for one party: every H with <a_i|H|a_j> = 0 for each pair whose
// other-side factors overlap. H = I is always a solution for an orthogonal
// input set, so the space has dimension >= 1; dimension exactly 1 certifies
// that a non-disturbing first measurement by this party must be trivial.
struct IndistCertificate {
    Party party = Party::A;
    int local_dim = 0;
    std::vector<HermitianMat> solution_basis;
    bool is_scalar_only = false;
    int constraint_count = 0;  // active unordered pairs

    int solution_dim() const { return static_cast<int>(solution_basis.size()); }
};

IndistCertificate certify_party(const StateSet& s, Party party);
std::pair<IndistCertificate, IndistCertificate> certify_both(const StateSet& s);

// A basis element linearly independent from the identity (shifted to have
// zero trace-direction), when the certificate is not scalar-only.
std::optional<HermitianMat> witness_matrix(const IndistCertificate& c);

// Re-substitution: H satisfies every active-pair constraint of s exactly.
bool satisfies_constraints(const StateSet& s, Party party, const HermitianMat& h);

std::string certificate_to_json(const IndistCertificate& c);

}  // namespace locc

#endif
