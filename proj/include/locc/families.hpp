#ifndef LOCC_FAMILIES_HPP
#define LOCC_FAMILIES_HPP

#include <string>

#include "locc/states.hpp"

namespace locc {

struct parameter_error : std::invalid_argument {
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

enum class Family { thm1, thm1_n4, thm2, thm3 };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct FamilyParams {
    int n = 0;  // A-side dimension
    int m = 0;  // B-side dimension

    int l() const { return m / 2; }        // m even
    int k() const { return (m - 1) / 2; }  // m odd
};

// Selects the construction from m's parity and the n = m = 4 special case.
Family auto_family(const FamilyParams& p);

// 2n-1 states in C^n x C^4 for n > 4; the 8-state variant when n = 4.
StateSet build_thm1(const FamilyParams& p);
// 2(n+2l)-8 states in C^n x C^{2l}, n >= 2l > 4.
StateSet build_thm2(const FamilyParams& p);
// 2(n-m)+9 states (m = 5) or 2(n+m)-7 states (odd m > 5) in C^n x C^m.
StateSet build_thm3(const FamilyParams& p);

StateSet build_family(const FamilyParams& p, Family f);

long expected_count(const FamilyParams& p, Family f);

}  // namespace locc

#endif
