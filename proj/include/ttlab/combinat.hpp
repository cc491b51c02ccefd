#ifndef TTLAB_COMBINAT_HPP
#define TTLAB_COMBINAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ttlab/series.hpp"

namespace ttlab {

// Longest strictly increasing subsequence (permutations), by patience sorting.
int lis_strict(const std::vector<int>& seq);
// Longest weakly increasing subsequence (words).
int lis_weak(const std::vector<int>& seq);

// Permutation / involution / word classes counted against a subsequence
// bound.  iota is the reversal k -> n+1-k.
enum class ClassId {
    perm,                     // all of S_n
    word,                     // words of length n over k letters
    involution,               // pi^2 = 1
    fp_free_involution,       // pi^2 = 1, pi(y) != y
    iota_involution,          // (iota pi)^2 = 1
    iota_matching_nofix,      // (pi iota)^2 = 1, pi(y) != iota(y)
    iota_commuting,           // pi iota = iota pi
    fp_free_iota_involution,  // pi^2 = 1, pi iota = iota pi, pi(y) not in {y, iota(y)}
};

std::string class_id_name(ClassId id);

struct ClassSpec {
    ClassId id = ClassId::perm;
    int n = 0;    // object size
    int ell = 0;  // subsequence bound (lis <= ell)
    int k = 0;    // alphabet size, word class only
};

// Exact count by exhaustive enumeration with predicate filtering.  Throws
// when the enumeration budget (n <= 9 for permutation-type classes,
// k^n <= 10^6 for words; n <= 16 for the paired involution classes) is
// exceeded.
long long count_class(const ClassSpec& spec);

struct CountRow {
    ClassId id;
    int n, ell, k;
    long long count;
};

// Per-n table of counts up to n_max at fixed bound.
std::vector<CountRow> count_table(ClassId id, int n_max, int ell, int k = 0);

// One coefficient comparison of a combinatorial generating function against
// a group-integral series.
struct CoeffCheck {
    int power = 0;
    Rat lhs, rhs;
    bool equal = false;
};

struct IdentityReport {
    int identity = 0;
    int ell = 0, k = 0, n_max = 0;
    std::string lhs_desc, rhs_desc;
    std::vector<CoeffCheck> coeffs;
    bool pass = false;
    std::string note;
};

// The nine combinatorial identities: generating functions of the classes
// above against expectations over O(+/-), Sp and U.  Coefficients are
// compared exactly up to x^{n_max}.
IdentityReport identity_check(int identity, int ell, int n_max, int k = 0);

// Small-x gap estimates: log of the group expectation keeps only the stated
// leading terms, with everything between vanishing.
struct GapReport {
    std::string family;
    int ell = 0, k = 0;
    bool pass = false;
    std::string detail;
};

GapReport gap_check_orth(int sign, int ell, int D);    // O(+/-)(ell+1)
GapReport gap_check_unitary(int ell, int D);           // U(ell)
GapReport gap_check_words(int ell, int k, int D);      // words over k letters

}  // namespace ttlab

#endif
