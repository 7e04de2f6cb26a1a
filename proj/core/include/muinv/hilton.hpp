#ifndef MUINV_HILTON_HPP
#define MUINV_HILTON_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "muinv/bracket.hpp"
#include "muinv/wedge.hpp"

namespace muinv {
namespace hilton {

using lie::BracketTree;
using lie::Generator;

using GradedWindow = std::pair<int, int>;  // inclusive grade interval [lo, hi]

// Member of the Lyndon Hall family over the wedge's generators, with its
// multidegree bookkeeping.  The family is canonical: Lyndon words in the fixed
// alphabet order, bracketed by the standard (longest proper Lyndon suffix)
// factorization.
struct BasicProduct {
    BracketTree tree;
    std::vector<Generator> word;    // leaf sequence = the Lyndon word
    int t = 0;                      // occurrences of the core inclusion i0
    std::vector<int> family_counts; // occurrences per meridian family (index j-1)
    int sphere_dim = 0;             // t*n + sum c_j q_j - (t + sum c_j - 1)
};

// How a Hilton summand sits relative to the reduced and double-prime
// subgroups: doublePrime = every meridian family exactly once, reducedOnly =
// every family at least once but not all exactly once, full = some family
// missing, outside = trivial by connectivity (sphere_dim > k).
enum class SummandClass { full, reducedOnly, doublePrime, outside };

std::string summand_class_name(SummandClass c);

struct SummandEntry {
    BasicProduct product;
    std::string group;  // symbolic "pi_k(S^d)"
    SummandClass cls = SummandClass::full;
};

struct SummandReport {
    WedgeSignature sig;
    int k = 0;
    std::optional<GradedWindow> window;
    std::vector<SummandEntry> entries;
};

// The alphabet in Lyndon order: [i0, i1, ..., i_{r-1}] for n >= 2, or all
// graded meridians ij@g with g in the window for n = 1 (covering-space mode).
std::vector<Generator> alphabet(const WedgeSignature& sig,
                                const std::optional<GradedWindow>& window);

// All Lyndon-family basic products of weight (leaf count) <= max_weight, in
// (weight, word-lex) order.  A graded window is required exactly when n = 1.
std::vector<BasicProduct> enumerate_basic(const WedgeSignature& sig, int max_weight,
                                          const std::optional<GradedWindow>& window = {});

SummandClass classify_product(const BasicProduct& w, const WedgeSignature& sig, int k);

// Every basic product with sphere_dim <= k, classified; products of larger
// dimension contribute trivially by connectivity and are omitted.
SummandReport summand_report(const WedgeSignature& sig, int k,
                             const std::optional<GradedWindow>& window = {});

struct RangePredicates {
    std::optional<bool> hopf_bijective_at_s;  // k <= 2(|q|-r+1+s(n-1))
    bool hopf_injective_total = false;        // k <= 2(|q|-r+1)
    bool reduced_equals_double_prime = false; // k <= |q|+q_j-r for all j
};

RangePredicates range_predicates(const WedgeSignature& sig, long long k,
                                 std::optional<int> s = {});

// Oracle-style counter: enumerates all words with the given multidegree
// (t copies of i0, one of each meridian) and counts the Lyndon ones directly
// from the definition.  Independent of the Duval enumeration path.
long long count_lyndon_multilinear(int r, int s);

}  // namespace hilton
}  // namespace muinv

#endif
