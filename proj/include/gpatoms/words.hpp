#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gpatoms/graph.hpp"
#include "gpatoms/rational.hpp"
#include "gpatoms/series.hpp"

namespace gpatoms::words {

// A word is a sequence of vertex ids.  Two words are equivalent when one is
// reachable from the other by swaps of adjacent letters that are adjacent in
// the graph (equal letters never swap: the graph has no loops).  Each class is
// named by its lexicographically least member in declared vertex order.
using Word = std::vector<std::string>;

// Reduced: any two occurrences of the same letter are separated by a letter
// that is distinct from and non-adjacent to it.
bool is_reduced(const Graph& g, const Word& w);

// Lex-least class member, greedy: repeatedly front the smallest remaining
// letter that commutes past everything before it.
Word canonical_form(const Graph& g, const Word& w);

// Oracle form: breadth-first closure of the class under admissible swaps, then
// the minimum.  Exponential; for tests and small verifications.
Word canonical_form_bfs(const Graph& g, const Word& w);

// All classes of reduced words of exactly the given length, as canonical
// representatives in lexicographic order.  Throws cap_exceeded when the class
// count would pass `cap` (predicted from the counting series before running).
std::vector<Word> enumerate_reduced_classes(const Graph& g, std::size_t length,
                                            std::size_t cap = kDefaultCap);

// Counting series for reduced classes: coefficient l is |W_l|, computed as the
// reciprocal of the clique polynomial under the diagonal substitution
// x_v = t/(1+t), truncated at max_len.
TruncatedSeries count_reduced_classes_series(const Graph& g, std::size_t max_len);

// Classes of *all* words by length, counted by deduplicating canonical forms
// level by level (combinatorial route, no series inversion involved).
std::vector<Rational> count_all_word_classes(const Graph& g, std::size_t max_len,
                                             std::size_t cap = kDefaultCap);

// Sum over reduced classes of length <= max_len of prod_i x_{w_i}, by explicit
// enumeration of canonical representatives.  Nonnegative x makes the partial
// sums monotone in max_len.
Rational truncated_weighted_sum(const Graph& g, const std::map<std::string, Rational>& x,
                                std::size_t max_len, std::size_t cap = kDefaultCap);

// Both normal-form identities through max_len, each matching brute-force
// counts against the appropriate polynomial reciprocal:
//   reduced:   K_G(diag t/(1+t)) * sum |W_l| t^l        = 1
//   unreduced: K_G(diag t)       * sum |classes_l| t^l  = 1
struct CartierFoataReport {
    bool reduced_identity = false;
    bool unreduced_identity = false;
    std::vector<Rational> reduced_counts;      // from explicit enumeration
    std::vector<Rational> all_class_counts;    // from canonical-form dedup
};
CartierFoataReport cartier_foata_identity_check(const Graph& g, std::size_t max_len,
                                                std::size_t cap = 4 * kDefaultCap);

}  // namespace gpatoms::words
