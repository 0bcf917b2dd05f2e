#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpatoms/graph.hpp"
#include "gpatoms/rational.hpp"

namespace gpatoms::atoms {

// One direct summand of a vertex algebra: a matrix block of dimension n >= 1
// carrying weight alpha and a density with eigenvalues lambda_1..lambda_n
// (positive, summing to 1), or an infinite block carrying just a weight.
struct Summand {
    Rational weight;                    // alpha in (0, 1]
    std::vector<Rational> eigenvalues;  // empty iff infinite
    bool infinite = false;
};

// Per-vertex data: its atomic summands plus whether a diffuse part remains.
// Sum of weights <= 1, with equality exactly when there is no diffuse part.
struct VertexAlgebraSpec {
    std::vector<Summand> summands;
    bool has_diffuse_part = false;
};

using AlgebraMap = std::map<std::string, VertexAlgebraSpec>;
// vertex -> 0-based index into its summand list
using SummandSelection = std::map<std::string, std::size_t>;

void validate_algebras(const Graph& g, const AlgebraMap& algebras);

// s = sum_j 1/(alpha lambda_j); s >= 1, with equality iff n = 1 and alpha = 1.
Rational s_value(const Summand& summand);

// Zero-or-not (and the weight) of the meet of one projection per vertex, each
// with trace p_v in (0, 1]: nonzero iff (1 - p_v)_v lies in the convergence
// region, and then the weight is K_G((1 - p_v)_v).
struct MeetReport {
    bool nonzero = false;
    Rational value;  // 0 when the meet vanishes
};
MeetReport projection_meet(const Graph& g, const std::map<std::string, Rational>& p);

struct MeetReportFloat {
    bool nonzero = false;
    double value = 0.0;
};
MeetReportFloat projection_meet_float(const Graph& g, const std::map<std::string, double>& p,
                                      double eps);

// A type I direct summand produced by one summand selection.
struct AtomReport {
    SummandSelection selection;
    std::vector<std::string> support_clique;  // finite-part vertices with n(v) > 1
    std::vector<std::string> infinite_part;   // vertices contributing infinite blocks
    std::map<std::string, std::size_t> dimensions;  // finite part: v -> n(v)
    Rational weight;                                // total weight of the summand
    Rational finite_part_weight;                    // equals weight when no infinite part
    bool weight_derived = false;  // true when the infinite part forced a tensor-split argument
    // Row-major over the support clique in declared vertex order:
    std::vector<Rational> density_eigenvalues;  // products of selected lambda_{i(v)}
    // (multi-index over the support clique, minimal projection weight phi(q_i))
    std::vector<std::pair<std::vector<std::size_t>, Rational>> minimal_projection_weights;
};

// The six-step test: infinite part fully adjacent, n>1 part a clique, the
// point (1 - 1/s_v)_v inside the region of the finite-part graph; then
// weights, minimal projection weights and density eigenvalues.
std::optional<AtomReport> classify_selection(const Graph& g, const AlgebraMap& algebras,
                                             const SummandSelection& selection);

struct AtomEnumeration {
    std::vector<AtomReport> atoms;
    Rational total_mass;
    std::size_t selections_examined = 0;
};
AtomEnumeration enumerate_atoms(const Graph& g, const AlgebraMap& algebras,
                                std::size_t cap = kDefaultCap);

// Partial sums of the word series against the closed form 1/K_G2((1-1/s)_v):
// monotone from below and convergent exactly when the selection is admissible.
struct CrosscheckResult {
    Rational partial_sum;
    Rational closed_form;
};
CrosscheckResult truncated_series_crosscheck(const Graph& g, const AlgebraMap& algebras,
                                             const SummandSelection& selection, std::size_t max_len,
                                             std::size_t cap = kDefaultCap);

// ---- float mode (binary64 with tolerance; for irrational inputs) ----

struct SummandFloat {
    double weight = 0.0;
    std::vector<double> eigenvalues;
    bool infinite = false;
};
struct VertexAlgebraSpecFloat {
    std::vector<SummandFloat> summands;
    bool has_diffuse_part = false;
};
using AlgebraMapFloat = std::map<std::string, VertexAlgebraSpecFloat>;

void validate_algebras_float(const Graph& g, const AlgebraMapFloat& algebras, double eps);

struct AtomReportFloat {
    SummandSelection selection;
    std::vector<std::string> support_clique;
    std::vector<std::string> infinite_part;
    std::map<std::string, std::size_t> dimensions;
    double weight = 0.0;
    double finite_part_weight = 0.0;
    bool weight_derived = false;
    std::vector<double> density_eigenvalues;
    std::vector<std::pair<std::vector<std::size_t>, double>> minimal_projection_weights;
};

std::optional<AtomReportFloat> classify_selection_float(const Graph& g,
                                                        const AlgebraMapFloat& algebras,
                                                        const SummandSelection& selection,
                                                        double eps);

struct AtomEnumerationFloat {
    std::vector<AtomReportFloat> atoms;
    double total_mass = 0.0;
    std::size_t selections_examined = 0;
};
AtomEnumerationFloat enumerate_atoms_float(const Graph& g, const AlgebraMapFloat& algebras,
                                           double eps, std::size_t cap = kDefaultCap);

}  // namespace gpatoms::atoms
