#ifndef MUINV_LINKS_HPP
#define MUINV_LINKS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "muinv/abelian.hpp"
#include "muinv/hilton.hpp"
#include "muinv/hopf.hpp"
#include "muinv/problem.hpp"
#include "muinv/stems.hpp"
#include "muinv/transform.hpp"
#include "muinv/wedge.hpp"

namespace muinv {
namespace links {

// u_{r,s} = (r+s-2)!/s!, the number of s-monotone permutations.
Int u_count(int r, int s);

// Stem degree of the order-s invariant: |p| - s(n-1) - (r-1)(m-2) - 1.
long long mu_stem_degree(const LinkProblem& prob, int s);

struct MuTarget {
    int s = 0;
    long long stem_degree = 0;
    Int multiplicity;       // u_{r,s}
    AbelianGroup group;     // multiplicity copies of the stem
    std::string stem_cite;
};

MuTarget mu_target(const LinkProblem& prob, int s, const StableStemTable& table);

struct KappaDomainReport {
    WedgeSignature sig;       // (n; m-1, ..., m-1)
    long long k = 0;          // |p|
    hilton::RangePredicates predicates;
    bool reconstruction_hypothesis = false;  // |p| <= r(m-2)
};

KappaDomainReport kappa_domain(const LinkProblem& prob);

// The two stem formulas that must agree: the order-s stem of the link problem
// and the plain stem of the s-fold augmented link in R^m (s extra components
// of dimension m-n-1).  Their equality is an exact integer identity, as is
// u_{r,s} * s! = (r+s-2)!.
struct AugmentationCheck {
    long long stem_a = 0;
    long long stem_b = 0;
    bool stems_equal = false;
    bool multiplicity_identity = false;
};

AugmentationCheck augmentation_stem_check(const LinkProblem& prob, int s);

struct PipelineRow {
    int s = 0;
    long long k_s = 0;             // s(n-1) + (r-1)(m-2) - |p| + p_r + 1
    std::string lambda_group;      // symbolic pi_{p_r}(S^{k_s})
    MuTarget mu;
    bool stable_at_s = false;      // p_r/2 <= s(n-1) + sum (m - p_j - 2)
};

struct PipelineReport {
    WedgeSignature wedge;          // (n; m-p_1-1, ..., m-p_{r-1}-1)
    bool stable_overall = false;   // p_r/2 <= sum (m - p_j - 2)
    std::vector<PipelineRow> rows;
    std::vector<std::string> stems_used;
};

// Linking-coefficient bookkeeping for link maps whose first r-1 components
// embed; requires p_j <= m-3 for all j.
PipelineReport linking_pipeline(const LinkProblem& prob, const StableStemTable& table,
                                int max_s);

struct Summand {
    std::string label;
    Int multiplicity;
    long long stem_degree = 0;
    AbelianGroup group;  // multiplicity copies of the stem group
};

struct ClassificationReport {
    std::vector<std::pair<std::string, bool>> assumptions;
    std::vector<Summand> summands;
    std::vector<std::string> symbolic;  // markers never evaluated (e.g. pi_p(S^n))
    AbelianGroup assembled;
    std::vector<std::string> caveats;
    std::vector<std::string> stems_used;
};

// Target group of the full invariant sequence for homotopy Brunnian links:
// direct sum over s of u_{r,s} copies of the stem.  Hypothesis failures set
// caveat flags but the container group is still assembled.
ClassificationReport classify_brunnian(const LinkProblem& prob, const StableStemTable& table,
                                       int max_s);

// Upper-bound container for the total invariant: component-class markers plus
// the order-s targets of every sublink of size >= 2.  In covering-space mode
// (n = 1) pair/triple summands are indexed by the declared grade window.
ClassificationReport classify_total(const LinkProblem& prob, const StableStemTable& table,
                                    int max_s,
                                    std::optional<hilton::GradedWindow> window = {});

// Canonical representative under the Z^{r-1} translation action on level
// indices: shift so that the lexicographically least support level is the
// origin.  Zero data canonicalizes to the empty dataset.
hopf::GradedHopfDataset canonicalize_translation(const hopf::GradedHopfDataset& data);

struct ReconstructionResult {
    hopf::GradedHopfDataset h_family;
    // Coordinates on the per-level Lyndon basic products, recovered through
    // the inverse change-of-basis matrix; keyed by (level vector, row index).
    std::map<std::pair<std::vector<long long>, std::size_t>, GroupElement> hilton_coords;
    std::vector<hilton::BasicProduct> basis;  // per-level basis (grades elided)
};

// Inverts the graded Hopf evaluation: per gamma_bar block, undo the iterated
// binomial transform (after the telescoping change of level variables), then
// apply the inverse basis matrix per level.  Exact inverse of
// evaluate_H_graded on any dataset supported in the window; the values must
// cover the (s)-grid demanded by the window (see required_s_grid).
ReconstructionResult reconstruct_kappa(
    const std::map<std::pair<std::vector<int>, std::vector<int>>, GroupElement>& hopf_values,
    const transform::Box& window, const WedgeSignature& sig, const AbelianGroup& group);

// Per-gamma_bar grid of (s) indices that reconstruct_kappa consumes.
std::vector<std::pair<std::vector<int>, std::vector<int>>> required_s_grid(
    const transform::Box& window, int r);

}  // namespace links
}  // namespace muinv

#endif
