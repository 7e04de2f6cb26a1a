#include "muinv/links.hpp"

#include <algorithm>
#include <sstream>

namespace muinv {
namespace links {

Int u_count(int r, int s)
{
    if (r < 2 || s < 0)
        throw ValidationError("u_count: need r >= 2, s >= 0");
    return factorial(r + s - 2) / factorial(s);
}

long long mu_stem_degree(const LinkProblem& prob, int s)
{
    prob.validate();
    if (s < 0)
        throw ValidationError("mu_stem_degree: s must be >= 0");
    return prob.p_total() - static_cast<long long>(s) * (prob.n - 1) -
           static_cast<long long>(prob.r() - 1) * (prob.m - 2) - 1;
}

MuTarget mu_target(const LinkProblem& prob, int s, const StableStemTable& table)
{
    MuTarget t;
    t.s = s;
    t.stem_degree = mu_stem_degree(prob, s);
    t.multiplicity = u_count(prob.r(), s);
    AbelianGroup stem = table.stem(t.stem_degree);
    t.group = stem.power(t.multiplicity.convert_to<long long>());
    t.stem_cite = table.cite(t.stem_degree);
    return t;
}

KappaDomainReport kappa_domain(const LinkProblem& prob)
{
    prob.validate();
    KappaDomainReport rep;
    rep.sig = WedgeSignature(prob.n,
                             std::vector<int>(static_cast<std::size_t>(prob.r() - 1), prob.m - 1));
    rep.k = prob.p_total();
    rep.predicates = hilton::range_predicates(rep.sig, rep.k);
    rep.reconstruction_hypothesis =
        prob.p_total() <= static_cast<long long>(prob.r()) * (prob.m - 2);
    return rep;
}

AugmentationCheck augmentation_stem_check(const LinkProblem& prob, int s)
{
    prob.validate();
    if (s < 0)
        throw ValidationError("augmentation_stem_check: s must be >= 0");
    AugmentationCheck c;
    c.stem_a = mu_stem_degree(prob, s);
    // the augmented link: s meridian components S^{m-n-1} plus the original r,
    // fed through the plain (order-0) stem formula in R^m
    const long long total_dims =
        static_cast<long long>(s) * (prob.m - prob.n - 1) + prob.p_total();
    c.stem_b = total_dims - static_cast<long long>(s + prob.r() - 1) * (prob.m - 2) - 1;
    c.stems_equal = c.stem_a == c.stem_b;
    c.multiplicity_identity =
        u_count(prob.r(), s) * factorial(s) == factorial(prob.r() + s - 2);
    return c;
}

namespace {

// p_r/2 <= bound, exactly: p_r <= 2*bound
bool half_le(long long p_r, long long bound) { return p_r <= 2 * bound; }

std::string subset_label(const std::vector<int>& indices)
{
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i)
            out << ",";
        out << indices[i];
    }
    out << "}";
    return out.str();
}

void add_stem_cite(std::vector<std::string>& cites, const std::string& cite)
{
    if (std::find(cites.begin(), cites.end(), cite) == cites.end())
        cites.push_back(cite);
}

}  // namespace

PipelineReport linking_pipeline(const LinkProblem& prob, const StableStemTable& table,
                                int max_s)
{
    prob.validate();
    if (max_s < 0)
        throw ValidationError("linking_pipeline: max_s must be >= 0");
    for (int pj : prob.p)
        if (pj > prob.m - 3)
            throw ValidationError("linking_pipeline: requires p_j <= m-3 for all j");

    const int r = prob.r();
    const long long p_r = prob.p.back();
    std::vector<int> q;
    long long complement_sum = 0;  // sum (m - p_j - 2) over the embedded components
    for (int j = 0; j < r - 1; ++j) {
        q.push_back(prob.m - prob.p[static_cast<std::size_t>(j)] - 1);
        complement_sum += prob.m - prob.p[static_cast<std::size_t>(j)] - 2;
    }
    PipelineReport rep;
    rep.wedge = WedgeSignature(prob.n, std::move(q));
    rep.stable_overall = half_le(p_r, complement_sum);
    for (int s = 0; s <= max_s; ++s) {
        PipelineRow row;
        row.s = s;
        row.k_s = static_cast<long long>(s) * (prob.n - 1) +
                  static_cast<long long>(r - 1) * (prob.m - 2) - prob.p_total() + p_r + 1;
        std::ostringstream lg;
        lg << "pi_" << p_r << "(S^" << row.k_s << ")";
        row.lambda_group = lg.str();
        row.mu = mu_target(prob, s, table);
        row.stable_at_s =
            half_le(p_r, static_cast<long long>(s) * (prob.n - 1) + complement_sum);
        add_stem_cite(rep.stems_used, row.mu.stem_cite);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

ClassificationReport classify_brunnian(const LinkProblem& prob, const StableStemTable& table,
                                       int max_s)
{
    prob.validate();
    if (max_s < 0)
        throw ValidationError("classify_brunnian: max_s must be >= 0");
    const int r = prob.r();
    const long long psum = prob.p_total();
    const long long p_r = prob.p.back();

    ClassificationReport rep;
    bool dims_ok = true;
    for (int pj : prob.p)
        dims_ok = dims_ok && pj <= prob.m - 3;
    rep.assumptions.emplace_back("p_j <= m-3", dims_ok);
    // |p| <= (r-1)(m-2) + p_r/2, compared exactly as 2|p| <= 2(r-1)(m-2) + p_r
    bool half_hyp = 2 * psum <= 2 * static_cast<long long>(r - 1) * (prob.m - 2) + p_r;
    rep.assumptions.emplace_back("|p| <= (r-1)(m-2) + p_r/2", half_hyp);
    bool sub_hyp = true;
    for (int j = 0; j < r - 1; ++j)
        sub_hyp = sub_hyp &&
                  psum <= static_cast<long long>(r) * (prob.m - 2) -
                              prob.p[static_cast<std::size_t>(j)];
    rep.assumptions.emplace_back("|p| <= r(m-2) - p_j", sub_hyp);
    rep.assumptions.emplace_back("n >= 2", prob.n >= 2);

    for (const auto& [name, ok] : rep.assumptions)
        if (!ok)
            rep.caveats.push_back("assumption failed: " + name);

    rep.assembled = AbelianGroup::zero();
    for (int s = 0; s <= max_s; ++s) {
        MuTarget t = mu_target(prob, s, table);
        add_stem_cite(rep.stems_used, t.stem_cite);
        if (t.group.is_zero())
            continue;
        std::ostringstream label;
        label << "s=" << s;
        rep.summands.push_back(Summand{label.str(), t.multiplicity, t.stem_degree, t.group});
        rep.assembled = rep.assembled.direct_sum(t.group);
    }
    if (prob.n >= 2) {
        if (mu_stem_degree(prob, max_s + 1) >= 0)
            rep.caveats.push_back("truncated: stem degree still >= 0 at s = max_s + 1");
    } else {
        rep.caveats.push_back("n = 1: the stem degree does not decay in s; sum truncated at max_s");
    }
    return rep;
}

namespace {

void subsets_of_size(int r, int size, std::vector<int>& cur, int next,
                     std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int i = next; i <= r; ++i) {
        cur.push_back(i);
        subsets_of_size(r, size, cur, i + 1, out);
        cur.pop_back();
    }
}

}  // namespace

ClassificationReport classify_total(const LinkProblem& prob, const StableStemTable& table,
                                    int max_s, std::optional<hilton::GradedWindow> window)
{
    prob.validate();
    if (max_s < 0)
        throw ValidationError("classify_total: max_s must be >= 0");
    for (int pj : prob.p)
        if (pj > prob.m - 3)
            throw ValidationError("classify_total: requires p_j <= m-3 for all j");
    if (prob.n == 1 && !window)
        throw ValidationError("classify_total: a grade window is required when n = 1");

    const int r = prob.r();
    ClassificationReport rep;
    rep.assumptions.emplace_back("p_j <= m-3", true);
    rep.assembled = AbelianGroup::zero();

    // component classes [f_j] in pi_{p_j}(S^n); only the circle case is forced
    for (int j = 1; j <= r; ++j) {
        const int pj = prob.p[static_cast<std::size_t>(j) - 1];
        if (prob.n == 1) {
            AbelianGroup g = (pj == 1) ? AbelianGroup::cyclic(0) : AbelianGroup::zero();
            std::ostringstream label;
            label << "component " << j << ": pi_" << pj << "(S^1)";
            if (!g.is_zero()) {
                rep.summands.push_back(Summand{label.str(), Int(1), 0, g});
                rep.assembled = rep.assembled.direct_sum(g);
            }
        } else {
            std::ostringstream marker;
            marker << "component " << j << ": pi_" << pj << "(S^" << prob.n
                   << ") (symbolic, not assembled)";
            rep.symbolic.push_back(marker.str());
        }
    }

    long long window_count = 0;
    if (window)
        window_count = static_cast<long long>(window->second) - window->first + 1;

    for (int size = 2; size <= r; ++size) {
        std::vector<std::vector<int>> subs;
        std::vector<int> cur;
        subsets_of_size(r, size, cur, 1, subs);
        for (const auto& indices : subs) {
            LinkProblem sub = prob.sublink(indices);
            if (prob.n == 1) {
                // level-indexed families: (size-2)! copies per level vector
                long long stem_deg = mu_stem_degree(sub, 0);
                AbelianGroup stem = table.stem(stem_deg);
                add_stem_cite(rep.stems_used, table.cite(stem_deg));
                Int mult = factorial(size - 2);
                for (int i = 1; i < size; ++i)
                    mult *= window_count;
                AbelianGroup g = stem.power(mult.convert_to<long long>());
                if (!g.is_zero()) {
                    std::ostringstream label;
                    label << "sub" << subset_label(indices) << " level-indexed";
                    rep.summands.push_back(Summand{label.str(), mult, stem_deg, g});
                    rep.assembled = rep.assembled.direct_sum(g);
                }
            } else {
                for (int s = 0; s <= max_s; ++s) {
                    MuTarget t = mu_target(sub, s, table);
                    add_stem_cite(rep.stems_used, t.stem_cite);
                    if (t.group.is_zero())
                        continue;
                    std::ostringstream label;
                    label << "sub" << subset_label(indices) << " s=" << s;
                    rep.summands.push_back(
                        Summand{label.str(), t.multiplicity, t.stem_degree, t.group});
                    rep.assembled = rep.assembled.direct_sum(t.group);
                }
                if (mu_stem_degree(sub, max_s + 1) >= 0)
                    rep.caveats.push_back("sub" + subset_label(indices) +
                                          ": truncated at max_s with stem degree still >= 0");
            }
        }
    }
    rep.caveats.push_back(
        "container for the total invariant: summand list is an upper bound; exactness holds "
        "only under the classification hypotheses");
    if (prob.n == 1)
        rep.caveats.push_back("n = 1: level indices truncated to the declared window");
    return rep;
}

hopf::GradedHopfDataset canonicalize_translation(const hopf::GradedHopfDataset& data)
{
    data.validate();
    hopf::GradedHopfDataset out;
    out.r = data.r;
    out.group = data.group;
    if (data.entries.empty())
        return out;
    std::vector<long long> gmin;
    bool first = true;
    for (const auto& [key, v] : data.entries) {
        if (is_zero(v))
            continue;
        if (first || key.first < gmin) {
            gmin = key.first;
            first = false;
        }
    }
    if (first)
        return out;  // all values zero
    for (const auto& [key, v] : data.entries) {
        if (is_zero(v))
            continue;
        std::vector<long long> g = key.first;
        for (std::size_t i = 0; i < g.size(); ++i)
            g[i] -= gmin[i];
        out.insert(std::move(g), key.second, v);
    }
    return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> required_s_grid(
    const transform::Box& window, int r)
{
    window.validate();
    if (static_cast<int>(window.arity()) != r - 1)
        throw ValidationError("required_s_grid: window arity must be r-1");
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    std::vector<int> gbar(static_cast<std::size_t>(r - 2));
    for (std::size_t i = 0; i < gbar.size(); ++i)
        gbar[i] = static_cast<int>(i) + 1;
    do {
        // telescoped windows: axis 1 is the permuted first axis, later axes are
        // differences of consecutive permuted axes
        std::vector<long long> sides;
        long long prev_lo = 0, prev_hi = 0;
        for (int j = 1; j <= r - 1; ++j) {
            std::size_t axis = (j <= r - 2) ? static_cast<std::size_t>(gbar[static_cast<std::size_t>(j - 1)] - 1)
                                            : static_cast<std::size_t>(r - 2);
            auto [lo, hi] = window.axes[axis];
            sides.push_back((hi - prev_lo) - (lo - prev_hi) + 1);
            prev_lo = lo;
            prev_hi = hi;
        }
        std::vector<int> s_vec(static_cast<std::size_t>(r - 1), 0);
        while (true) {
            out.emplace_back(s_vec, gbar);
            std::size_t axis = 0;
            while (axis < s_vec.size()) {
                if (++s_vec[axis] < sides[axis])
                    break;
                s_vec[axis] = 0;
                ++axis;
            }
            if (axis == s_vec.size())
                break;
        }
    } while (std::next_permutation(gbar.begin(), gbar.end()));
    return out;
}

ReconstructionResult reconstruct_kappa(
    const std::map<std::pair<std::vector<int>, std::vector<int>>, GroupElement>& hopf_values,
    const transform::Box& window, const WedgeSignature& sig, const AbelianGroup& group)
{
    sig.validate();
    window.validate();
    const int r = sig.r();
    if (static_cast<int>(window.arity()) != r - 1)
        throw ValidationError("reconstruct_kappa: window arity must be r-1");

    ReconstructionResult result;
    result.h_family.r = r;
    result.h_family.group = group;

    std::vector<int> gbar(static_cast<std::size_t>(r - 2));
    for (std::size_t i = 0; i < gbar.size(); ++i)
        gbar[i] = static_cast<int>(i) + 1;
    do {
        // windows of the permuted axes, then the telescoped difference box
        std::vector<transform::Interval> permuted;
        for (int j = 1; j <= r - 2; ++j)
            permuted.push_back(
                window.axes[static_cast<std::size_t>(gbar[static_cast<std::size_t>(j - 1)] - 1)]);
        permuted.push_back(window.axes[static_cast<std::size_t>(r - 2)]);
        transform::Box hbox;
        long long prev_lo = 0, prev_hi = 0;
        for (const auto& [lo, hi] : permuted) {
            hbox.axes.emplace_back(lo - prev_hi, hi - prev_lo);
            prev_lo = lo;
            prev_hi = hi;
        }

        // collect the (s)-grid for this gamma_bar block; any surplus values
        // ride along and are consistency-checked by the inversion
        std::map<std::vector<int>, GroupElement> block;
        for (const auto& [key, value] : hopf_values)
            if (key.second == gbar &&
                key.first.size() == static_cast<std::size_t>(r - 1))
                block.emplace(key.first, value);
        std::vector<int> s_vec(static_cast<std::size_t>(r - 1), 0);
        while (true) {
            if (!block.count(s_vec))
                throw ValidationError(
                    "reconstruct_kappa: hopf values must cover the required (s)-grid");
            std::size_t axis = 0;
            while (axis < s_vec.size()) {
                if (++s_vec[axis] < hbox.side(axis))
                    break;
                s_vec[axis] = 0;
                ++axis;
            }
            if (axis == s_vec.size())
                break;
        }

        transform::SupportedSequence b = transform::invert_Dprime(block, hbox, group);
        for (const auto& [h, v] : b.entries) {
            // undo the telescoping: gbar_j = h_1 + ... + h_j
            std::vector<long long> gbar_levels(h.size());
            long long acc = 0;
            for (std::size_t j = 0; j < h.size(); ++j) {
                acc += h[j];
                gbar_levels[j] = acc;
            }
            std::vector<long long> g(static_cast<std::size_t>(r - 1));
            for (int j = 1; j <= r - 2; ++j)
                g[static_cast<std::size_t>(gbar[static_cast<std::size_t>(j - 1)] - 1)] =
                    gbar_levels[static_cast<std::size_t>(j - 1)];
            g[static_cast<std::size_t>(r - 2)] = gbar_levels[static_cast<std::size_t>(r - 2)];
            if (!window.contains(g))
                throw WindowInconsistency(
                    "reconstruct_kappa: recovered support leaks out of the declared window");
            result.h_family.insert(std::move(g), gbar, v);
        }
    } while (std::next_permutation(gbar.begin(), gbar.end()));

    // Per-level change of basis: Lyndon basic products vs combs.  The comb
    // coordinates of a class are its h-values, so the basic-product coordinates
    // are (D_0^T)^{-1} applied to them.
    hopf::BasisMatrix d0 = hopf::basis_matrix_D(sig, 0);
    result.basis = d0.row_products;
    IntegerMatrix inv_t = d0.matrix.transposed().inverse_unimodular();

    std::vector<std::vector<long long>> levels;
    for (const auto& [key, v] : result.h_family.entries) {
        if (levels.empty() || levels.back() != key.first)
            levels.push_back(key.first);
        (void)v;
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (const auto& g : levels) {
        std::vector<GroupElement> h_vec;
        h_vec.reserve(d0.col_arrangements.size());
        for (const auto& delta : d0.col_arrangements) {
            std::vector<int> gb(delta.values.begin(), delta.values.end());
            auto it = result.h_family.entries.find({g, gb});
            h_vec.push_back(it == result.h_family.entries.end() ? zero_element(group)
                                                                : it->second);
        }
        std::vector<GroupElement> coords = inv_t.apply(h_vec, group);
        for (std::size_t row = 0; row < coords.size(); ++row) {
            if (is_zero(coords[row]))
                continue;
            result.hilton_coords[{g, row}] = coords[row];
        }
    }
    return result;
}

}  // namespace links
}  // namespace muinv
