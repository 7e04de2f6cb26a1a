#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "muinv/envelope.hpp"
#include "muinv/expr.hpp"
#include "muinv/hilton.hpp"
#include "muinv/hopf.hpp"
#include "muinv/links.hpp"
#include "muinv/normalize.hpp"
#include "muinv/report_io.hpp"
#include "muinv/suites.hpp"
#include "muinv/transform.hpp"

namespace {

using namespace muinv;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join_ints(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// provenance echoes file names, not machine-specific paths
std::string basename_of(const std::string& path)
{
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

links::StableStemTable load_stems(const std::string& path)
{
    if (path.empty())
        return links::StableStemTable::standard_default();
    return links::StableStemTable::from_json(read_file(path), path);
}

struct Options {
    int n = 2;
    std::vector<int> q;
    std::vector<int> p;
    int m = 6;
    int k = 1;
    int r = 2;
    int s = 0;
    int max_s = 4;
    std::vector<int> window;
    std::string stems_path;
    std::string input_path;
    std::string expr;
    bool json = false;
    bool total = false;
    std::string suite;
    std::string direction;
};

std::optional<hilton::GradedWindow> graded_window(const Options& opt)
{
    if (opt.window.empty())
        return std::nullopt;
    if (opt.window.size() != 2)
        throw ValidationError("--window takes exactly two integers: lo hi");
    return hilton::GradedWindow{opt.window[0], opt.window[1]};
}

io::Provenance prov(const std::string& command, const Options& opt,
                    std::initializer_list<const char*> wanted)
{
    io::Provenance p;
    p.command = command;
    for (const char* key : wanted) {
        std::string k = key;
        if (k == "n")
            p.params.emplace_back("n", std::to_string(opt.n));
        else if (k == "q")
            p.params.emplace_back("q", join_ints(opt.q));
        else if (k == "p")
            p.params.emplace_back("p", join_ints(opt.p));
        else if (k == "m")
            p.params.emplace_back("m", std::to_string(opt.m));
        else if (k == "k")
            p.params.emplace_back("k", std::to_string(opt.k));
        else if (k == "r")
            p.params.emplace_back("r", std::to_string(opt.r));
        else if (k == "s")
            p.params.emplace_back("s", std::to_string(opt.s));
        else if (k == "max-s")
            p.params.emplace_back("max-s", std::to_string(opt.max_s));
        else if (k == "window" && !opt.window.empty())
            p.params.emplace_back("window", join_ints(opt.window));
        else if (k == "stems")
            p.params.emplace_back("stems",
                                  opt.stems_path.empty() ? "default" : basename_of(opt.stems_path));
        else if (k == "expr")
            p.params.emplace_back("expr", opt.expr);
        else if (k == "in")
            p.params.emplace_back("in", basename_of(opt.input_path));
        else if (k == "total")
            p.params.emplace_back("total", opt.total ? "true" : "false");
    }
    return p;
}

WedgeSignature wedge_of(const Options& opt)
{
    if (opt.q.empty())
        throw ValidationError("--q is required (meridian sphere dimensions)");
    return WedgeSignature(opt.n, opt.q);
}

links::LinkProblem problem_of(const Options& opt)
{
    if (opt.p.empty())
        throw ValidationError("--p is required (component sphere dimensions)");
    return links::LinkProblem(opt.p, opt.m, opt.n);
}

transform::Box box_of(const Options& opt, int arity)
{
    if (opt.window.size() == 2 && arity > 1) {
        transform::Box b;
        for (int i = 0; i < arity; ++i)
            b.axes.emplace_back(opt.window[0], opt.window[1]);
        return b;
    }
    if (static_cast<int>(opt.window.size()) != 2 * arity)
        throw ValidationError("--window needs lo hi per axis (or one pair reused for all axes)");
    transform::Box b;
    for (int i = 0; i < arity; ++i)
        b.axes.emplace_back(opt.window[static_cast<std::size_t>(2 * i)],
                            opt.window[static_cast<std::size_t>(2 * i) + 1]);
    b.validate();
    return b;
}

int run_hilton(const Options& opt)
{
    auto rep = hilton::summand_report(wedge_of(opt), opt.k, graded_window(opt));
    std::cout << io::render_summand_report(rep, prov("hilton", opt, {"n", "q", "k", "window"}),
                                           opt.json);
    return 0;
}

int run_perms(const Options& opt)
{
    auto perms = hopf::enumerate_monotone(opt.r, opt.s);
    std::cout << io::render_perms(perms, prov("perms", opt, {"r", "s"}), opt.json);
    return 0;
}

int run_normalize(const Options& opt)
{
    WedgeSignature sig = wedge_of(opt);
    if (opt.expr.empty())
        throw ValidationError("--expr is required (bracket expression)");
    lie::LieElement x = lie::parse_lie(opt.expr, sig);
    lie::NormalForm nf = lie::normalize(x, sig);
    std::cout << io::render_normal_form(opt.expr, nf,
                                        prov("normalize", opt, {"n", "q", "expr"}), opt.json);
    return 0;
}

int run_basis_matrix(const Options& opt)
{
    auto bm = hopf::basis_matrix_D(wedge_of(opt), opt.s);
    std::cout << io::render_basis_matrix(bm, prov("basis-matrix", opt, {"n", "q", "s"}),
                                         opt.json);
    return 0;
}

int run_btransform(const Options& opt)
{
    if (opt.input_path.empty())
        throw ValidationError("--in is required (JSON payload)");
    if (opt.direction == "forward") {
        auto seq = io::read_sequence(read_file(opt.input_path));
        if (seq.arity == 1) {
            auto d = transform::forward_d(seq, opt.max_s);
            std::map<std::vector<int>, GroupElement> values;
            for (std::size_t s = 0; s < d.size(); ++s)
                values[{static_cast<int>(s)}] = d[s];
            std::cout << io::render_values(
                1, seq.group, values, prov("btransform forward", opt, {"in", "max-s"}),
                opt.json);
        } else {
            auto values = transform::forward_Dprime(seq, opt.max_s);
            std::cout << io::render_values(
                seq.arity, seq.group, values, prov("btransform forward", opt, {"in", "max-s"}),
                opt.json);
        }
        return 0;
    }
    if (opt.direction == "invert") {
        auto file = io::read_values(read_file(opt.input_path));
        transform::Box window = box_of(opt, file.arity);
        transform::SupportedSequence seq;
        if (file.arity == 1) {
            std::vector<GroupElement> d;
            for (int s = 0;; ++s) {
                auto it = file.values.find({s});
                if (it == file.values.end())
                    break;
                d.push_back(it->second);
            }
            if (d.size() != file.values.size())
                throw ValidationError("btransform invert: s indices must be 0,1,2,...");
            seq = transform::invert_d(d, window.axes[0], file.group);
        } else {
            seq = transform::invert_Dprime(file.values, window, file.group);
        }
        std::cout << io::render_sequence(seq, prov("btransform invert", opt, {"in", "window"}),
                                         opt.json);
        return 0;
    }
    throw ValidationError("btransform: direction must be 'forward' or 'invert'");
}

int run_hopf_eval(const Options& opt)
{
    if (opt.input_path.empty())
        throw ValidationError("--in is required (graded dataset JSON)");
    auto data = io::read_dataset(read_file(opt.input_path));
    auto values = hopf::evaluate_H_graded(data, opt.s);
    std::cout << io::render_hopf_eval(opt.s, data.group, values,
                                      prov("hopf-eval", opt, {"in", "s"}), opt.json);
    return 0;
}

int run_reconstruct(const Options& opt)
{
    if (opt.input_path.empty())
        throw ValidationError("--in is required (hopf values JSON)");
    WedgeSignature sig = wedge_of(opt);
    auto file = io::read_hopf_values(read_file(opt.input_path));
    if (file.r != sig.r())
        throw ValidationError("reconstruct: r in the payload does not match --q");
    transform::Box window = box_of(opt, sig.r() - 1);
    auto result = links::reconstruct_kappa(file.values, window, sig, file.group);
    std::cout << io::render_reconstruction(
        result, prov("reconstruct", opt, {"n", "q", "window", "in"}), opt.json);
    return 0;
}

int run_mu_targets(const Options& opt)
{
    auto problem = problem_of(opt);
    auto table = load_stems(opt.stems_path);
    auto domain = links::kappa_domain(problem);
    std::vector<links::MuTarget> targets;
    for (int s = 0; s <= opt.max_s; ++s)
        targets.push_back(links::mu_target(problem, s, table));
    std::cout << io::render_mu_targets(
        domain, targets, prov("mu-targets", opt, {"p", "m", "n", "max-s", "stems"}), opt.json);
    return 0;
}

int run_pipeline(const Options& opt)
{
    auto rep = links::linking_pipeline(problem_of(opt), load_stems(opt.stems_path), opt.max_s);
    std::cout << io::render_pipeline(
        rep, prov("pipeline", opt, {"p", "m", "n", "max-s", "stems"}), opt.json);
    return 0;
}

int run_classify(const Options& opt)
{
    auto problem = problem_of(opt);
    auto table = load_stems(opt.stems_path);
    links::ClassificationReport rep;
    if (opt.total)
        rep = links::classify_total(problem, table, opt.max_s, graded_window(opt));
    else
        rep = links::classify_brunnian(problem, table, opt.max_s);
    std::cout << io::render_classification(
        rep, prov("classify", opt, {"p", "m", "n", "max-s", "total", "window", "stems"}),
        opt.json);
    return 0;
}

int run_check(const Options& opt)
{
    std::vector<suites::SuiteResult> results;
    if (opt.suite.empty())
        results = suites::run_all();
    else
        results.push_back(suites::run_suite(opt.suite));
    std::cout << io::render_suites(results, prov("check", opt, {}), opt.json);
    for (const auto& r : results)
        if (!r.passed)
            return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact calculator for wedge homotopy bookkeeping and higher-order linking invariants"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json, "machine-readable JSON output");
    };

    auto* hilton_cmd = app.add_subcommand("hilton", "Hilton summand report for pi_k of a wedge");
    hilton_cmd->add_option("--n", opt.n, "core sphere dimension");
    hilton_cmd->add_option("--q", opt.q, "meridian sphere dimensions")->expected(-1);
    hilton_cmd->add_option("--k", opt.k, "homotopy degree");
    hilton_cmd->add_option("--window", opt.window, "grade window lo hi (required when n = 1)")
        ->expected(2);
    add_common(hilton_cmd);

    auto* perms_cmd = app.add_subcommand("perms", "enumerate s-monotone permutations");
    perms_cmd->add_option("--r", opt.r, "number of link components");
    perms_cmd->add_option("--s", opt.s, "order s");
    add_common(perms_cmd);

    auto* norm_cmd = app.add_subcommand("normalize", "rewrite a bracket expression into combs");
    norm_cmd->add_option("--n", opt.n, "core sphere dimension");
    norm_cmd->add_option("--q", opt.q, "meridian sphere dimensions")->expected(-1);
    norm_cmd->add_option("--expr", opt.expr, "bracket expression");
    add_common(norm_cmd);

    auto* bm_cmd = app.add_subcommand("basis-matrix", "change of basis between basic products and combs");
    bm_cmd->add_option("--n", opt.n, "core sphere dimension");
    bm_cmd->add_option("--q", opt.q, "meridian sphere dimensions")->expected(-1);
    bm_cmd->add_option("--s", opt.s, "core multiplicity s");
    add_common(bm_cmd);

    auto* bt_cmd = app.add_subcommand("btransform", "binomial transform of a supported sequence");
    bt_cmd->add_option("direction", opt.direction, "forward | invert")->required();
    bt_cmd->add_option("--in", opt.input_path, "sequence / values JSON file");
    bt_cmd->add_option("--max-s", opt.max_s, "top transform order (forward)");
    bt_cmd->add_option("--window", opt.window, "support window lo hi per axis (invert)")
        ->expected(-1);
    add_common(bt_cmd);

    auto* he_cmd = app.add_subcommand("hopf-eval", "evaluate the order-s Hopf homomorphisms on a graded dataset");
    he_cmd->add_option("--in", opt.input_path, "graded dataset JSON file");
    he_cmd->add_option("--s", opt.s, "order s");
    add_common(he_cmd);

    auto* rec_cmd = app.add_subcommand("reconstruct", "recover the graded dataset from Hopf values");
    rec_cmd->add_option("--n", opt.n, "core sphere dimension");
    rec_cmd->add_option("--q", opt.q, "meridian sphere dimensions")->expected(-1);
    rec_cmd->add_option("--in", opt.input_path, "hopf values JSON file");
    rec_cmd->add_option("--window", opt.window, "support window lo hi per axis")->expected(-1);
    add_common(rec_cmd);

    auto* mu_cmd = app.add_subcommand("mu-targets", "target groups of the order-s invariants");
    mu_cmd->add_option("--p", opt.p, "component sphere dimensions")->expected(-1);
    mu_cmd->add_option("--m", opt.m, "ambient dimension");
    mu_cmd->add_option("--n", opt.n, "core sphere dimension");
    mu_cmd->add_option("--max-s", opt.max_s, "sweep s = 0..max-s");
    mu_cmd->add_option("--stems", opt.stems_path, "stable stem table JSON file");
    add_common(mu_cmd);

    auto* pipe_cmd = app.add_subcommand("pipeline", "linking-coefficient pipeline report");
    pipe_cmd->add_option("--p", opt.p, "component sphere dimensions")->expected(-1);
    pipe_cmd->add_option("--m", opt.m, "ambient dimension");
    pipe_cmd->add_option("--n", opt.n, "core sphere dimension");
    pipe_cmd->add_option("--max-s", opt.max_s, "sweep s = 0..max-s");
    pipe_cmd->add_option("--stems", opt.stems_path, "stable stem table JSON file");
    add_common(pipe_cmd);

    auto* cls_cmd = app.add_subcommand("classify", "assemble classification target groups");
    cls_cmd->add_option("--p", opt.p, "component sphere dimensions")->expected(-1);
    cls_cmd->add_option("--m", opt.m, "ambient dimension");
    cls_cmd->add_option("--n", opt.n, "core sphere dimension");
    cls_cmd->add_option("--max-s", opt.max_s, "sweep s = 0..max-s");
    cls_cmd->add_flag("--total", opt.total, "total invariant container (all sublinks)");
    cls_cmd->add_option("--window", opt.window, "grade window lo hi (n = 1)")->expected(2);
    cls_cmd->add_option("--stems", opt.stems_path, "stable stem table JSON file");
    add_common(cls_cmd);

    auto* check_cmd = app.add_subcommand("check", "run the invariant sweep suites");
    check_cmd->add_option("--suite", opt.suite, "run a single named suite");
    add_common(check_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (hilton_cmd->parsed())
            return run_hilton(opt);
        if (perms_cmd->parsed())
            return run_perms(opt);
        if (norm_cmd->parsed())
            return run_normalize(opt);
        if (bm_cmd->parsed())
            return run_basis_matrix(opt);
        if (bt_cmd->parsed())
            return run_btransform(opt);
        if (he_cmd->parsed())
            return run_hopf_eval(opt);
        if (rec_cmd->parsed())
            return run_reconstruct(opt);
        if (mu_cmd->parsed())
            return run_mu_targets(opt);
        if (pipe_cmd->parsed())
            return run_pipeline(opt);
        if (cls_cmd->parsed())
            return run_classify(opt);
        if (check_cmd->parsed())
            return run_check(opt);
    } catch (const muinv::WindowInconsistency& e) {
        std::cerr << "window inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const muinv::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
