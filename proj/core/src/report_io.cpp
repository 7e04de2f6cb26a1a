#include "muinv/report_io.hpp"

#include <sstream>

#include "json.hpp"

#include "muinv/expr.hpp"

namespace muinv {
namespace io {

namespace {

using json = nlohmann::ordered_json;

// ---- shared encoding helpers ----------------------------------------------

json int_str(const Int& v) { return v.str(); }
json int_str(long long v) { return std::to_string(v); }

template <typename T>
json vec_str(const std::vector<T>& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(int_str(x));
    return a;
}

json group_json(const AbelianGroup& g)
{
    json j;
    j["free"] = int_str(static_cast<long long>(g.free_rank));
    j["torsion"] = vec_str(g.torsion);
    if (g.unknown)
        j["unknown"] = true;
    return j;
}

json element_json(const GroupElement& e)
{
    json j;
    j["free"] = vec_str(e.free_part);
    j["torsion"] = vec_str(e.torsion_part);
    return j;
}

json header(const Provenance& prov)
{
    json j;
    j["command"] = prov.command;
    json params;
    for (const auto& [k, v] : prov.params)
        params[k] = v;
    j["params"] = params;
    return j;
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

void text_header(std::ostream& out, const Provenance& prov)
{
    out << "muinv " << prov.command;
    for (const auto& [k, v] : prov.params)
        out << "  " << k << "=" << v;
    out << "\n";
}

// ---- decoding helpers ------------------------------------------------------

long long read_ll(const json& v, const char* what)
{
    if (v.is_number_integer())
        return v.get<long long>();
    if (v.is_string())
        return std::stoll(v.get<std::string>());
    throw ValidationError(std::string(what) + ": expected an integer or integer string");
}

Int read_int(const json& v, const char* what)
{
    if (v.is_number_integer())
        return Int(v.get<long long>());
    if (v.is_string())
        return parse_int(v.get<std::string>());
    throw ValidationError(std::string(what) + ": expected an integer or integer string");
}

json parse_doc(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid JSON payload: ") + e.what());
    }
}

AbelianGroup read_group(const json& j)
{
    if (!j.is_object())
        throw ValidationError("group: expected an object {free, torsion}");
    long long free_rank = j.contains("free") ? read_ll(j.at("free"), "group.free") : 0;
    std::vector<long long> torsion;
    if (j.contains("torsion"))
        for (const auto& m : j.at("torsion"))
            torsion.push_back(read_ll(m, "group.torsion"));
    return AbelianGroup::make(free_rank, std::move(torsion));
}

GroupElement read_element(const json& j, const AbelianGroup& g)
{
    GroupElement e;
    if (!j.is_object())
        throw ValidationError("value: expected an object {free, torsion}");
    if (j.contains("free"))
        for (const auto& v : j.at("free"))
            e.free_part.push_back(read_int(v, "value.free"));
    if (j.contains("torsion"))
        for (const auto& v : j.at("torsion"))
            e.torsion_part.push_back(read_int(v, "value.torsion"));
    return reduce_element(std::move(e), g);
}

template <typename T>
std::vector<T> read_ll_vector(const json& j, const char* what)
{
    std::vector<T> out;
    if (!j.is_array())
        throw ValidationError(std::string(what) + ": expected an array");
    for (const auto& v : j)
        out.push_back(static_cast<T>(read_ll(v, what)));
    return out;
}

}  // namespace

// ---- input payloads ---------------------------------------------------------

transform::SupportedSequence read_sequence(const std::string& json_text)
{
    json j = parse_doc(json_text);
    transform::SupportedSequence seq;
    if (!j.contains("arity"))
        throw ValidationError("sequence: missing 'arity'");
    seq.arity = static_cast<int>(read_ll(j.at("arity"), "arity"));
    if (j.contains("group")) {
        seq.group = read_group(j.at("group"));
    } else {
        seq.group = AbelianGroup::make(1, {});  // plain integers
    }
    if (j.contains("window")) {
        transform::Box box;
        for (const auto& iv : j.at("window")) {
            if (!iv.is_array() || iv.size() != 2)
                throw ValidationError("sequence: window entries must be [lo, hi]");
            box.axes.emplace_back(read_ll(iv[0], "window.lo"), read_ll(iv[1], "window.hi"));
        }
        box.validate();
        seq.window = box;
    }
    if (j.contains("entries"))
        for (const auto& e : j.at("entries"))
            seq.insert(read_ll_vector<long long>(e.at("g"), "entry.g"),
                       read_element(e.at("value"), seq.group));
    return seq;
}

ValuesFile read_values(const std::string& json_text)
{
    json j = parse_doc(json_text);
    ValuesFile f;
    if (!j.contains("arity"))
        throw ValidationError("values: missing 'arity'");
    f.arity = static_cast<int>(read_ll(j.at("arity"), "arity"));
    f.group = j.contains("group") ? read_group(j.at("group")) : AbelianGroup::make(1, {});
    if (!j.contains("values"))
        throw ValidationError("values: missing 'values'");
    for (const auto& e : j.at("values")) {
        auto s = read_ll_vector<int>(e.at("s"), "values.s");
        if (static_cast<int>(s.size()) != f.arity)
            throw ValidationError("values: index arity mismatch");
        f.values[s] = read_element(e.at("value"), f.group);
    }
    return f;
}

hopf::GradedHopfDataset read_dataset(const std::string& json_text)
{
    json j = parse_doc(json_text);
    hopf::GradedHopfDataset d;
    if (!j.contains("r"))
        throw ValidationError("dataset: missing 'r'");
    d.r = static_cast<int>(read_ll(j.at("r"), "r"));
    d.group = j.contains("group") ? read_group(j.at("group")) : AbelianGroup::make(1, {});
    if (j.contains("entries"))
        for (const auto& e : j.at("entries"))
            d.insert(read_ll_vector<long long>(e.at("g"), "entry.g"),
                     read_ll_vector<int>(e.at("perm"), "entry.perm"),
                     read_element(e.at("value"), d.group));
    d.validate();
    return d;
}

HopfValuesFile read_hopf_values(const std::string& json_text)
{
    json j = parse_doc(json_text);
    HopfValuesFile f;
    if (!j.contains("r"))
        throw ValidationError("hopf values: missing 'r'");
    f.r = static_cast<int>(read_ll(j.at("r"), "r"));
    f.group = j.contains("group") ? read_group(j.at("group")) : AbelianGroup::make(1, {});
    if (!j.contains("values"))
        throw ValidationError("hopf values: missing 'values'");
    for (const auto& e : j.at("values")) {
        auto s = read_ll_vector<int>(e.at("s"), "values.s");
        auto perm = read_ll_vector<int>(e.at("perm"), "values.perm");
        f.values[{s, perm}] = read_element(e.at("value"), f.group);
    }
    return f;
}

// ---- reports ----------------------------------------------------------------

std::string render_summand_report(const hilton::SummandReport& rep, const Provenance& prov,
                                  bool with_json)
{
    if (with_json) {
        json j = header(prov);
        j["k"] = int_str(static_cast<long long>(rep.k));
        if (rep.window) {
            j["window"] = json::array(
                {int_str(static_cast<long long>(rep.window->first)),
                 int_str(static_cast<long long>(rep.window->second))});
        }
        json entries = json::array();
        for (const auto& e : rep.entries) {
            json row;
            row["tree"] = e.product.tree.text();
            row["t"] = int_str(static_cast<long long>(e.product.t));
            row["counts"] = vec_str(e.product.family_counts);
            row["sphere_dim"] = int_str(static_cast<long long>(e.product.sphere_dim));
            row["group"] = e.group;
            row["class"] = hilton::summand_class_name(e.cls);
            entries.push_back(std::move(row));
        }
        j["entries"] = std::move(entries);
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    out << "summands of pi_" << rep.k << " (" << rep.entries.size() << " entries)\n";
    for (const auto& e : rep.entries) {
        out << "  " << e.group << "  d_w=" << e.product.sphere_dim << "  t=" << e.product.t
            << "  " << hilton::summand_class_name(e.cls) << "  " << e.product.tree.text()
            << "\n";
    }
    return out.str();
}

std::string render_perms(const std::vector<hopf::MonotonePermutation>& perms,
                         const Provenance& prov, bool with_json)
{
    if (with_json) {
        json j = header(prov);
        j["count"] = int_str(static_cast<long long>(perms.size()));
        json list = json::array();
        for (const auto& g : perms) {
            json row;
            row["values"] = vec_str(g.values);
            row["s_decomp"] = vec_str(g.s_decomp);
            row["gamma_bar"] = vec_str(g.gamma_bar);
            list.push_back(std::move(row));
        }
        j["permutations"] = std::move(list);
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    out << perms.size() << " monotone permutations\n";
    for (const auto& g : perms) {
        out << "  " << g.values_text() << "  (s)=(";
        for (std::size_t i = 0; i < g.s_decomp.size(); ++i)
            out << (i ? "," : "") << g.s_decomp[i];
        out << ")  gamma_bar=(";
        for (std::size_t i = 0; i < g.gamma_bar.size(); ++i)
            out << (i ? "," : "") << g.gamma_bar[i];
        out << ")\n";
    }
    return out.str();
}

std::string render_normal_form(const std::string& input_text, const lie::NormalForm& nf,
                               const Provenance& prov, bool with_json)
{
    if (with_json) {
        json j = header(prov);
        j["input"] = input_text;
        json terms = json::array();
        for (const auto& [delta, c] : nf.coef) {
            json row;
            row["delta"] = vec_str(delta.values);
            row["coefficient"] = int_str(c);
            row["comb"] = nf.comb(delta).text();
            terms.push_back(std::move(row));
        }
        j["normal_form"] = std::move(terms);
        j["text"] = lie::normal_form_text(nf);
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    out << "input:  " << input_text << "\n";
    out << "normal: " << lie::normal_form_text(nf) << "\n";
    for (const auto& [delta, c] : nf.coef)
        out << "  delta=" << delta.text() << "  coeff=" << c.str() << "\n";
    return out.str();
}

std::string render_basis_matrix(const hopf::BasisMatrix& bm, const Provenance& prov,
                                bool with_json)
{
    if (with_json) {
        json j = header(prov);
        json rows = json::array();
        for (const auto& w : bm.row_products)
            rows.push_back(w.tree.text());
        j["rows"] = std::move(rows);
        json cols = json::array();
        for (const auto& d : bm.col_arrangements)
            cols.push_back(vec_str(d.values));
        j["cols"] = std::move(cols);
        json mat = json::array();
        for (std::size_t r = 0; r < bm.matrix.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < bm.matrix.cols(); ++c)
                row.push_back(int_str(bm.matrix(r, c)));
            mat.push_back(std::move(row));
        }
        j["matrix"] = std::move(mat);
        j["det"] = int_str(bm.det);
        j["unimodular"] = bm.unimodular;
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    out << bm.matrix.rows() << "x" << bm.matrix.cols() << " matrix, det=" << bm.det.str()
        << (bm.unimodular ? " (unimodular)" : " (NOT unimodular)") << "\n";
    for (std::size_t r = 0; r < bm.matrix.rows(); ++r) {
        out << "  [";
        for (std::size_t c = 0; c < bm.matrix.cols(); ++c)
            out << (c ? " " : "") << bm.matrix(r, c).str();
        out << "]  " << bm.row_products[r].tree.text() << "\n";
    }
    out << "columns:";
    for (const auto& d : bm.col_arrangements)
        out << " " << d.text();
    out << "\n";
    return out.str();
}

std::string render_sequence(const transform::SupportedSequence& seq, const Provenance& prov,
                            bool with_json)
{
    if (with_json) {
        json j = header(prov);
        j["arity"] = int_str(static_cast<long long>(seq.arity));
        j["group"] = group_json(seq.group);
        if (seq.window) {
            json w = json::array();
            for (const auto& [lo, hi] : seq.window->axes)
                w.push_back(json::array({int_str(lo), int_str(hi)}));
            j["window"] = std::move(w);
        }
        json entries = json::array();
        for (const auto& [g, v] : seq.entries) {
            json row;
            row["g"] = vec_str(g);
            row["value"] = element_json(v);
            entries.push_back(std::move(row));
        }
        j["entries"] = std::move(entries);
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    out << "sequence (arity " << seq.arity << ", group " << seq.group.to_string() << ", "
        << seq.entries.size() << " entries)\n";
    for (const auto& [g, v] : seq.entries) {
        out << "  g=(";
        for (std::size_t i = 0; i < g.size(); ++i)
            out << (i ? "," : "") << g[i];
        out << ")  free=[";
        for (std::size_t i = 0; i < v.free_part.size(); ++i)
            out << (i ? "," : "") << v.free_part[i].str();
        out << "] torsion=[";
        for (std::size_t i = 0; i < v.torsion_part.size(); ++i)
            out << (i ? "," : "") << v.torsion_part[i].str();
        out << "]\n";
    }
    return out.str();
}

std::string render_values(int arity, const AbelianGroup& group,
                          const std::map<std::vector<int>, GroupElement>& values,
                          const Provenance& prov, bool with_json)
{
    if (with_json) {
        json j = header(prov);
        j["arity"] = int_str(static_cast<long long>(arity));
        j["group"] = group_json(group);
        json list = json::array();
        for (const auto& [s, v] : values) {
            json row;
            row["s"] = vec_str(s);
            row["value"] = element_json(v);
            list.push_back(std::move(row));
        }
        j["values"] = std::move(list);
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    out << "transform values (arity " << arity << ", group " << group.to_string() << ")\n";
    for (const auto& [s, v] : values) {
        out << "  s=(";
        for (std::size_t i = 0; i < s.size(); ++i)
            out << (i ? "," : "") << s[i];
        out << ")  free=[";
        for (std::size_t i = 0; i < v.free_part.size(); ++i)
            out << (i ? "," : "") << v.free_part[i].str();
        out << "] torsion=[";
        for (std::size_t i = 0; i < v.torsion_part.size(); ++i)
            out << (i ? "," : "") << v.torsion_part[i].str();
        out << "]\n";
    }
    return out.str();
}

std::string render_hopf_eval(
    int s, const AbelianGroup& group,
    const std::vector<std::pair<hopf::MonotonePermutation, GroupElement>>& values,
    const Provenance& prov, bool with_json)
{
    if (with_json) {
        json j = header(prov);
        j["s"] = int_str(static_cast<long long>(s));
        j["group"] = group_json(group);
        json list = json::array();
        for (const auto& [gamma, v] : values) {
            json row;
            row["gamma"] = vec_str(gamma.values);
            row["s_decomp"] = vec_str(gamma.s_decomp);
            row["gamma_bar"] = vec_str(gamma.gamma_bar);
            row["value"] = element_json(v);
            list.push_back(std::move(row));
        }
        j["values"] = std::move(list);
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    out << "H_" << s << " values (" << values.size() << " monotone permutations)\n";
    for (const auto& [gamma, v] : values) {
        out << "  gamma=" << gamma.values_text() << "  value free=[";
        for (std::size_t i = 0; i < v.free_part.size(); ++i)
            out << (i ? "," : "") << v.free_part[i].str();
        out << "] torsion=[";
        for (std::size_t i = 0; i < v.torsion_part.size(); ++i)
            out << (i ? "," : "") << v.torsion_part[i].str();
        out << "]\n";
    }
    return out.str();
}

std::string render_reconstruction(const links::ReconstructionResult& result,
                                  const Provenance& prov, bool with_json)
{
    if (with_json) {
        json j = header(prov);
        json fam = json::array();
        for (const auto& [key, v] : result.h_family.entries) {
            json row;
            row["g"] = vec_str(key.first);
            row["perm"] = vec_str(key.second);
            row["value"] = element_json(v);
            fam.push_back(std::move(row));
        }
        j["h_family"] = std::move(fam);
        json basis = json::array();
        for (const auto& w : result.basis)
            basis.push_back(w.tree.text());
        j["basis"] = std::move(basis);
        json coords = json::array();
        for (const auto& [key, v] : result.hilton_coords) {
            json row;
            row["g"] = vec_str(key.first);
            row["row"] = int_str(static_cast<long long>(key.second));
            row["tree"] = result.basis[key.second].tree.text();
            row["value"] = element_json(v);
            coords.push_back(std::move(row));
        }
        j["basis_coordinates"] = std::move(coords);
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    out << "recovered h-family (" << result.h_family.entries.size() << " entries)\n";
    for (const auto& [key, v] : result.h_family.entries) {
        out << "  g=(";
        for (std::size_t i = 0; i < key.first.size(); ++i)
            out << (i ? "," : "") << key.first[i];
        out << ") perm=(";
        for (std::size_t i = 0; i < key.second.size(); ++i)
            out << (i ? "," : "") << key.second[i];
        out << ")  free=[";
        for (std::size_t i = 0; i < v.free_part.size(); ++i)
            out << (i ? "," : "") << v.free_part[i].str();
        out << "]\n";
    }
    out << "basis coordinates (" << result.hilton_coords.size() << " nonzero)\n";
    for (const auto& [key, v] : result.hilton_coords) {
        out << "  g=(";
        for (std::size_t i = 0; i < key.first.size(); ++i)
            out << (i ? "," : "") << key.first[i];
        out << ")  " << result.basis[key.second].tree.text() << "  free=[";
        for (std::size_t i = 0; i < v.free_part.size(); ++i)
            out << (i ? "," : "") << v.free_part[i].str();
        out << "]\n";
    }
    return out.str();
}

std::string render_mu_targets(const links::KappaDomainReport& domain,
                              const std::vector<links::MuTarget>& targets,
                              const Provenance& prov, bool with_json)
{
    if (with_json) {
        json j = header(prov);
        json dom;
        dom["n"] = int_str(static_cast<long long>(domain.sig.n));
        dom["q"] = vec_str(domain.sig.q);
        dom["k"] = int_str(domain.k);
        dom["|p| <= r(m-2)"] = domain.reconstruction_hypothesis;
        dom["k <= 2(|q|-r+1)"] = domain.predicates.hopf_injective_total;
        dom["k <= |q|+q_j-r"] = domain.predicates.reduced_equals_double_prime;
        j["domain"] = std::move(dom);
        json list = json::array();
        for (const auto& t : targets) {
            json row;
            row["s"] = int_str(static_cast<long long>(t.s));
            row["stem_degree"] = int_str(t.stem_degree);
            row["multiplicity"] = int_str(t.multiplicity);
            row["group"] = t.group.to_string();
            row["stem"] = t.stem_cite;
            list.push_back(std::move(row));
        }
        j["targets"] = std::move(list);
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    out << "domain wedge: n=" << domain.sig.n << " q=(";
    for (std::size_t i = 0; i < domain.sig.q.size(); ++i)
        out << (i ? "," : "") << domain.sig.q[i];
    out << ") k=" << domain.k << "  |p|<=r(m-2): " << (domain.reconstruction_hypothesis ? "yes" : "no")
        << "\n";
    for (const auto& t : targets)
        out << "  s=" << t.s << "  stem " << t.stem_degree << "  x" << t.multiplicity.str()
            << "  " << t.group.to_string() << "   [" << t.stem_cite << "]\n";
    return out.str();
}

std::string render_pipeline(const links::PipelineReport& rep, const Provenance& prov,
                            bool with_json)
{
    if (with_json) {
        json j = header(prov);
        json wedge;
        wedge["n"] = int_str(static_cast<long long>(rep.wedge.n));
        wedge["q"] = vec_str(rep.wedge.q);
        j["wedge"] = std::move(wedge);
        j["p_r/2 <= sum(m-p_j-2)"] = rep.stable_overall;
        json rows = json::array();
        for (const auto& row : rep.rows) {
            json r;
            r["s"] = int_str(static_cast<long long>(row.s));
            r["k_s"] = int_str(row.k_s);
            r["lambda_component"] = row.lambda_group;
            r["mu_group"] = row.mu.group.to_string();
            r["mu_stem_degree"] = int_str(row.mu.stem_degree);
            r["multiplicity"] = int_str(row.mu.multiplicity);
            r["p_r/2 <= s(n-1)+sum(m-p_j-2)"] = row.stable_at_s;
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        j["stems_used"] = rep.stems_used;
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    out << "linking wedge: n=" << rep.wedge.n << " q=(";
    for (std::size_t i = 0; i < rep.wedge.q.size(); ++i)
        out << (i ? "," : "") << rep.wedge.q[i];
    out << ")  stable overall: " << (rep.stable_overall ? "yes" : "no") << "\n";
    for (const auto& row : rep.rows)
        out << "  s=" << row.s << "  k_s=" << row.k_s << "  lambda in " << row.lambda_group
            << "  mu target " << row.mu.group.to_string() << " (stem " << row.mu.stem_degree
            << ", x" << row.mu.multiplicity.str() << ")"
            << (row.stable_at_s ? "  [stable]" : "") << "\n";
    for (const auto& s : rep.stems_used)
        out << "  uses " << s << "\n";
    return out.str();
}

std::string render_classification(const links::ClassificationReport& rep,
                                  const Provenance& prov, bool with_json)
{
    if (with_json) {
        json j = header(prov);
        json assumptions = json::array();
        for (const auto& [name, ok] : rep.assumptions) {
            json a;
            a["name"] = name;
            a["satisfied"] = ok;
            assumptions.push_back(std::move(a));
        }
        j["assumptions"] = std::move(assumptions);
        json summands = json::array();
        for (const auto& s : rep.summands) {
            json row;
            row["label"] = s.label;
            row["multiplicity"] = int_str(s.multiplicity);
            row["stem_degree"] = int_str(s.stem_degree);
            row["group"] = s.group.to_string();
            summands.push_back(std::move(row));
        }
        j["summands"] = std::move(summands);
        j["symbolic"] = rep.symbolic;
        j["group"] = rep.assembled.to_string();
        j["caveats"] = rep.caveats;
        j["stems_used"] = rep.stems_used;
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    for (const auto& [name, ok] : rep.assumptions)
        out << "  assumption " << name << ": " << (ok ? "yes" : "NO") << "\n";
    for (const auto& s : rep.summands)
        out << "  summand " << s.label << ": " << s.group.to_string() << " (stem "
            << s.stem_degree << ", x" << s.multiplicity.str() << ")\n";
    for (const auto& s : rep.symbolic)
        out << "  symbolic " << s << "\n";
    out << "group: " << rep.assembled.to_string() << "\n";
    for (const auto& cv : rep.caveats)
        out << "  caveat: " << cv << "\n";
    for (const auto& s : rep.stems_used)
        out << "  uses " << s << "\n";
    return out.str();
}

std::string render_suites(const std::vector<suites::SuiteResult>& results,
                          const Provenance& prov, bool with_json)
{
    if (with_json) {
        json j = header(prov);
        json list = json::array();
        for (const auto& r : results) {
            json row;
            row["suite"] = r.name;
            row["passed"] = r.passed;
            row["notes"] = r.notes;
            list.push_back(std::move(row));
        }
        j["suites"] = std::move(list);
        return finish(j);
    }
    std::ostringstream out;
    text_header(out, prov);
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "\n";
        for (const auto& n : r.notes)
            out << "       " << n << "\n";
    }
    return out.str();
}

}  // namespace io
}  // namespace muinv
