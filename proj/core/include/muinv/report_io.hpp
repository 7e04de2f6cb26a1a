#ifndef MUINV_REPORT_IO_HPP
#define MUINV_REPORT_IO_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "muinv/hilton.hpp"
#include "muinv/hopf.hpp"
#include "muinv/links.hpp"
#include "muinv/suites.hpp"
#include "muinv/transform.hpp"

namespace muinv {
namespace io {

// Everything that influenced a run is echoed into the output header, so a
// report is reproducible from its own text.  All integers are serialized as
// strings to keep arbitrary precision intact for consumers.
struct Provenance {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
};

// --- input payloads (JSON; numbers may be given as numbers or strings) ------

transform::SupportedSequence read_sequence(const std::string& json_text);

struct ValuesFile {
    int arity = 1;
    AbelianGroup group;
    std::map<std::vector<int>, GroupElement> values;
};
ValuesFile read_values(const std::string& json_text);

hopf::GradedHopfDataset read_dataset(const std::string& json_text);

struct HopfValuesFile {
    int r = 2;
    AbelianGroup group;
    std::map<std::pair<std::vector<int>, std::vector<int>>, GroupElement> values;
};
HopfValuesFile read_hopf_values(const std::string& json_text);

// --- report rendering (text table or JSON document, trailing newline) -------

std::string render_summand_report(const hilton::SummandReport& rep, const Provenance& prov,
                                  bool json);
std::string render_perms(const std::vector<hopf::MonotonePermutation>& perms,
                         const Provenance& prov, bool json);
std::string render_normal_form(const std::string& input_text, const lie::NormalForm& nf,
                               const Provenance& prov, bool json);
std::string render_basis_matrix(const hopf::BasisMatrix& bm, const Provenance& prov, bool json);
std::string render_sequence(const transform::SupportedSequence& seq, const Provenance& prov,
                            bool json);
std::string render_values(int arity, const AbelianGroup& group,
                          const std::map<std::vector<int>, GroupElement>& values,
                          const Provenance& prov, bool json);
std::string render_hopf_eval(
    int s, const AbelianGroup& group,
    const std::vector<std::pair<hopf::MonotonePermutation, GroupElement>>& values,
    const Provenance& prov, bool json);
std::string render_reconstruction(const links::ReconstructionResult& result,
                                  const Provenance& prov, bool json);
std::string render_mu_targets(const links::KappaDomainReport& domain,
                              const std::vector<links::MuTarget>& targets,
                              const Provenance& prov, bool json);
std::string render_pipeline(const links::PipelineReport& rep, const Provenance& prov, bool json);
std::string render_classification(const links::ClassificationReport& rep,
                                  const Provenance& prov, bool json);
std::string render_suites(const std::vector<suites::SuiteResult>& results,
                          const Provenance& prov, bool json);

}  // namespace io
}  // namespace muinv

#endif
