#ifndef MUINV_STEMS_HPP
#define MUINV_STEMS_HPP

#include <map>
#include <string>

#include "muinv/abelian.hpp"

namespace muinv {
namespace links {

// Configurable table of stable stems pi^S_d.  Negative degrees are the zero
// group; degrees above the table are reported as unknown rather than guessed.
// The shipped default covers d = 0..7 from the standard tables; it is a
// replaceable data input and reports always cite which entries were used.
class StableStemTable {
public:
    static StableStemTable standard_default();
    static StableStemTable from_json(const std::string& json_text, std::string origin);

    AbelianGroup stem(long long d) const;
    long long max_degree() const { return max_degree_; }
    const std::string& origin() const { return origin_; }
    const std::map<long long, AbelianGroup>& entries() const { return entries_; }

    std::string cite(long long d) const;  // "pi^S_1 = Z_2 [default]"

private:
    std::map<long long, AbelianGroup> entries_;
    long long max_degree_ = -1;
    std::string origin_ = "default";
};

}  // namespace links
}  // namespace muinv

#endif
