#include "muinv/stems.hpp"

#include <sstream>

#include "json.hpp"

namespace muinv {
namespace links {

StableStemTable StableStemTable::standard_default()
{
    StableStemTable t;
    t.entries_[0] = AbelianGroup::cyclic(0);    // Z
    t.entries_[1] = AbelianGroup::cyclic(2);    // Z_2
    t.entries_[2] = AbelianGroup::cyclic(2);    // Z_2
    t.entries_[3] = AbelianGroup::cyclic(24);   // Z_24
    t.entries_[4] = AbelianGroup::zero();
    t.entries_[5] = AbelianGroup::zero();
    t.entries_[6] = AbelianGroup::cyclic(2);    // Z_2
    t.entries_[7] = AbelianGroup::cyclic(240);  // Z_240
    t.max_degree_ = 7;
    t.origin_ = "default";
    return t;
}

StableStemTable StableStemTable::from_json(const std::string& json_text, std::string origin)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("stem table: invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ValidationError("stem table: expected an object mapping degree -> group");
    StableStemTable t;
    t.origin_ = std::move(origin);
    auto read_ll = [](const nlohmann::json& v) -> long long {
        if (v.is_number_integer())
            return v.get<long long>();
        if (v.is_string())
            return std::stoll(v.get<std::string>());
        throw ValidationError("stem table: expected integer or integer string");
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        long long d = std::stoll(it.key());
        if (d < 0)
            throw ValidationError("stem table: degrees must be >= 0");
        const auto& entry = it.value();
        long long free_rank = entry.contains("free") ? read_ll(entry.at("free")) : 0;
        std::vector<long long> torsion;
        if (entry.contains("torsion"))
            for (const auto& m : entry.at("torsion"))
                torsion.push_back(read_ll(m));
        t.entries_[d] = AbelianGroup::make(free_rank, std::move(torsion));
        t.max_degree_ = std::max(t.max_degree_, d);
    }
    if (t.entries_.empty())
        throw ValidationError("stem table: empty table");
    // degrees must be contiguous from 0 so "beyond the table" is well defined
    for (long long d = 0; d <= t.max_degree_; ++d)
        if (!t.entries_.count(d))
            throw ValidationError("stem table: missing degree " + std::to_string(d));
    return t;
}

AbelianGroup StableStemTable::stem(long long d) const
{
    if (d < 0)
        return AbelianGroup::zero();
    auto it = entries_.find(d);
    if (it == entries_.end())
        return AbelianGroup::unknown_group();
    return it->second;
}

std::string StableStemTable::cite(long long d) const
{
    std::ostringstream out;
    out << "pi^S_" << d << " = " << stem(d).to_string() << " [" << origin_ << "]";
    return out.str();
}

}  // namespace links
}  // namespace muinv
