#include "muinv/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace muinv {

AbelianGroup AbelianGroup::cyclic(long long m)
{
    if (m < 0)
        throw ValidationError("AbelianGroup::cyclic: modulus must be >= 0");
    AbelianGroup g;
    if (m == 0)
        g.free_rank = 1;
    else if (m == 1)
        ;  // trivial group
    else
        g.torsion.push_back(m);
    return g;
}

namespace {

std::map<long long, std::vector<int>> prime_power_profile(const std::vector<long long>& moduli)
{
    // prime -> exponents, one entry per modulus containing that prime
    std::map<long long, std::vector<int>> profile;
    for (long long m : moduli) {
        long long rest = m;
        for (long long p = 2; p * p <= rest; ++p) {
            if (rest % p)
                continue;
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            profile[p].push_back(e);
        }
        if (rest > 1)
            profile[rest].push_back(1);
    }
    return profile;
}

}  // namespace

AbelianGroup AbelianGroup::make(long long free_rank, std::vector<long long> torsion)
{
    if (free_rank < 0)
        throw ValidationError("AbelianGroup::make: negative free rank");
    std::vector<long long> moduli;
    for (long long m : torsion) {
        if (m < 2) {
            if (m == 1)
                continue;  // trivial factor
            throw ValidationError("AbelianGroup::make: torsion coefficients must be >= 2");
        }
        moduli.push_back(m);
    }
    // Invariant-factor form: per prime, sort exponents descending and recombine
    // so the largest powers share one factor.
    auto profile = prime_power_profile(moduli);
    std::size_t chain_len = 0;
    for (auto& [p, exps] : profile) {
        std::sort(exps.begin(), exps.end(), std::greater<int>());
        chain_len = std::max(chain_len, exps.size());
    }
    std::vector<long long> chain(chain_len, 1);
    for (auto& [p, exps] : profile) {
        for (std::size_t i = 0; i < exps.size(); ++i) {
            long long pw = 1;
            for (int e = 0; e < exps[i]; ++e)
                pw *= p;
            chain[i] *= pw;
        }
    }
    std::reverse(chain.begin(), chain.end());  // ascending: d1 | d2 | ...
    AbelianGroup g;
    g.free_rank = free_rank;
    g.torsion = std::move(chain);
    return g;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const
{
    if (unknown || other.unknown)
        return unknown_group();
    std::vector<long long> torsions = torsion;
    torsions.insert(torsions.end(), other.torsion.begin(), other.torsion.end());
    return make(free_rank + other.free_rank, std::move(torsions));
}

AbelianGroup AbelianGroup::power(long long copies) const
{
    if (copies < 0)
        throw ValidationError("AbelianGroup::power: negative exponent");
    if (copies == 0)
        return zero();
    if (unknown)
        return unknown_group();
    std::vector<long long> torsions;
    torsions.reserve(torsion.size() * static_cast<std::size_t>(copies));
    for (long long i = 0; i < copies; ++i)
        torsions.insert(torsions.end(), torsion.begin(), torsion.end());
    return make(free_rank * copies, std::move(torsions));
}

std::string AbelianGroup::to_string() const
{
    if (unknown)
        return "unknown";
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank == 1) {
        out << "Z";
        first = false;
    } else if (free_rank > 1) {
        out << "Z^" << free_rank;
        first = false;
    }
    for (long long d : torsion) {
        if (!first)
            out << " + ";
        out << "Z_" << d;
        first = false;
    }
    return out.str();
}

GroupElement zero_element(const AbelianGroup& g)
{
    GroupElement e;
    e.free_part.assign(static_cast<std::size_t>(g.free_rank), Int(0));
    e.torsion_part.assign(g.torsion.size(), Int(0));
    return e;
}

GroupElement reduce_element(GroupElement e, const AbelianGroup& g)
{
    if (g.unknown)
        throw ValidationError("GroupElement: ambient group must be known");
    if (e.free_part.size() != static_cast<std::size_t>(g.free_rank) ||
        e.torsion_part.size() != g.torsion.size())
        throw ValidationError("GroupElement: coordinate lengths do not match the ambient group");
    for (std::size_t i = 0; i < e.torsion_part.size(); ++i) {
        Int m(g.torsion[i]);
        Int r = e.torsion_part[i] % m;
        if (r < 0)
            r += m;
        e.torsion_part[i] = r;
    }
    return e;
}

GroupElement add(const GroupElement& a, const GroupElement& b, const AbelianGroup& g)
{
    GroupElement r = a;
    for (std::size_t i = 0; i < r.free_part.size(); ++i)
        r.free_part[i] += b.free_part[i];
    for (std::size_t i = 0; i < r.torsion_part.size(); ++i)
        r.torsion_part[i] += b.torsion_part[i];
    return reduce_element(std::move(r), g);
}

GroupElement sub(const GroupElement& a, const GroupElement& b, const AbelianGroup& g)
{
    GroupElement r = a;
    for (std::size_t i = 0; i < r.free_part.size(); ++i)
        r.free_part[i] -= b.free_part[i];
    for (std::size_t i = 0; i < r.torsion_part.size(); ++i)
        r.torsion_part[i] -= b.torsion_part[i];
    return reduce_element(std::move(r), g);
}

GroupElement scalar_mul(const Int& c, const GroupElement& a, const AbelianGroup& g)
{
    GroupElement r = a;
    for (auto& v : r.free_part)
        v *= c;
    for (auto& v : r.torsion_part)
        v *= c;
    return reduce_element(std::move(r), g);
}

bool is_zero(const GroupElement& e)
{
    for (const auto& v : e.free_part)
        if (v != 0)
            return false;
    for (const auto& v : e.torsion_part)
        if (v != 0)
            return false;
    return true;
}

}  // namespace muinv
