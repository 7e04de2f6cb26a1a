#ifndef MUINV_GENERATOR_HPP
#define MUINV_GENERATOR_HPP

#include <compare>
#include <string>

#include "muinv/integer.hpp"
#include "muinv/wedge.hpp"

namespace muinv {
namespace lie {

// Sphere inclusion generating the homotopy of the wedge:
//   core     i0        the core sphere S^n
//   meridian ij        the meridian sphere S^{q_j}, 1 <= j <= r-1
//   graded   ij@g      the copy of S^{q_j} at level g of the covering (n = 1)
struct Generator {
    enum class Kind { core, meridian, graded };

    Kind kind = Kind::core;
    int family = 0;  // 0 for the core, else the meridian family index j
    int grade = 0;   // covering level g; 0 unless kind == graded
    int dim = 1;     // sphere dimension (n for the core, q_j for meridians)

    static Generator core_gen(int n)
    {
        if (n < 1)
            throw ValidationError("Generator: core dimension must be >= 1");
        return Generator{Kind::core, 0, 0, n};
    }
    static Generator meridian(int j, int qj)
    {
        if (j < 1)
            throw ValidationError("Generator: meridian index must be >= 1");
        if (qj < 2)
            throw ValidationError("Generator: meridian dimension must be >= 2");
        return Generator{Kind::meridian, j, 0, qj};
    }
    static Generator graded_meridian(int j, int g, int qj)
    {
        if (j < 1)
            throw ValidationError("Generator: meridian index must be >= 1");
        if (qj < 2)
            throw ValidationError("Generator: meridian dimension must be >= 2");
        return Generator{Kind::graded, j, g, qj};
    }

    bool is_core() const { return kind == Kind::core; }

    // Total order: the core comes first, then meridians by (family, grade).
    // This is also the alphabet order used for Lyndon words.
    friend std::strong_ordering operator<=>(const Generator& a, const Generator& b)
    {
        int ta = a.is_core() ? 0 : 1;
        int tb = b.is_core() ? 0 : 1;
        if (auto c = ta <=> tb; c != 0)
            return c;
        if (auto c = a.family <=> b.family; c != 0)
            return c;
        if (auto c = a.grade <=> b.grade; c != 0)
            return c;
        return a.dim <=> b.dim;
    }
    friend bool operator==(const Generator& a, const Generator& b) = default;

    std::string text() const
    {
        std::string s = "i" + std::to_string(family);
        if (kind == Kind::graded)
            s += "@" + std::to_string(grade);
        return s;
    }
};

}  // namespace lie
}  // namespace muinv

#endif
