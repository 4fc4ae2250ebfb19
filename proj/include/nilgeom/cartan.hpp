#pragma once

#include "nilgeom/nilmodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilgeom {

enum class Epsilon { Minus, Plus, Complex };

Epsilon parse_epsilon(const std::string& s); // "-1", "+1", "1", "C"
std::string to_string(Epsilon e);

// Pointwise Cartan test for one block size delta.
struct CartanCharacters {
    int delta = 0;
    std::vector<int> s;      // s_1 .. s_{4 delta}
    int dimW = 0;            // real dimension of the tangent matrix space
    int params = 0;          // 4 delta * dimW
    int equation_rank = 0;
    int dimV = 0;            // params - equation_rank
    int bound = 0;           // sum k s_k
    int closed_form = 0;     // 2 C(2 delta + 2, 3)
    bool ordinary = false;   // dimV == bound
    std::string flag;        // "tilted" or "generic"
    int redundant_rank = 0;  // rank of the (a) equations (distinct labels)
    int redundant_bound = 0; // 4 C(2 delta, 3)
    int relation_count = 0;  // 4 C(2 delta, 3) relations among the lambda forms
    bool relations_hold = false;
    // relations hold and the full system has rank <= 4 C(2 delta + 1, 3)
    bool redundancy_ok = false;
};

struct CartanResult {
    Epsilon epsilon = Epsilon::Minus;
    CartanCharacters main;
    // layered test: one entry per nu-coefficient a with delta_a > 0
    std::vector<std::pair<int, CartanCharacters>> layers;
    bool ordinary() const;
};

// delta <= 3, otherwise TooLarge.
CartanCharacters cartan_characters(int delta, Epsilon eps);
CartanResult cartan_character_test(int delta, Epsilon eps, const std::optional<ModuleShape>& shape = std::nullopt);

} // namespace nilgeom
