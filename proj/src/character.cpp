#include "vb1/character.hpp"

#include <numeric>

#include "vb1/errors.hpp"

namespace vb1 {

CharacterClass::CharacterClass(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw invalid_input("the zero vector is not a character class");
    std::int64_t g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    v_ = {a / g, b / g};
}

std::string CharacterClass::to_string() const {
    return "(" + std::to_string(v_[0]) + "," + std::to_string(v_[1]) + ")";
}

} // namespace vb1
