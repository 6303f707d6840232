#ifndef VB1_CHARACTER_HPP
#define VB1_CHARACTER_HPP

#include <array>
#include <cstdint>
#include <string>

namespace vb1 {

// A point of the character sphere S(Z^2): the unique primitive integer
// vector representing a ray of characters up to positive scaling.
class CharacterClass {
public:
    // Normalizes by dividing out gcd (sign kept). Zero vector is rejected.
    CharacterClass(std::int64_t a, std::int64_t b);

    std::int64_t a() const { return v_[0]; }
    std::int64_t b() const { return v_[1]; }
    CharacterClass antipode() const { return CharacterClass(-v_[0], -v_[1]); }

    bool operator==(const CharacterClass& o) const { return v_ == o.v_; }
    bool operator!=(const CharacterClass& o) const { return v_ != o.v_; }
    bool operator<(const CharacterClass& o) const { return v_ < o.v_; }

    std::string to_string() const;

private:
    std::array<std::int64_t, 2> v_;
};

} // namespace vb1

#endif
