#pragma once

#include <optional>
#include <string_view>

namespace fixmodal {

// Modal systems over the T/F signature, ordered by strength.
enum class System { S5 = 0, S5Con = 1, S5ConGround = 2, S5ConGroundMin = 3 };

// Size of the extensional value alphabet. Bare S5 distinguishes four
// exclusive value profiles (both / true-only / false-only / neither);
// Con collapses "both" and leaves T, F, N.
constexpr int alphabet_size(System sys) { return sys == System::S5 ? 4 : 3; }

constexpr bool at_least(System sys, System floor) {
  return static_cast<int>(sys) >= static_cast<int>(floor);
}

std::string_view system_name(System sys);          // "s5", "s5c", "s5cg", "s5cgm"
std::string_view system_display_name(System sys);  // "S5", "S5[Con]", ...
std::optional<System> parse_system(std::string_view text);

}  // namespace fixmodal
