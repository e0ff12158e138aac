#include "fixmodal/system.hpp"

namespace fixmodal {

std::string_view system_name(System sys) {
  switch (sys) {
    case System::S5: return "s5";
    case System::S5Con: return "s5c";
    case System::S5ConGround: return "s5cg";
    case System::S5ConGroundMin: return "s5cgm";
  }
  return "?";
}

std::string_view system_display_name(System sys) {
  switch (sys) {
    case System::S5: return "S5";
    case System::S5Con: return "S5[Con]";
    case System::S5ConGround: return "S5[Con,Ground]";
    case System::S5ConGroundMin: return "S5[Con,Ground,Min]";
  }
  return "?";
}

std::optional<System> parse_system(std::string_view text) {
  if (text == "s5") return System::S5;
  if (text == "s5c") return System::S5Con;
  if (text == "s5cg") return System::S5ConGround;
  if (text == "s5cgm") return System::S5ConGroundMin;
  return std::nullopt;
}

}  // namespace fixmodal
