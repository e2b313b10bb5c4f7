#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace amc {

// The ten modulation classes handled by the toolkit. The declaration order is
// canonical: it fixes exemplar grouping, confusion-matrix rows, the answer
// suffix and every tie-break.
enum class ModClass : int {
  Ask4,
  Pam4,
  Ask8,
  Pam16,
  Cpfsk,
  Dqpsk,
  Gfsk,
  Gmsk,
  Ook,
  Oqpsk,
};

inline constexpr int kNumClasses = 10;

inline constexpr std::array<ModClass, kNumClasses> kAllClasses{
    ModClass::Ask4, ModClass::Pam4, ModClass::Ask8,  ModClass::Pam16,
    ModClass::Cpfsk, ModClass::Dqpsk, ModClass::Gfsk, ModClass::Gmsk,
    ModClass::Ook,  ModClass::Oqpsk};

std::string_view to_string(ModClass c);

// Accepts only the canonical uppercase spelling ("4ASK", "16PAM", ...).
std::optional<ModClass> parse_mod_class(std::string_view s);

// Like parse_mod_class but throws std::invalid_argument on unknown input.
ModClass mod_class_from_string(std::string_view s);

inline constexpr int class_index(ModClass c) { return static_cast<int>(c); }

}  // namespace amc
