#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "qchoice/game.hpp"

namespace qchoice {

inline constexpr double kDefaultTieTolerance = 1e-9;

/// Result of comparing the ordered pair (x, y).
enum class PreferenceOutcome : std::uint8_t { FirstPreferred, SecondPreferred, Undefined };

enum class ClassLabel : std::uint8_t { IntransitiveForward, IntransitiveReverse, Transitive, Degenerate };

/// Forward is the cycle 0 < 1 < 2 < 0 (each food beaten by its successor).
struct Classification {
    ClassLabel type1 = ClassLabel::Degenerate;
    ClassLabel type2 = ClassLabel::Degenerate;

    ClassLabel of_type(int type) const noexcept { return type == 1 ? type1 : type2; }
    friend bool operator==(const Classification&, const Classification&) = default;
};

enum class ClassFilter : std::uint8_t { All, Intransitive1, Intransitive2, Transitive1, Transitive2 };

std::string_view to_string(ClassLabel label) noexcept;
std::optional<ClassLabel> parse_class_label(std::string_view text) noexcept;
std::string_view to_string(ClassFilter filter) noexcept;
std::optional<ClassFilter> parse_class_filter(std::string_view text) noexcept;

constexpr bool is_intransitive(ClassLabel l) noexcept {
    return l == ClassLabel::IntransitiveForward || l == ClassLabel::IntransitiveReverse;
}

bool matches(ClassFilter filter, const Classification& c) noexcept;

/// Type 1: x is preferred only if it wins in both contexts where the pair
/// (x, y) is offered, each choice probability clearing 1/2 by more than eps.
/// Throws std::invalid_argument when x == y or a food is out of range.
PreferenceOutcome type1_preference(const ConditionalStrategy& s, Food x, Food y, double eps);

/// Type 2: x is preferred if its total choice frequency over both contexts
/// beats y's by more than 2 eps.
PreferenceOutcome type2_preference(const ConditionalStrategy& s, Food x, Food y, double eps);

Classification classify(const ConditionalStrategy& s, double eps = kDefaultTieTolerance);

}  // namespace qchoice
