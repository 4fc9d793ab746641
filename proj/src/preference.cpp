#include "qchoice/preference.hpp"

#include <array>
#include <stdexcept>

namespace qchoice {

namespace {

struct PairContexts {
    double first_when_first_drawn;   // P_x(C_x | B_z)
    double first_when_second_drawn;  // P_y(C_x | B_z)
};

PairContexts contexts_of(const ConditionalStrategy& s, Food x, Food y) {
    if (x < 0 || x > 2 || y < 0 || y > 2 || x == y) {
        throw std::invalid_argument("preference pair must be two distinct foods");
    }
    const Food z = 3 - x - y;
    return {s.prob(x, x, z), s.prob(y, x, z)};
}

ClassLabel label_of(const std::array<PreferenceOutcome, 3>& cycle) {
    int forward = 0;
    int reverse = 0;
    for (PreferenceOutcome o : cycle) {
        if (o == PreferenceOutcome::Undefined) return ClassLabel::Degenerate;
        if (o == PreferenceOutcome::SecondPreferred) ++forward;
        else ++reverse;
    }
    if (forward == 3) return ClassLabel::IntransitiveForward;
    if (reverse == 3) return ClassLabel::IntransitiveReverse;
    return ClassLabel::Transitive;
}

}  // namespace

std::string_view to_string(ClassLabel label) noexcept {
    switch (label) {
        case ClassLabel::IntransitiveForward: return "intransitive_forward";
        case ClassLabel::IntransitiveReverse: return "intransitive_reverse";
        case ClassLabel::Transitive: return "transitive";
        case ClassLabel::Degenerate: return "degenerate";
    }
    return "degenerate";
}

std::optional<ClassLabel> parse_class_label(std::string_view text) noexcept {
    for (ClassLabel l : {ClassLabel::IntransitiveForward, ClassLabel::IntransitiveReverse,
                         ClassLabel::Transitive, ClassLabel::Degenerate}) {
        if (to_string(l) == text) return l;
    }
    return std::nullopt;
}

std::string_view to_string(ClassFilter filter) noexcept {
    switch (filter) {
        case ClassFilter::All: return "all";
        case ClassFilter::Intransitive1: return "intransitive1";
        case ClassFilter::Intransitive2: return "intransitive2";
        case ClassFilter::Transitive1: return "transitive1";
        case ClassFilter::Transitive2: return "transitive2";
    }
    return "all";
}

std::optional<ClassFilter> parse_class_filter(std::string_view text) noexcept {
    for (ClassFilter f : {ClassFilter::All, ClassFilter::Intransitive1, ClassFilter::Intransitive2,
                          ClassFilter::Transitive1, ClassFilter::Transitive2}) {
        if (to_string(f) == text) return f;
    }
    return std::nullopt;
}

bool matches(ClassFilter filter, const Classification& c) noexcept {
    switch (filter) {
        case ClassFilter::All: return true;
        case ClassFilter::Intransitive1: return is_intransitive(c.type1);
        case ClassFilter::Intransitive2: return is_intransitive(c.type2);
        case ClassFilter::Transitive1: return c.type1 == ClassLabel::Transitive;
        case ClassFilter::Transitive2: return c.type2 == ClassLabel::Transitive;
    }
    return false;
}

PreferenceOutcome type1_preference(const ConditionalStrategy& s, Food x, Food y, double eps) {
    const auto [a, b] = contexts_of(s, x, y);
    if (a > 0.5 + eps && b > 0.5 + eps) return PreferenceOutcome::FirstPreferred;
    if (a < 0.5 - eps && b < 0.5 - eps) return PreferenceOutcome::SecondPreferred;
    return PreferenceOutcome::Undefined;
}

PreferenceOutcome type2_preference(const ConditionalStrategy& s, Food x, Food y, double eps) {
    const auto [a, b] = contexts_of(s, x, y);
    const double first = a + b;
    const double second = (1.0 - a) + (1.0 - b);
    if (first - second > 2.0 * eps) return PreferenceOutcome::FirstPreferred;
    if (second - first > 2.0 * eps) return PreferenceOutcome::SecondPreferred;
    return PreferenceOutcome::Undefined;
}

Classification classify(const ConditionalStrategy& s, double eps) {
    constexpr std::array<std::array<Food, 2>, 3> kCycle{{{0, 1}, {1, 2}, {2, 0}}};
    std::array<PreferenceOutcome, 3> t1{};
    std::array<PreferenceOutcome, 3> t2{};
    for (std::size_t i = 0; i < 3; ++i) {
        t1[i] = type1_preference(s, kCycle[i][0], kCycle[i][1], eps);
        t2[i] = type2_preference(s, kCycle[i][0], kCycle[i][1], eps);
    }
    return {label_of(t1), label_of(t2)};
}

}  // namespace qchoice
