#pragma once

#include "gfh/homlin.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfh {

/// Raised when no Maslov potential exists on a front.
class RotationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when the polygon search needs boundary words longer than allowed.
class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EventType { LeftCusp, RightCusp, Crossing };

std::string event_name(EventType t);
EventType parse_event(const std::string& s);

/// Levels count from the bottom strand (0). A left cusp at k inserts a new
/// strand pair at positions k, k+1; a right cusp at k closes strands k, k+1; a
/// crossing at k swaps them.
struct FrontEvent {
    EventType type = EventType::Crossing;
    int level = 0;
};

struct FrontDiagram {
    int strands = 0;  ///< maximum number of strand levels
    std::vector<FrontEvent> events;
    /// Optional potential per arc, arcs numbered by creation (lower arc of a
    /// left cusp first).
    std::optional<std::vector<int>> maslov;

    void validate() const;
    std::size_t arc_count() const { return 2 * left_cusps(); }
    std::size_t left_cusps() const;
};

struct ClassicalInvariants {
    int tb = 0;
    int rot = 0;
    int writhe = 0;
    int right_cusps = 0;
    int components = 0;
};

ClassicalInvariants classical_invariants(const FrontDiagram& fd);

/// Maslov potential per arc; supplied values are checked, missing ones inferred
/// with the first arc of every component at 0.
std::vector<int> maslov_potential(const FrontDiagram& fd);

using Word = std::vector<int>;  ///< generator indices, left to right; empty = 1

struct DGAGenerator {
    std::string name;
    std::size_t event = 0;
    EventType type = EventType::Crossing;
    int degree = 0;
};

struct DGA {
    std::vector<DGAGenerator> generators;
    std::vector<std::vector<Word>> differential;  ///< sorted, each word at most once

    bool grading_ok() const;
    bool d_squared_zero() const;
    std::string differential_string(std::size_t g) const;
};

inline constexpr std::size_t kDefaultWordBudget = 64;

DGA chekanov_dga(const FrontDiagram& fd, std::size_t word_budget = kDefaultWordBudget);

using Augmentation = std::vector<std::uint8_t>;  ///< one bit per generator

/// Enumerates all augmentations, ordered by the bit pattern on degree-0 generators.
std::vector<Augmentation> augmentations(const DGA& d);
bool is_augmentation(const DGA& d, const Augmentation& e);

GradedRanks lch(const DGA& d, const Augmentation& e);

/// GFH_k = LCH_{k-1}.
GradedRanks gfh_from_lch(const GradedRanks& l);

/// Twist-knot front with d twists (d >= 1) after a two-crossing clasp.
FrontDiagram twist_knot(int d);

FrontDiagram unknot_front();
FrontDiagram trefoil_front();

}  // namespace gfh
