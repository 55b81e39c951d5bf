#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace valleypaths {

// U = (1,1), D = (1,-1), F = (1,0) Motzkin flat, H = (2,0) Schroeder/Delannoy flat.
// Declaration order is the enumeration order.
enum class Step : std::uint8_t { U, D, F, H };

char to_char(Step s);
int rise(Step s);
int width(Step s);

enum class Family : std::uint8_t { Dyck, Motzkin, SchroderLarge, SchroderSmall, Delannoy };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

// Validated lattice path. Size is the semilength, except for Motzkin paths
// where it is the number of steps.
class Path {
public:
    Path() = default;
    // Throws NegativeLevel / NonzeroEnd / FamilyViolation.
    Path(Family family, std::vector<Step> steps);

    Family family() const { return family_; }
    const std::vector<Step>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    std::size_t length() const { return steps_.size(); }
    int size() const;
    std::string str() const;

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path& a, const Path& b) { return a.steps_ <=> b.steps_; }

private:
    Family family_ = Family::Dyck;
    std::vector<Step> steps_;
};

// Text is a string over {U, D, F, H}.
Path parse_path(std::string_view text, Family family);

// Validates a raw step sequence against a family without building a Path.
std::optional<std::string> family_violation(Family family, const std::vector<Step>& steps);

struct PeakOrValley {
    int position = 0;  // x-coordinate of the shared point of the two steps
    int level = 0;
    friend bool operator==(const PeakOrValley&, const PeakOrValley&) = default;
};

struct Pyramid {
    int height = 0;
    int altitude = 0;
    int position = 0;  // x-coordinate where the pyramid starts
    friend bool operator==(const Pyramid&, const Pyramid&) = default;
};

struct PathStats {
    std::vector<PeakOrValley> peaks;
    std::vector<PeakOrValley> valleys;
    std::vector<Pyramid> maximal_pyramids;
    // Step indices one past the end of each factor returning to level 0.
    std::vector<std::size_t> factor_ends;
    bool first_step_flat = false;
    bool first_two_ud = false;
};

PathStats analyze(const Path& p);

// Splits at every return to level 0.
std::vector<Path> primitive_factors(const Path& p);
Path elevate(const Path& p);
Path concat(const Path& p, const Path& r);

// One text row per level, highest first; '/' '\' '_' for U D F and "__" for H.
std::string render_ascii(const Path& p);

enum class PathFilter : std::uint8_t { None, FirstNotFlat, FirstTwoNotUD, YFilter };

std::string_view to_string(PathFilter f);
PathFilter parse_filter(std::string_view name);
bool passes(PathFilter filter, const std::vector<Step>& steps);

// Visits every path of the family with the given size in lexicographic order
// (U < D < F < H). The visitor returns false to stop early.
void for_each_path(Family family, int n, PathFilter filter, const std::function<bool(const Path&)>& visit);
std::vector<Path> enumerate_family(Family family, int n, PathFilter filter = PathFilter::None);

}  // namespace valleypaths
