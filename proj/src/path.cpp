#include "valleypaths/path.hpp"

#include <algorithm>
#include <limits>

#include "valleypaths/error.hpp"

namespace valleypaths {

char to_char(Step s) {
    switch (s) {
        case Step::U: return 'U';
        case Step::D: return 'D';
        case Step::F: return 'F';
        case Step::H: return 'H';
    }
    return '?';
}

int rise(Step s) { return s == Step::U ? 1 : (s == Step::D ? -1 : 0); }
int width(Step s) { return s == Step::H ? 2 : 1; }

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Dyck: return "dyck";
        case Family::Motzkin: return "motzkin";
        case Family::SchroderLarge: return "schroder_large";
        case Family::SchroderSmall: return "schroder_small";
        case Family::Delannoy: return "delannoy";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::Dyck, Family::Motzkin, Family::SchroderLarge, Family::SchroderSmall, Family::Delannoy}) {
        if (to_string(f) == name) return f;
    }
    throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) + "'");
}

namespace {

struct Violation {
    ErrorCode code;
    std::string message;
};

std::optional<Violation> check_steps(Family family, const std::vector<Step>& steps) {
    int level = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Step s = steps[i];
        const bool allowed = s == Step::U || s == Step::D || (s == Step::F && family == Family::Motzkin) ||
                             (s == Step::H && family != Family::Dyck && family != Family::Motzkin);
        if (!allowed) {
            return Violation{ErrorCode::FamilyViolation, std::string(1, to_char(s)) + " step in a " +
                                                             std::string(to_string(family)) + " path"};
        }
        if (s == Step::H && family == Family::SchroderSmall && level == 0) {
            return Violation{ErrorCode::FamilyViolation, "H step on the axis at index " + std::to_string(i)};
        }
        level += rise(s);
        if (level < 0 && family != Family::Delannoy) {
            return Violation{ErrorCode::NegativeLevel, "level below zero after step " + std::to_string(i)};
        }
    }
    if (level != 0) return Violation{ErrorCode::NonzeroEnd, "path ends at level " + std::to_string(level)};
    return std::nullopt;
}

}  // namespace

std::optional<std::string> family_violation(Family family, const std::vector<Step>& steps) {
    if (auto v = check_steps(family, steps)) return v->message;
    return std::nullopt;
}

Path::Path(Family family, std::vector<Step> steps) : family_(family), steps_(std::move(steps)) {
    if (auto v = check_steps(family_, steps_)) throw Error(v->code, v->message);
}

int Path::size() const {
    if (family_ == Family::Motzkin) return static_cast<int>(steps_.size());
    int w = 0;
    for (Step s : steps_) w += width(s);
    return w / 2;
}

std::string Path::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out += to_char(s);
    return out;
}

Path parse_path(std::string_view text, Family family) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'U': steps.push_back(Step::U); break;
            case 'D': steps.push_back(Step::D); break;
            case 'F': steps.push_back(Step::F); break;
            case 'H': steps.push_back(Step::H); break;
            default:
                throw Error(ErrorCode::IllegalCharacter,
                            "'" + std::string(1, text[i]) + "' at index " + std::to_string(i));
        }
    }
    return Path(family, std::move(steps));
}

PathStats analyze(const Path& p) {
    PathStats stats;
    const auto& s = p.steps();
    std::vector<int> level_before(s.size() + 1, 0);
    std::vector<int> x_before(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        level_before[i + 1] = level_before[i] + rise(s[i]);
        x_before[i + 1] = x_before[i] + width(s[i]);
        if (level_before[i + 1] == 0) stats.factor_ends.push_back(i + 1);
    }
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == Step::U && s[i + 1] == Step::D) {
            stats.peaks.push_back({x_before[i + 1], level_before[i + 1]});
            int h = 1;
            while (i + 1 >= static_cast<std::size_t>(h) + 1 && i + 1 + static_cast<std::size_t>(h) < s.size() &&
                   s[i - static_cast<std::size_t>(h)] == Step::U && s[i + 1 + static_cast<std::size_t>(h)] == Step::D) {
                ++h;
            }
            const std::size_t start = i + 1 - static_cast<std::size_t>(h);
            stats.maximal_pyramids.push_back({h, level_before[start], x_before[start]});
        }
        if (s[i] == Step::D && s[i + 1] == Step::U) {
            stats.valleys.push_back({x_before[i + 1], level_before[i + 1]});
        }
    }
    if (!s.empty()) stats.first_step_flat = s[0] == Step::F || s[0] == Step::H;
    stats.first_two_ud = s.size() >= 2 && s[0] == Step::U && s[1] == Step::D;
    return stats;
}

std::vector<Path> primitive_factors(const Path& p) {
    std::vector<Path> out;
    std::vector<Step> current;
    int level = 0;
    for (Step s : p.steps()) {
        current.push_back(s);
        level += rise(s);
        if (level == 0) {
            out.emplace_back(p.family(), std::move(current));
            current.clear();
        }
    }
    return out;
}

Path elevate(const Path& p) {
    std::vector<Step> steps;
    steps.reserve(p.length() + 2);
    steps.push_back(Step::U);
    steps.insert(steps.end(), p.steps().begin(), p.steps().end());
    steps.push_back(Step::D);
    return Path(p.family(), std::move(steps));
}

Path concat(const Path& p, const Path& r) {
    std::vector<Step> steps = p.steps();
    steps.insert(steps.end(), r.steps().begin(), r.steps().end());
    return Path(p.empty() ? r.family() : p.family(), std::move(steps));
}

std::string render_ascii(const Path& p) {
    if (p.empty()) return "";
    // Row r holds the band between levels r and r+1.
    struct Mark {
        int row;
        int column;
        char glyph;
    };
    std::vector<Mark> marks;
    int level = 0;
    int column = 0;
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (Step s : p.steps()) {
        switch (s) {
            case Step::U: marks.push_back({level, column, '/'}); break;
            case Step::D: marks.push_back({level - 1, column, '\\'}); break;
            case Step::F: marks.push_back({level, column, '_'}); break;
            case Step::H:
                marks.push_back({level, column, '_'});
                marks.push_back({level, column + 1, '_'});
                break;
        }
        lo = std::min(lo, marks.back().row);
        hi = std::max(hi, marks.back().row);
        level += rise(s);
        column += width(s);
    }
    std::vector<std::string> rows(static_cast<std::size_t>(hi - lo + 1), std::string(static_cast<std::size_t>(column), ' '));
    for (const auto& m : marks) {
        rows[static_cast<std::size_t>(hi - m.row)][static_cast<std::size_t>(m.column)] = m.glyph;
    }
    std::string out;
    for (auto& row : rows) {
        row.erase(row.find_last_not_of(' ') + 1);
        out += row;
        out += '\n';
    }
    return out;
}

std::string_view to_string(PathFilter f) {
    switch (f) {
        case PathFilter::None: return "none";
        case PathFilter::FirstNotFlat: return "first_not_flat";
        case PathFilter::FirstTwoNotUD: return "first_two_not_ud";
        case PathFilter::YFilter: return "y_filter";
    }
    return "?";
}

PathFilter parse_filter(std::string_view name) {
    for (PathFilter f : {PathFilter::None, PathFilter::FirstNotFlat, PathFilter::FirstTwoNotUD, PathFilter::YFilter}) {
        if (to_string(f) == name) return f;
    }
    throw Error(ErrorCode::ParseError, "unknown filter '" + std::string(name) + "'");
}

bool passes(PathFilter filter, const std::vector<Step>& steps) {
    const bool first_flat = !steps.empty() && (steps[0] == Step::F || steps[0] == Step::H);
    const bool first_ud = steps.size() >= 2 && steps[0] == Step::U && steps[1] == Step::D;
    switch (filter) {
        case PathFilter::None: return true;
        case PathFilter::FirstNotFlat: return !first_flat;
        case PathFilter::FirstTwoNotUD: return !first_ud;
        case PathFilter::YFilter: return !first_flat && !first_ud;
    }
    return false;
}

namespace {

bool passes_prefix(PathFilter filter, const std::vector<Step>& prefix) {
    const bool first_flat = prefix[0] == Step::F || prefix[0] == Step::H;
    if (first_flat && (filter == PathFilter::FirstNotFlat || filter == PathFilter::YFilter)) return false;
    if (prefix.size() == 2 && !passes(filter, prefix)) return false;
    return true;
}

struct Enumerator {
    Family family;
    PathFilter filter;
    int total;  // steps for Motzkin, width otherwise
    const std::function<bool(const Path&)>& visit;
    std::vector<Step> steps;
    bool stopped = false;

    bool can_finish(int level, int remaining) const {
        if (remaining < 0) return false;
        const int distance = level < 0 ? -level : level;
        if (distance > remaining) return false;
        if (family == Family::Motzkin) return true;
        return (remaining - distance) % 2 == 0;
    }

    void run(int level, int used) {
        if (stopped) return;
        // Filters only look at the first two steps, so prune as soon as those are fixed.
        if ((steps.size() == 1 || steps.size() == 2) && !passes_prefix(filter, steps)) return;
        if (used == total) {
            if (level == 0 && passes(filter, steps)) {
                if (!visit(Path(family, steps))) stopped = true;
            }
            return;
        }
        for (Step s : {Step::U, Step::D, Step::F, Step::H}) {
            if (s == Step::F && family != Family::Motzkin) continue;
            if (s == Step::H && (family == Family::Dyck || family == Family::Motzkin)) continue;
            if (s == Step::H && family == Family::SchroderSmall && level == 0) continue;
            const int next = level + rise(s);
            if (next < 0 && family != Family::Delannoy) continue;
            const int next_used = used + (family == Family::Motzkin ? 1 : width(s));
            if (!can_finish(next, total - next_used)) continue;
            steps.push_back(s);
            run(next, next_used);
            steps.pop_back();
            if (stopped) return;
        }
    }
};

}  // namespace

void for_each_path(Family family, int n, PathFilter filter, const std::function<bool(const Path&)>& visit) {
    if (n < 0) return;
    const int total = family == Family::Motzkin ? n : 2 * n;
    Enumerator e{family, filter, total, visit, {}};
    e.run(0, 0);
}

std::vector<Path> enumerate_family(Family family, int n, PathFilter filter) {
    std::vector<Path> out;
    for_each_path(family, n, filter, [&](const Path& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace valleypaths
