#include "valleypaths/vstructure.hpp"

#include "valleypaths/error.hpp"

namespace valleypaths {

int part_size(const Part& part) {
    if (const auto* p = std::get_if<Pyr>(&part)) return p->height;
    const auto& b = std::get<Block>(part);
    int size = b.ascent;
    for (int h : b.heights) size += h;
    return size;
}

std::string part_str(const Part& part) {
    if (const auto* p = std::get_if<Pyr>(&part)) return "Pyr(" + std::to_string(p->height) + ")";
    const auto& b = std::get<Block>(part);
    std::string out = "Block(" + std::to_string(b.ascent) + ",[";
    for (std::size_t i = 0; i < b.heights.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(b.heights[i]);
    }
    return out + "])";
}

std::vector<Step> part_steps(const Part& part) {
    std::vector<Step> steps;
    auto pyramid = [&](int h) {
        steps.insert(steps.end(), static_cast<std::size_t>(h), Step::U);
        steps.insert(steps.end(), static_cast<std::size_t>(h), Step::D);
    };
    if (const auto* p = std::get_if<Pyr>(&part)) {
        pyramid(p->height);
        return steps;
    }
    const auto& b = std::get<Block>(part);
    steps.insert(steps.end(), static_cast<std::size_t>(b.ascent), Step::U);
    for (int h : b.heights) pyramid(h);
    steps.insert(steps.end(), static_cast<std::size_t>(b.ascent), Step::D);
    return steps;
}

int VStructure::semilength() const {
    int n = 0;
    for (const auto& part : parts) n += part_size(part);
    return n;
}

std::string VStructure::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ", ";
        out += part_str(parts[i]);
    }
    return out + "]";
}

Path to_path(const VStructure& s) {
    std::vector<Step> steps;
    for (const auto& part : s.parts) {
        auto more = part_steps(part);
        steps.insert(steps.end(), more.begin(), more.end());
    }
    return Path(Family::Dyck, std::move(steps));
}

VStructure from_path(const Path& p) {
    if (p.family() != Family::Dyck) throw Error(ErrorCode::NotInV, "not a Dyck path");
    VStructure out;
    for (const Path& factor : primitive_factors(p)) {
        const PathStats stats = analyze(factor);
        if (stats.valleys.empty()) {
            out.parts.push_back(Pyr{factor.size()});
            continue;
        }
        const int k = stats.valleys.front().level;
        for (const auto& v : stats.valleys) {
            if (v.level != k) {
                throw Error(ErrorCode::NotInV, "valleys at levels " + std::to_string(k) + " and " +
                                                   std::to_string(v.level) + " in factor " + factor.str());
            }
        }
        Block block{k, {}};
        for (const auto& peak : stats.peaks) block.heights.push_back(peak.level - k);
        out.parts.emplace_back(std::move(block));
    }
    return out;
}

bool is_in_v(const Path& p) {
    if (p.family() != Family::Dyck) return false;
    for (const Path& factor : primitive_factors(p)) {
        const PathStats stats = analyze(factor);
        for (const auto& v : stats.valleys) {
            if (v.level != stats.valleys.front().level) return false;
        }
    }
    return true;
}

void for_each_composition(int total, int min_parts, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> current;
    bool stopped = false;
    std::function<void(int)> rec = [&](int remaining) {
        if (stopped) return;
        if (remaining == 0) {
            if (static_cast<int>(current.size()) >= min_parts && !visit(current)) stopped = true;
            return;
        }
        for (int first = 1; first <= remaining && !stopped; ++first) {
            current.push_back(first);
            rec(remaining - first);
            current.pop_back();
        }
    };
    if (total == 0) {
        if (min_parts <= 0) visit(current);
        return;
    }
    rec(total);
}

namespace {

struct VEnumerator {
    const std::function<bool(const VStructure&)>& visit;
    VStructure current;
    bool stopped = false;

    void run(int remaining) {
        if (stopped) return;
        if (remaining == 0) {
            if (!visit(current)) stopped = true;
            return;
        }
        for (int h = remaining; h >= 1 && !stopped; --h) {
            current.parts.emplace_back(Pyr{h});
            run(remaining - h);
            current.parts.pop_back();
        }
        // Blocks: ascent k >= 1 and at least two pyramids, so size >= k + 2.
        for (int k = 1; k + 2 <= remaining && !stopped; ++k) {
            for (int inner = 2; k + inner <= remaining && !stopped; ++inner) {
                for_each_composition(inner, 2, [&](const std::vector<int>& heights) {
                    current.parts.emplace_back(Block{k, heights});
                    run(remaining - k - inner);
                    current.parts.pop_back();
                    return !stopped;
                });
            }
        }
    }
};

}  // namespace

void for_each_v_structure(int n, const std::function<bool(const VStructure&)>& visit) {
    if (n < 0) return;
    VEnumerator e{visit, {}};
    e.run(n);
}

std::vector<VStructure> enumerate_v_structures(int n) {
    std::vector<VStructure> out;
    for_each_v_structure(n, [&](const VStructure& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace valleypaths
