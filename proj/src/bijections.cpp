#include "valleypaths/bijections.hpp"

#include <algorithm>

#include "valleypaths/error.hpp"

namespace valleypaths {

std::string_view to_string(MapId m) {
    switch (m) {
        case MapId::Phi: return "phi";
        case MapId::Theta: return "theta";
        case MapId::Sigma: return "sigma";
        case MapId::Rho: return "rho";
        case MapId::Psi: return "psi";
        case MapId::Tau: return "tau";
    }
    return "?";
}

MapId parse_map(std::string_view name) {
    for (MapId m : {MapId::Phi, MapId::Theta, MapId::Sigma, MapId::Rho, MapId::Psi, MapId::Tau}) {
        if (to_string(m) == name) return m;
    }
    throw Error(ErrorCode::ParseError, "unknown map '" + std::string(name) + "'");
}

const MapInfo& map_info(MapId m) {
    static const std::vector<MapInfo> infos = {
        {MapId::Phi, "motzkin_ab", Family::Motzkin, Family::Motzkin, PathFilter::FirstNotFlat,
         TargetWeighting::MotzkinAB},
        {MapId::Theta, "schroder_large_q", Family::SchroderLarge, Family::SchroderLarge, PathFilter::YFilter,
         TargetWeighting::SchroderQ},
        {MapId::Sigma, "schroder_small_q", Family::SchroderLarge, Family::SchroderSmall, PathFilter::FirstTwoNotUD,
         TargetWeighting::SchroderQ},
        {MapId::Rho, "narayana_t", Family::Dyck, Family::Dyck, PathFilter::FirstTwoNotUD, TargetWeighting::NarayanaT},
        {MapId::Psi, "narayana_shift_t", Family::Dyck, Family::Dyck, PathFilter::FirstTwoNotUD,
         TargetWeighting::LevelPeaks},
    };
    if (m == MapId::Tau) throw Error(ErrorCode::InvalidDecoration, "tau acts on letter data, not on paths");
    return infos[static_cast<std::size_t>(m)];
}

namespace {

// Pyr(k+1) and Block(k, ...) share the parameter k.
int part_k(const Part& part) {
    if (const auto* p = std::get_if<Pyr>(&part)) return p->height - 1;
    return std::get<Block>(part).ascent;
}

int part_r(const Part& part) {
    if (std::holds_alternative<Pyr>(part)) return 1;
    return static_cast<int>(std::get<Block>(part).heights.size());
}

int inner_size(MapId map, const Part& part) { return map == MapId::Phi ? part_k(part) - 1 : part_k(part); }

bool eligible(const Part& part) {
    if (const auto* p = std::get_if<Pyr>(&part)) return p->height >= 2;
    const auto& h = std::get<Block>(part).heights;
    return std::all_of(h.begin(), h.end(), [](int x) { return x == 1; });
}

Part make_part(int k, int tail) {
    if (tail == 0) return Pyr{k + 1};
    return Block{k, std::vector<int>(static_cast<std::size_t>(tail + 1), 1)};
}

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorCode::InvalidDecoration, message); }

std::vector<std::vector<TailSymbol>> all_symbol_strings(int length) {
    std::vector<std::vector<TailSymbol>> out(1);
    for (int i = 0; i < length; ++i) {
        std::vector<std::vector<TailSymbol>> next;
        for (const auto& s : out) {
            for (TailSymbol t : {TailSymbol::H, TailSymbol::UD}) {
                next.push_back(s);
                next.back().push_back(t);
            }
        }
        out = std::move(next);
    }
    return out;
}

std::size_t count_steps(const Path& p, Step s) {
    return static_cast<std::size_t>(std::count(p.steps().begin(), p.steps().end(), s));
}

}  // namespace

VStructure DecoratedVPath::structure() const {
    VStructure s;
    for (const auto& dp : parts) s.parts.push_back(dp.part);
    return s;
}

void validate(const DecoratedVPath& d) {
    if (d.map == MapId::Tau) invalid("tau objects use TauDecorated");
    const MapInfo& info = map_info(d.map);
    for (const auto& dp : d.parts) {
        if (!eligible(dp.part)) invalid(part_str(dp.part) + " carries no weight under " + std::string(to_string(d.map)));
        if (part_k(dp.part) < 1) invalid("ascent must be at least 1");
        if (dp.inner.family() != info.inner_family) invalid("inner path of the wrong family");
        if (dp.inner.size() != inner_size(d.map, dp.part)) {
            invalid("inner path " + dp.inner.str() + " has size " + std::to_string(dp.inner.size()) + ", expected " +
                    std::to_string(inner_size(d.map, dp.part)));
        }
        const std::size_t expected_symbols = d.map == MapId::Theta ? static_cast<std::size_t>(part_r(dp.part) - 1) : 0;
        if (dp.symbols.size() != expected_symbols) invalid("wrong number of tail symbols");
    }
}

void for_each_decorated(int n, MapId map, const std::function<bool(const DecoratedVPath&)>& visit) {
    if (map == MapId::Tau) invalid("use for_each_tau");
    const MapInfo& info = map_info(map);
    bool stopped = false;
    for_each_v_structure(n, [&](const VStructure& s) {
        if (!std::all_of(s.parts.begin(), s.parts.end(), eligible)) return true;
        DecoratedVPath d{map, {}};
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (stopped) return;
            if (i == s.parts.size()) {
                if (!visit(d)) stopped = true;
                return;
            }
            const Part& part = s.parts[i];
            const auto inners = enumerate_family(info.inner_family, inner_size(map, part));
            const auto tails = all_symbol_strings(map == MapId::Theta ? part_r(part) - 1 : 0);
            for (const Path& inner : inners) {
                for (const auto& symbols : tails) {
                    d.parts.push_back({part, inner, symbols});
                    rec(i + 1);
                    d.parts.pop_back();
                    if (stopped) return;
                }
            }
        };
        rec(0);
        return !stopped;
    });
}

std::vector<DecoratedVPath> enumerate_decorated(int n, MapId map) {
    std::vector<DecoratedVPath> out;
    for_each_decorated(n, map, [&](const DecoratedVPath& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

Path forward(const DecoratedVPath& d) {
    validate(d);
    const MapInfo& info = map_info(d.map);
    std::vector<Step> steps;
    for (const auto& dp : d.parts) {
        steps.push_back(Step::U);
        steps.insert(steps.end(), dp.inner.steps().begin(), dp.inner.steps().end());
        steps.push_back(Step::D);
        const int tail = part_r(dp.part) - 1;
        for (int j = 0; j < tail; ++j) {
            if (d.map == MapId::Phi) {
                steps.push_back(Step::F);
            } else if (d.map == MapId::Theta && dp.symbols[static_cast<std::size_t>(j)] == TailSymbol::H) {
                steps.push_back(Step::H);
            } else {
                steps.push_back(Step::U);
                steps.push_back(Step::D);
            }
        }
    }
    return Path(info.target_family, std::move(steps));
}

DecoratedVPath inverse(MapId map, const Path& target) {
    if (map == MapId::Tau) invalid("use tau_inverse");
    const MapInfo& info = map_info(map);
    if (target.family() != info.target_family) {
        throw Error(ErrorCode::NotInTargetFamily, "expected a " + std::string(to_string(info.target_family)) + " path");
    }
    if (!passes(info.target_filter, target.steps())) {
        throw Error(ErrorCode::NotInTargetFamily,
                    target.str() + " fails the " + std::string(to_string(info.target_filter)) + " condition");
    }
    const auto& s = target.steps();
    DecoratedVPath d{map, {}};
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != Step::U) {
            throw Error(ErrorCode::UniqueFactorizationFailure, "expected an up step at index " + std::to_string(pos));
        }
        std::size_t end = pos;
        int level = 0;
        do {
            level += rise(s[end]);
            ++end;
        } while (level != 0);
        std::vector<Step> inner(s.begin() + static_cast<std::ptrdiff_t>(pos + 1),
                                s.begin() + static_cast<std::ptrdiff_t>(end - 1));
        if (map != MapId::Phi && inner.empty()) {
            throw Error(ErrorCode::UniqueFactorizationFailure, "empty first factor at index " + std::to_string(pos));
        }
        pos = end;
        std::vector<TailSymbol> symbols;
        int tail = 0;
        while (pos < s.size()) {
            if (map == MapId::Phi && s[pos] == Step::F) {
                ++pos;
            } else if (map == MapId::Theta && s[pos] == Step::H) {
                symbols.push_back(TailSymbol::H);
                ++pos;
            } else if (map != MapId::Phi && pos + 1 < s.size() && s[pos] == Step::U && s[pos + 1] == Step::D) {
                if (map == MapId::Theta) symbols.push_back(TailSymbol::UD);
                pos += 2;
            } else {
                break;
            }
            ++tail;
        }
        Path inner_path(info.inner_family, std::move(inner));
        const int k = map == MapId::Phi ? inner_path.size() + 1 : inner_path.size();
        d.parts.push_back({make_part(k, tail), std::move(inner_path), std::move(symbols)});
    }
    validate(d);
    return d;
}

Polynomial eval_decorated_weight(const DecoratedVPath& d) {
    validate(d);
    const Polynomial a = Polynomial::variable(Var::a());
    const Polynomial b = Polynomial::variable(Var::b());
    const Polynomial q = Polynomial::variable(Var::q());
    const Polynomial t = Polynomial::variable(Var::t());
    Polynomial w(1);
    for (const auto& dp : d.parts) {
        const auto tail = static_cast<unsigned>(part_r(dp.part) - 1);
        switch (d.map) {
            case MapId::Phi:
                w *= b * target_weight(dp.inner, TargetWeighting::MotzkinAB) * a.pow(tail);
                break;
            case MapId::Theta: {
                const auto flats = count_steps(dp.inner, Step::H) +
                                   static_cast<std::size_t>(std::count(dp.symbols.begin(), dp.symbols.end(), TailSymbol::H));
                w *= q.pow(static_cast<unsigned>(flats));
                break;
            }
            case MapId::Sigma:
                w *= q.pow(static_cast<unsigned>(count_steps(dp.inner, Step::H)));
                break;
            case MapId::Rho:
                w *= t.pow(static_cast<unsigned>(analyze(dp.inner).peaks.size()) + tail);
                break;
            case MapId::Psi:
                w *= t.pow(static_cast<unsigned>(analyze(dp.inner).peaks.size())) * (t + Polynomial(1)).pow(tail);
                break;
            case MapId::Tau: break;
        }
    }
    return w;
}

// ---- tau ----

std::string_view to_string(TauLetter l) {
    switch (l) {
        case TauLetter::Seven: return "7";
        case TauLetter::One: return "1";
        case TauLetter::OneHat: return "1h";
        case TauLetter::Three: return "3";
        case TauLetter::ThreeHat: return "3h";
    }
    return "?";
}

std::string_view to_string(TauSide s) { return s == TauSide::Src4372 ? "src_4372" : "dst_2174"; }

TauSide parse_tau_side(std::string_view name) {
    if (name == "src_4372") return TauSide::Src4372;
    if (name == "dst_2174") return TauSide::Dst2174;
    throw Error(ErrorCode::ParseError, "unknown tau side '" + std::string(name) + "'");
}

std::vector<TauLetter> parse_tau_letters(std::string_view text) {
    std::vector<TauLetter> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const bool hat = i + 1 < text.size() && text[i + 1] == 'h';
        switch (text[i]) {
            case '7': out.push_back(TauLetter::Seven); break;
            case '1': out.push_back(hat ? TauLetter::OneHat : TauLetter::One); break;
            case '3': out.push_back(hat ? TauLetter::ThreeHat : TauLetter::Three); break;
            default: throw Error(ErrorCode::ParseError, "bad letter at index " + std::to_string(i));
        }
        if (hat) ++i;
    }
    return out;
}

std::string tau_letters_str(const std::vector<TauLetter>& letters) {
    std::string out;
    for (TauLetter l : letters) out += to_string(l);
    return out;
}

int TauDecorated::size() const {
    int n = 0;
    for (const auto& p : parts) {
        n += p.k0;
        for (int h : p.blocks) n += h;
    }
    return n;
}

void validate(const TauDecorated& d) {
    const TauLetter free_letter = d.side == TauSide::Src4372 ? TauLetter::OneHat : TauLetter::ThreeHat;
    for (const auto& p : d.parts) {
        if (p.k0 < 1) invalid("k0 must be at least 1");
        if (p.blocks.empty()) invalid("a part needs at least one pyramid");
        if (std::any_of(p.blocks.begin(), p.blocks.end(), [](int h) { return h < 1; })) invalid("pyramid height < 1");
        if (static_cast<int>(p.letters.size()) != p.k0 - 1) {
            invalid("expected " + std::to_string(p.k0 - 1) + " letters, got " + std::to_string(p.letters.size()));
        }
        for (TauLetter l : p.letters) {
            if (l != TauLetter::One && l != free_letter) {
                invalid("letter " + std::string(to_string(l)) + " not allowed on side " + std::string(to_string(d.side)));
            }
        }
    }
}

void for_each_tau(int n, TauSide side, const std::function<bool(const TauDecorated&)>& visit) {
    const TauLetter free_letter = side == TauSide::Src4372 ? TauLetter::OneHat : TauLetter::ThreeHat;
    TauDecorated d{side, {}};
    bool stopped = false;
    std::function<void(int)> rec = [&](int remaining) {
        if (stopped) return;
        if (remaining == 0) {
            if (!visit(d)) stopped = true;
            return;
        }
        for (int size = 2; size <= remaining && !stopped; ++size) {
            for (int k0 = 1; k0 < size && !stopped; ++k0) {
                for_each_composition(size - k0, 1, [&](const std::vector<int>& blocks) {
                    const unsigned free = static_cast<unsigned>(k0 - 1);
                    for (unsigned long mask = 0; mask < (1UL << free) && !stopped; ++mask) {
                        TauPart part{k0, {}, blocks};
                        for (unsigned i = 0; i < free; ++i) {
                            // Most significant bit first keeps letters in lexicographic order.
                            part.letters.push_back(((mask >> (free - 1 - i)) & 1UL) ? free_letter : TauLetter::One);
                        }
                        d.parts.push_back(std::move(part));
                        rec(remaining - size);
                        d.parts.pop_back();
                    }
                    return !stopped;
                });
            }
        }
    };
    rec(n);
}

std::vector<TauDecorated> enumerate_tau(int n, TauSide side) {
    std::vector<TauDecorated> out;
    for_each_tau(n, side, [&](const TauDecorated& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

TauDecorated tau_forward(const TauDecorated& src) {
    if (src.side != TauSide::Src4372) invalid("tau_forward expects a src_4372 object");
    validate(src);
    TauDecorated dst{TauSide::Dst2174, {}};
    for (const auto& p : src.parts) {
        std::vector<TauLetter> v;
        for (int h : p.blocks) {
            v.insert(v.end(), static_cast<std::size_t>(h - 1), TauLetter::Three);
            v.push_back(TauLetter::One);
        }
        TauPart out;
        out.k0 = static_cast<int>(v.size());
        for (auto it = v.rbegin() + 1; it != v.rend(); ++it) {
            out.letters.push_back(*it == TauLetter::Three ? TauLetter::ThreeHat : TauLetter::One);
        }
        std::vector<TauLetter> runs(p.letters.rbegin(), p.letters.rend());
        runs.push_back(TauLetter::One);
        int height = 0;
        for (TauLetter l : runs) {
            ++height;
            if (l == TauLetter::One) {
                out.blocks.push_back(height);
                height = 0;
            }
        }
        dst.parts.push_back(std::move(out));
    }
    return dst;
}

TauDecorated tau_inverse(const TauDecorated& dst) {
    if (dst.side != TauSide::Dst2174) invalid("tau_inverse expects a dst_2174 object");
    validate(dst);
    TauDecorated src{TauSide::Src4372, {}};
    for (const auto& p : dst.parts) {
        std::vector<TauLetter> runs;
        for (int g : p.blocks) {
            runs.insert(runs.end(), static_cast<std::size_t>(g - 1), TauLetter::OneHat);
            runs.push_back(TauLetter::One);
        }
        TauPart out;
        out.k0 = static_cast<int>(runs.size());
        out.letters.assign(runs.rbegin() + 1, runs.rend());
        std::vector<TauLetter> v = {TauLetter::One};
        for (TauLetter l : p.letters) v.push_back(l == TauLetter::ThreeHat ? TauLetter::Three : TauLetter::One);
        std::reverse(v.begin(), v.end());
        int height = 0;
        for (TauLetter l : v) {
            ++height;
            if (l == TauLetter::One) {
                out.blocks.push_back(height);
                height = 0;
            }
        }
        src.parts.push_back(std::move(out));
    }
    return src;
}

std::vector<TauLetter> full_letters(const TauDecorated& d) {
    std::vector<TauLetter> out;
    for (const auto& p : d.parts) {
        out.push_back(TauLetter::Seven);
        out.insert(out.end(), p.letters.begin(), p.letters.end());
        for (int h : p.blocks) {
            if (d.side == TauSide::Src4372) {
                out.insert(out.end(), static_cast<std::size_t>(h - 1), TauLetter::Three);
                out.push_back(TauLetter::One);
            } else {
                out.insert(out.end(), static_cast<std::size_t>(h), TauLetter::One);
            }
        }
    }
    return out;
}

Polynomial tau_weight(const TauDecorated& d) {
    Integer w = 1;
    for (TauLetter l : full_letters(d)) {
        if (l == TauLetter::Seven) w *= 7;
        if (l == TauLetter::Three || l == TauLetter::ThreeHat) w *= 3;
    }
    return Polynomial(w);
}

Path to_path(const TauDecorated& d) {
    std::vector<Step> steps;
    for (const auto& p : d.parts) {
        steps.insert(steps.end(), static_cast<std::size_t>(p.k0), Step::U);
        for (int h : p.blocks) {
            steps.insert(steps.end(), static_cast<std::size_t>(h), Step::U);
            steps.insert(steps.end(), static_cast<std::size_t>(h), Step::D);
        }
        steps.insert(steps.end(), static_cast<std::size_t>(p.k0), Step::D);
    }
    return Path(Family::Dyck, std::move(steps));
}

}  // namespace valleypaths
