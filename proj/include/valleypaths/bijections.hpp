#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "valleypaths/path.hpp"
#include "valleypaths/vstructure.hpp"
#include "valleypaths/weights.hpp"

namespace valleypaths {

enum class MapId : std::uint8_t { Phi, Theta, Sigma, Rho, Psi, Tau };

std::string_view to_string(MapId m);
MapId parse_map(std::string_view name);

// Registry weight system, target family, filter and weighting of a path map.
struct MapInfo {
    MapId id;
    std::string spec;
    Family inner_family;
    Family target_family;
    PathFilter target_filter;
    TargetWeighting target_weighting;
};
const MapInfo& map_info(MapId m);

// A trailing symbol after the first factor of a theta part.
enum class TailSymbol : std::uint8_t { H, UD };

// One primitive part with its decoration. Parts are Pyr(h) with h >= 2 or
// Block(k, [1]^r). `inner` is the path placed under the first u...d; it has
// size k-1 (phi, Motzkin) or k (all others) where the part is Pyr(k+1) or
// Block(k, ...). `symbols` holds the r-1 tail symbols of a theta block.
struct DecoratedPart {
    Part part;
    Path inner;
    std::vector<TailSymbol> symbols;
    friend bool operator==(const DecoratedPart&, const DecoratedPart&) = default;
};

struct DecoratedVPath {
    MapId map = MapId::Phi;
    std::vector<DecoratedPart> parts;

    VStructure structure() const;
    friend bool operator==(const DecoratedVPath&, const DecoratedVPath&) = default;
};

// Throws InvalidDecoration.
void validate(const DecoratedVPath& d);

void for_each_decorated(int n, MapId map, const std::function<bool(const DecoratedVPath&)>& visit);
std::vector<DecoratedVPath> enumerate_decorated(int n, MapId map);

Path forward(const DecoratedVPath& d);
// Throws NotInTargetFamily when the path is outside the map's target set.
DecoratedVPath inverse(MapId map, const Path& target);
Polynomial eval_decorated_weight(const DecoratedVPath& d);

// Delannoy-type pair. Letters carry numeric values: 7, 1, 1h (=1), 3, 3h (=3).
enum class TauLetter : std::uint8_t { Seven, One, OneHat, Three, ThreeHat };
enum class TauSide : std::uint8_t { Src4372, Dst2174 };

std::string_view to_string(TauLetter l);
std::string_view to_string(TauSide s);
TauSide parse_tau_side(std::string_view name);
std::vector<TauLetter> parse_tau_letters(std::string_view text);
std::string tau_letters_str(const std::vector<TauLetter>& letters);

// One primitive part u^k0 (u^h1 d^h1)...(u^hr d^hr) d^k0. `letters` are the
// free letters of u-steps 2..k0: {1, 1h} on the source side, {1, 3h} on the
// destination side. The first u-step always carries 7; pyramid u-steps carry
// 3^(h-1) 1 on the source side and 1 on the destination side.
struct TauPart {
    int k0 = 1;
    std::vector<TauLetter> letters;
    std::vector<int> blocks;
    friend auto operator<=>(const TauPart&, const TauPart&) = default;
};

struct TauDecorated {
    TauSide side = TauSide::Src4372;
    std::vector<TauPart> parts;

    int size() const;
    friend bool operator==(const TauDecorated&, const TauDecorated&) = default;
};

void validate(const TauDecorated& d);
void for_each_tau(int n, TauSide side, const std::function<bool(const TauDecorated&)>& visit);
std::vector<TauDecorated> enumerate_tau(int n, TauSide side);
TauDecorated tau_forward(const TauDecorated& src);
TauDecorated tau_inverse(const TauDecorated& dst);
// Letter values of every u-step, left to right.
std::vector<TauLetter> full_letters(const TauDecorated& d);
Polynomial tau_weight(const TauDecorated& d);
Path to_path(const TauDecorated& d);

}  // namespace valleypaths
