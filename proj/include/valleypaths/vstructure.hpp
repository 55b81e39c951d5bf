#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "valleypaths/path.hpp"

namespace valleypaths {

// Primitive factor u^h d^h.
struct Pyr {
    int height = 1;
    friend bool operator==(const Pyr&, const Pyr&) = default;
};

// Primitive factor u^k (u^i1 d^i1)...(u^ir d^ir) d^k with r >= 2: all valleys at level k.
struct Block {
    int ascent = 1;
    std::vector<int> heights;
    friend bool operator==(const Block&, const Block&) = default;
};

using Part = std::variant<Pyr, Block>;

int part_size(const Part& part);
std::string part_str(const Part& part);
std::vector<Step> part_steps(const Part& part);

// Canonical decomposition of a valley-uniform Dyck path into primitive parts.
struct VStructure {
    std::vector<Part> parts;

    int semilength() const;
    std::string str() const;
    friend bool operator==(const VStructure&, const VStructure&) = default;
};

Path to_path(const VStructure& s);
// Throws NotInV when some primitive factor has valleys at two levels.
VStructure from_path(const Path& p);
bool is_in_v(const Path& p);

// Every composition of n into Pyr/Block parts exactly once. The first part runs
// over Pyr(n)..Pyr(1), then blocks by ascent and heights in lexicographic order.
void for_each_v_structure(int n, const std::function<bool(const VStructure&)>& visit);
std::vector<VStructure> enumerate_v_structures(int n);

// Compositions of `total` into at least `min_parts` positive parts, lexicographic.
void for_each_composition(int total, int min_parts, const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace valleypaths
