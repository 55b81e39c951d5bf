#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "valleypaths/path.hpp"
#include "valleypaths/polynomial.hpp"
#include "valleypaths/series.hpp"
#include "valleypaths/vstructure.hpp"

namespace valleypaths {

// alpha_k weighs a maximal pyramid of height k at altitude >= 1, gamma_k one at
// altitude 0, and beta_k the opening u^k of a primitive factor whose valleys
// sit at level k. The beta entries are numerators over beta_denominator.
struct WeightSpec {
    std::size_t order = 0;
    std::vector<Polynomial> alpha;  // alpha[k-1] = alpha_k
    std::vector<Polynomial> beta;
    std::vector<Polynomial> gamma;
    Polynomial beta_denominator{1};

    const Polynomial& alpha_k(std::size_t k) const;
    const Polynomial& beta_k(std::size_t k) const;
    const Polynomial& gamma_k(std::size_t k) const;

    friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

struct SeriesTriple {
    TruncatedSeries alpha;
    TruncatedSeries beta;  // numerator series, see WeightSpec::beta_denominator
    TruncatedSeries gamma;
};

SeriesTriple to_series(const WeightSpec& spec);
WeightSpec spec_from_series(const TruncatedSeries& alpha, const TruncatedSeries& beta, const TruncatedSeries& gamma,
                            const Polynomial& beta_denominator = Polynomial(1));

TruncatedSeries spec_v_series(const WeightSpec& spec);
TruncatedSeries spec_v_series_ab(const WeightSpec& spec);
bool gamma_is_alpha_beta(const WeightSpec& spec);

Polynomial weight_of_part(const Part& part, const WeightSpec& spec);
Polynomial weight_of_structure(const VStructure& s, const WeightSpec& spec);
// Applies the pyramid/valley rules directly to the steps, without building a VStructure.
Polynomial weight_of_path(const Path& p, const WeightSpec& spec);
Polynomial weight_sum_v(int n, const WeightSpec& spec);

enum class TargetWeighting { None, MotzkinAB, SchroderQ, NarayanaT, LevelPeaks };

std::string_view to_string(TargetWeighting w);
TargetWeighting parse_weighting(std::string_view name);
Polynomial target_weight(const Path& p, TargetWeighting weighting);
Polynomial weight_sum_target(int n, Family family, PathFilter filter, TargetWeighting weighting);

using ParamMap = std::map<std::string, std::string>;

struct RegistryEntry {
    std::string name;
    std::vector<std::string> params;
    std::string summary;
};

const std::vector<RegistryEntry>& registry_entries();
// Builds a named weight system truncated at `order`. Polynomial parameters
// (a, b, c, d, q, t) are substituted when given; the value "sym" keeps them
// symbolic. Integer parameters m, r select the Fuss-Catalan variants.
WeightSpec registry_get(const std::string& name, const ParamMap& params, std::size_t order);

}  // namespace valleypaths
