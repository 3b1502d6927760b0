#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "barbell/equivariant.hpp"
#include "barbell/geometries.hpp"
#include "barbell/report.hpp"

namespace barbell {

/// Barbell with both cuffs parallel copies of `cuff` and bar winding k times.
BarbellSpec windingBarbell(const Geometry& g, const std::string& name, const std::string& cuff,
                           const DeckElement& holonomy);
/// beta^k as a list of specs: iterate for k > 0, inverse for k < 0, empty for 0.
std::vector<BarbellSpec> barbellPower(const BarbellSpec& b, std::int64_t k);

/// Closed form of f for the Morse-simple knots, built from its nine exponents mod 2.
RingElement morseSimpleClosedForm(std::int64_t k, std::int64_t l);
/// 1 + (t + t^-1)(t^k + t^-k)(t^l + t^-l)
RingElement higherDimClosedForm(std::int64_t k, std::int64_t l);

struct Genus1HdResult {
  std::optional<Integer> closedForm;  // nullopt in the degenerate case h = v = 0
  std::optional<Integer> engine;      // nullopt: infinite
  RingElement f{DeckGroup::freeAbelian(1), Coefficients::F2};
  std::string branch;
};

/// Dimension for the synthetic class with pairings h, v, b (F2 supports).
/// two = true applies beta_v then beta_h; otherwise beta_h alone.
Genus1HdResult genus1HdDim(const std::set<std::int64_t>& h, const std::set<std::int64_t>& v,
                           const std::set<std::int64_t>& b, std::int64_t k, std::int64_t l, bool two = true);

std::vector<std::string> theoremNames();
Report runTheorem(const std::string& name, const Params& params);

std::vector<std::string> obstructionNames();
Report obstructionScenario(const std::string& name, const Params& params);

std::vector<std::string> sweepNames();
/// Grid runs; results are assembled in grid order regardless of thread count.
Report runSweep(const std::string& name, const Params& params, unsigned threads);

/// BARBELL_THREADS if set, otherwise the hardware concurrency.
unsigned defaultThreads();

}  // namespace barbell
