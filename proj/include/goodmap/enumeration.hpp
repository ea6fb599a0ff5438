#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "goodmap/finite_space.hpp"

namespace goodmap {

// All labeled preorders on n points, in a fixed deterministic order
// (ascending by relation encoding). Practical for n <= 4.
std::vector<FiniteSpace> all_preorders(int n);

// The T0 members of all_preorders(n), i.e. labeled posets.
std::vector<FiniteSpace> all_posets(int n);

bool is_monotone_assignment(const FiniteSpace& x, const FiniteSpace& y,
                            const std::vector<int>& assignment);

// All continuous (monotone) assignments x -> y, lexicographic order.
std::vector<std::vector<int>> all_monotone_assignments(const FiniteSpace& x,
                                                       const FiniteSpace& y);

// All families of nonempty opens whose union is the whole space.
std::vector<std::vector<Mask>> all_open_covers(const FiniteSpace& space);

// Seeded deterministic sampling. Raw engine output is used modulo the range
// (std distributions are implementation-defined, which would break report
// byte-stability across platforms).
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound);

FiniteSpace random_preorder(std::mt19937_64& rng, int n);
std::vector<int> random_monotone_assignment(std::mt19937_64& rng, const FiniteSpace& x,
                                            const FiniteSpace& y);

}  // namespace goodmap
