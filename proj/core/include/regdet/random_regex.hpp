#pragma once

#include <cstdint>
#include <random>

#include "regdet/regex.hpp"

namespace regdet {

/// Uniform draw in [0, bound) from raw engine output. Unlike
/// std::uniform_int_distribution the result sequence is identical across
/// standard library implementations, which keeps sweep output reproducible.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

/// Random expression of exactly the given alphabetic width. Subtrees of width
/// zero (ε, ∅, their stars) appear occasionally so that every operator case
/// of the NFA construction is exercised.
Regex random_regex(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t width);

}  // namespace regdet
