#include "regdet/random_regex.hpp"

namespace regdet {

namespace {

Regex generate(std::mt19937_64& rng, std::size_t k, std::size_t w, bool allow_star) {
  const auto roll = draw(rng, 100);
  if (w == 0) {
    if (roll < 55) return Regex::epsilon();
    if (roll < 85 || !allow_star) return Regex::empty_set();
    return Regex::star(draw(rng, 2) ? Regex::epsilon() : Regex::empty_set());
  }
  if (allow_star && roll < 15) return Regex::star(generate(rng, k, w, false));
  if (w == 1) {
    Regex a = Regex::symbol(static_cast<Symbol>(draw(rng, k)));
    if (roll < 25) {
      Regex z = generate(rng, k, 0, true);
      return draw(rng, 2) ? Regex::concat(a, z) : Regex::alt(z, a);
    }
    return a;
  }
  // Split into a left/right share; a zero-width side is allowed but rare.
  std::size_t left = 1 + draw(rng, w - 1);
  if (draw(rng, 10) == 0) left = draw(rng, 2) ? 0 : w;
  Regex l = generate(rng, k, left, true);
  Regex r = generate(rng, k, w - left, true);
  return roll < 55 ? Regex::concat(std::move(l), std::move(r)) : Regex::alt(std::move(l), std::move(r));
}

}  // namespace

Regex random_regex(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t width) {
  return generate(rng, alphabet_size, width, true);
}

}  // namespace regdet
