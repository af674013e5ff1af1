#ifndef ISOPERIOD_GENERATE_HPP
#define ISOPERIOD_GENERATE_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "isoperiod/moves.hpp"
#include "isoperiod/symplectic.hpp"

namespace isoperiod {

using Rng = std::mt19937_64;

/// 2g positive lengths n_i / p_i with distinct primes p_i, so that short
/// integer combinations of them do not vanish.
std::vector<Rational> random_basis(int genus, Rng& rng);

/// A shift of a random arc by a random fraction of its free room.
std::optional<Shift> random_shift(const ArcDiagram& d, Rng& rng);

/// Random legal moves from d, at most `max_moves` of them: single shifts and
/// prepared Vasiliev moves (a few shifts followed by the move).
std::vector<Move> random_walk(const ArcDiagram& d, std::size_t max_moves, Rng& rng);

/// Uniform random word of the given length.
GeneratorWord random_word(int genus, std::size_t length, Rng& rng);

}  // namespace isoperiod

#endif  // ISOPERIOD_GENERATE_HPP
