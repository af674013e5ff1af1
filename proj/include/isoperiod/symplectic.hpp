#ifndef ISOPERIOD_SYMPLECTIC_HPP
#define ISOPERIOD_SYMPLECTIC_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "isoperiod/numeric.hpp"

namespace isoperiod {

/// Block-diagonal form with g blocks [[0,1],[-1,0]].
struct SymplecticForm {
  int genus = 0;
  IntMatrix matrix;
};

SymplecticForm standard_form(int genus);

enum class Family { A, B, C };

/// One generator symbol. `index` is 1-based: A_k, B_k for k = 1..g and C_k
/// for k = 1..g-1. `exponent` is +1 or -1.
struct Letter {
  Family family = Family::A;
  int index = 1;
  int exponent = 1;

  Letter inverse() const { return {family, index, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct GeneratorWord {
  int genus = 0;
  std::vector<Letter> letters;
};

/// A_k: 2x2 block [[1,1],[0,1]] at pair k; B_k: [[1,0],[1,1]]; C_k: the 4x4
/// block [[1,0,0,0],[0,1,0,1],[-1,0,1,0],[0,0,0,1]] on pairs k, k+1.
/// Throws BadIndex.
IntMatrix generator_matrix(const Letter& letter, int genus);

/// M^T J M == J. Throws SizeMismatch when M is not 2g x 2g.
bool is_symplectic(const IntMatrix& m, const SymplecticForm& form);
bool is_symplectic(const IntMatrix& m);

/// Ordered product of the generator matrices; identity for the empty word.
IntMatrix compose(const GeneratorWord& w);

/// Called with the working matrix after each reduction stage.
using StageObserver = std::function<void(const IntMatrix&)>;

/// Word w with compose(w) == u, all letters with exponent +-1. A greedy
/// norm descent first strips cheap generators; then each pair of columns is
/// cleared by Euclidean reduction with generator words applied on the left,
/// and the observer sees the working matrix after each of four stages per
/// pair. Throws NotSymplectic, or InternalCheckFailed if a stage leaves the
/// group or the result does not recompose.
GeneratorWord decompose(const IntMatrix& u, int genus, const StageObserver& observer = {});

/// Letters separated by single spaces, e.g. "A1 B2^-1 C1".
std::string format_word(const GeneratorWord& w);
/// Inverse of format_word; throws ParseError or BadIndex.
GeneratorWord parse_word(std::string_view text, int genus);

GeneratorWord inverse_word(const GeneratorWord& w);

}  // namespace isoperiod

#endif  // ISOPERIOD_SYMPLECTIC_HPP
