#pragma once

#include <vector>

#include "cardguess/matrix.hpp"
#include "cardguess/numeric.hpp"

namespace cardguess {

enum class Backend { ExactRational, Float64 };

// Budget for the exact backend; Float64 is unrestricted.
struct ExactLimits {
  int max_n = 512;
  int max_k = 8;
};

struct DeckConfig {
  int n = 1;
  int k = 0;
  Backend backend = Backend::ExactRational;
  ExactLimits limits{};

  // Throws std::domain_error for bad n/k, CapacityError when the exact
  // backend budget is exceeded.
  void validate() const;
};

// Position-to-label probability matrix after k riffle shuffles.
template <class S>
struct ProbMatrix {
  int n = 0;
  int k = 0;
  SquareMatrix<S> entries;
};

// Probability that the card at `position` carries `label` after one
// riffle shuffle of a deck of `n` cards. Exact dyadic result.
Rational single_shuffle_prob(int position, int label, int n);
double single_shuffle_prob_f64(int position, int label, int n);

template <class S>
ProbMatrix<S> single_shuffle_matrix(int n);

// k-fold shuffle matrix, built by k sequential multiplications of the
// single-shuffle matrix (k = 0 gives the identity).
template <class S>
ProbMatrix<S> k_shuffle_matrix(int n, int k);

template <class S>
std::vector<S> row_pmf(const ProbMatrix<S>& matrix, int position);

extern template ProbMatrix<Rational> single_shuffle_matrix<Rational>(int);
extern template ProbMatrix<double> single_shuffle_matrix<double>(int);
extern template ProbMatrix<Rational> k_shuffle_matrix<Rational>(int, int);
extern template ProbMatrix<double> k_shuffle_matrix<double>(int, int);
extern template std::vector<Rational> row_pmf<Rational>(const ProbMatrix<Rational>&, int);
extern template std::vector<double> row_pmf<double>(const ProbMatrix<double>&, int);

}  // namespace cardguess
