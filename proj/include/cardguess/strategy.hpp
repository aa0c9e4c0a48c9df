#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cardguess/transition.hpp"

namespace cardguess {

enum class Provenance { ExactArgmax, ClosedForm, Custom };

struct Strategy {
  int n = 1;
  std::vector<int> guesses;  // guesses[i-1] is the label guessed at position i
  Provenance provenance = Provenance::Custom;
};

// Row-wise argmax strategy; ties broken to the smallest label. Positions
// whose row maximum is attained more than once are appended to
// `tie_positions` when given.
template <class S>
Strategy exact_strategy(const ProbMatrix<S>& matrix,
                        std::vector<int>* tie_positions = nullptr);

// Block strategy: guess floor(i/2^k)+1 in the top half and its mirror
// image in the bottom half. k = 0 is the identity guess. For odd n the
// center position follows the top-half rule.
Strategy closed_form_strategy(int n, int k);

// The two-case guess formula taken literally, without the mirroring
// that repairs binomial-mode ties. Kept for comparison output.
Strategy literal_box_strategy(int n, int k);

// Expected number of correct guesses: sum over positions of the matrix
// entry at the guessed label.
template <class S>
S expected_score(const ProbMatrix<S>& matrix, const Strategy& strategy);

// Leading term 2*sqrt(n)/sqrt((2^k-1)*pi) of the optimal expected score.
// k = 0 is a domain error (an unshuffled deck scores exactly n).
double asymptotic_expected(int n, int k);

// Float64 evaluation that builds rows from the mixture decomposition
// instead of powering the matrix; usable far beyond the exact budget.
struct MixtureScan {
  Strategy argmax_strategy;
  double argmax_expected = 0;
  double closed_form_expected = 0;
  std::vector<double> per_position;  // row maximum for each position
  std::vector<int> tie_positions;
};

MixtureScan scan_scores_f64(int n, int k);

// Single row of the k-shuffle matrix under Float64, via the mixture.
std::vector<double> mixture_row_f64(int n, int position, int k);

struct ScoreReport {
  int n = 1;
  int k = 0;
  Backend backend = Backend::ExactRational;
  double exact_expected = 0;
  std::string exact_expected_fraction;        // empty under Float64
  double closed_form_expected = 0;
  std::string closed_form_expected_fraction;  // empty under Float64
  std::optional<double> asymptotic;           // absent for k = 0
  std::vector<double> per_position;           // P(correct) under the argmax strategy
  std::vector<int> tie_positions;
};

ScoreReport score_report(const DeckConfig& cfg);

extern template Strategy exact_strategy<Rational>(const ProbMatrix<Rational>&, std::vector<int>*);
extern template Strategy exact_strategy<double>(const ProbMatrix<double>&, std::vector<int>*);
extern template Rational expected_score<Rational>(const ProbMatrix<Rational>&, const Strategy&);
extern template double expected_score<double>(const ProbMatrix<double>&, const Strategy&);

}  // namespace cardguess
