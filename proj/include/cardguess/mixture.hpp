#pragma once

#include <vector>

#include "cardguess/numeric.hpp"

namespace cardguess {

// Leaf of the bisection tree at depth k: component number t in 1..2^k
// together with its list of pile choices, outermost entry first. The
// all-ones list is t = 1, the all-twos list is t = 2^k.
struct ComponentIndex {
  int t = 1;
  std::vector<int> bits;
};

ComponentIndex index_to_list(int t, int k);
int list_to_index(const std::vector<int>& bits);

// One of the 2^k distributions whose equal-weight average is row
// `position` of the k-shuffle matrix: the sum of two independent
// binomials plus one.
struct MixtureComponent {
  int n = 1;
  int position = 1;
  int k = 0;
  int t = 1;
  int b1_trials = 0;   // n - position
  Rational b1_prob;    // (t-1) / 2^k
  int b2_trials = 0;   // position - 1
  Rational b2_prob;    // t / 2^k
};

MixtureComponent make_component(int n, int position, int k, int t);

// Coefficients of the component's probability generating function,
// index j-1 holding the coefficient of x^j, obtained by expanding the
// two linear-factor powers.
template <class S>
std::vector<S> component_pgf_coeffs(int n, int position, int k, int t);

// Same distribution via binomial pmf construction and one convolution.
template <class S>
std::vector<S> component_pmf(const MixtureComponent& c);

// Same distribution again, with the linear factors derived by walking
// the bisection tree from the unshuffled case and averaging pairwise at
// each level.
template <class S>
std::vector<S> pgf_via_recursion(int n, int position, int k, int t);

// Equal-weight mixture of all 2^k components: row `position` of the
// k-shuffle matrix.
template <class S>
std::vector<S> recompose(int n, int position, int k);

struct Moments {
  Rational mean;
  Rational variance;
};

// Exact mean and variance of a component.
Moments component_moments(const MixtureComponent& c);

// Which component peaks highest: t = 1 for the top half of the deck,
// t = 2^k otherwise.
ComponentIndex highest_component(int n, int position, int k);

struct PeakEstimate {
  int mode = 1;        // exact argmax of the component pmf
  double height = 0;   // normal-approximation peak height 1/(sigma*sqrt(2*pi))
  bool degenerate = false;  // true when the component is a point mass
};

// Exact mode (pmf argmax, ties broken toward the deck center) plus the
// normal-approximation height.
PeakEstimate peak_estimate(const MixtureComponent& c);

// Closed-form mode locations for the extreme components, as written;
// at binomial-mode ties these can sit one step off the exact argmax.
int top_component_mode_formula(int position, int k);
int bottom_component_mode_formula(int n, int position, int k);

extern template std::vector<Rational> component_pgf_coeffs<Rational>(int, int, int, int);
extern template std::vector<double> component_pgf_coeffs<double>(int, int, int, int);
extern template std::vector<Rational> component_pmf<Rational>(const MixtureComponent&);
extern template std::vector<double> component_pmf<double>(const MixtureComponent&);
extern template std::vector<Rational> pgf_via_recursion<Rational>(int, int, int, int);
extern template std::vector<double> pgf_via_recursion<double>(int, int, int, int);
extern template std::vector<Rational> recompose<Rational>(int, int, int);
extern template std::vector<double> recompose<double>(int, int, int);

}  // namespace cardguess
