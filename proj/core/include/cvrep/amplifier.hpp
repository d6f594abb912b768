#pragma once

#include <vector>

namespace cvrep {

enum class AmplifierKind { Scissors, Optimal };

/// Number-basis action of a noiseless linear amplifier, |n> -> t_n |n>,
/// with hard truncation above the order N. The success amplitude is folded
/// into the coefficients.
struct AmplifierModel {
  AmplifierKind kind = AmplifierKind::Scissors;
  int order = 1;     // truncation order N, 1..kMaxOrder
  double gain = 1.0; // g >= 0

  static constexpr int kMaxOrder = 8;

  static AmplifierModel scissors(int order, double gain);
  static AmplifierModel optimal(int order, double gain);

  /// t_n; zero for n > order.
  double coefficient(int n) const;

  /// All coefficients t_0..t_N.
  std::vector<double> coefficients() const;

  void validate() const;
};

const char* to_string(AmplifierKind kind);

}  // namespace cvrep
