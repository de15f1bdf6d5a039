#include "rcf/ifs.hpp"

#include <cmath>
#include <stdexcept>

namespace rcf {

double fixed_point_m(double alpha) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("fixed_point_m: alpha must be positive");
  }
  return (-alpha + std::sqrt(alpha * alpha + 4.0 * alpha)) / 2.0;
}

Mat2 word_matrix(std::span<const Symbol> word, double alpha) {
  Mat2 m;  // identity
  for (Symbol s : word) {
    m = m * generator(symbol_value(s, alpha));
  }
  return m;
}

double evaluate_cf(std::span<const Symbol> word, double alpha, double s) {
  const Mat2 m = word_matrix(word, alpha);
  return (m.a * s + m.b) / (m.c * s + m.d);
}

Interval cylinder_interval(std::span<const Symbol> word, double alpha) {
  const Mat2 m = word_matrix(word, alpha);
  const double big_m = fixed_point_m(alpha);
  return {m.b / m.d, (m.a * big_m + m.b) / (m.c * big_m + m.d)};
}

SupportInfo support_type(double alpha) {
  const double big_m = fixed_point_m(alpha);
  const double gap = apply_map(alpha, 0.0) - apply_map(0.0, big_m);
  return {gap > 0.0 ? SupportKind::cantor : SupportKind::interval, gap};
}

double sample_mu(double alpha, int depth, RngStream& rng) {
  if (depth < 1) throw std::domain_error("sample_mu: depth must be >= 1");
  // Innermost symbol first: s = T_{x_1}(...T_{x_depth}(0)...). The maps
  // commute with the draw order since the x_i are i.i.d.
  double s = 0.0;
  for (int i = 0; i < depth; ++i) {
    s = apply_map(rng.next_bit() ? alpha : 0.0, s);
  }
  return s;
}

double word_log_growth(std::span<const Symbol> word, double alpha) {
  const Mat2 m = word_matrix(word, alpha);
  const double big_m = fixed_point_m(alpha);
  const double n = static_cast<double>(word.size());
  return std::log(m.d * (m.c * big_m + m.d) / big_m) / (2.0 * n);
}

}  // namespace rcf
