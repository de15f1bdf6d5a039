#ifndef RCF_IFS_HPP
#define RCF_IFS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "rcf/rng.hpp"

namespace rcf {

/// The two-map system T_x(s) = (s + x)/(1 + s + x) with x drawn uniformly
/// from {0, alpha}. Words over the symbol alphabet select compositions;
/// every word corresponds to a product of 2x2 generator matrices.

enum class Symbol : std::uint8_t { zero = 0, alpha = 1 };

using Word = std::vector<Symbol>;

/// 2x2 real matrix, row-major [[a, b], [c, d]].
struct Mat2 {
  double a = 1.0, b = 0.0;
  double c = 0.0, d = 1.0;

  double det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
};

/// Generator matrix (1, x; 1, 1+x) for one continued-fraction level.
inline Mat2 generator(double x) { return {1.0, x, 1.0, 1.0 + x}; }

/// Right endpoint M of the invariant interval [0, M]: the positive root of
/// M^2 + alpha*M - alpha = 0. Throws std::domain_error for alpha <= 0.
double fixed_point_m(double alpha);

/// Parameter bundle: alpha together with its derived support endpoint.
struct IfsParams {
  double alpha;
  double m_alpha;

  explicit IfsParams(double a) : alpha(a), m_alpha(fixed_point_m(a)) {}
};

/// One map application T_x(s) = (s + x)/(1 + s + x). Requires s, x >= 0.
inline double apply_map(double x, double s) { return (s + x) / (1.0 + s + x); }

inline double symbol_value(Symbol s, double alpha) {
  return s == Symbol::alpha ? alpha : 0.0;
}

/// Left-to-right product of the generators of `word`; the empty word gives
/// the identity. Symbol i multiplies on the right, so the matrix of word
/// (x_1..x_n) represents T_{x_1} o ... o T_{x_n}.
Mat2 word_matrix(std::span<const Symbol> word, double alpha);

/// (a s + b)/(c s + d) for the word's matrix; equals the nested application
/// T_{x_1}( ... T_{x_n}(s) ... ).
double evaluate_cf(std::span<const Symbol> word, double alpha, double s);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

/// Image of [0, M] under the word's map: [b/d, (aM+b)/(cM+d)].
Interval cylinder_interval(std::span<const Symbol> word, double alpha);

enum class SupportKind { cantor, interval };

struct SupportInfo {
  SupportKind kind;
  double gap;  // T_alpha(0) - T_0(M); positive iff the two images are disjoint
};

/// Cantor/interval dichotomy of the support: the images T_0[0,M] and
/// T_alpha[0,M] are disjoint (leaving a central gap) iff alpha > 1/2.
SupportInfo support_type(double alpha);

/// One sample of the stationary distribution, truncated at `depth` levels:
/// draws x_1..x_depth uniformly from {0, alpha} and returns the finite
/// continued fraction at s = 0. The exact sample lies in the drawn word's
/// cylinder, so the truncation error is at most that cylinder's length.
double sample_mu(double alpha, int depth, RngStream& rng);

/// (1/2n) log(D_n (C_n M + D_n) / M) evaluated from the word matrix.
/// Only suitable for short words (entries grow exponentially); the Monte
/// Carlo estimator uses a renormalized streaming version of the same value.
double word_log_growth(std::span<const Symbol> word, double alpha);

}  // namespace rcf

#endif
