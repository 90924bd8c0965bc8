#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "multiflag/error.hpp"

namespace multiflag {

inline constexpr int kMaxAmbientDim = 32;

/// Exponent vector packed one byte per variable, variable 0 in the most
/// significant byte of word 0, so lexicographic order is word order.
struct Monomial {
  std::array<std::uint64_t, kMaxAmbientDim / 8> words{};
  int degree = 0;

  int exp(int i) const { return static_cast<int>((words[i >> 3] >> shift(i)) & 0xffu); }
  void set_exp(int i, int e) {
    words[i >> 3] &= ~(std::uint64_t{0xff} << shift(i));
    words[i >> 3] |= std::uint64_t(e) << shift(i);
  }
  bool operator==(const Monomial& o) const { return words == o.words; }

 private:
  static int shift(int i) { return (7 - (i & 7)) * 8; }
};

/// Graded lexicographic order, descending: true if a comes before b.
bool grlex_before(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with real coefficients over R^dim.
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
class PolyScalar {
 public:
  using Term = std::pair<Monomial, double>;

  PolyScalar() = default;
  explicit PolyScalar(int dim);

  static PolyScalar constant(int dim, double c);
  static PolyScalar variable(int dim, int index);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  /// Largest absolute coefficient; 0 for the zero polynomial.
  double max_abs_coeff() const;

  /// True iff the variable appears in some term.
  bool depends_on(int index) const;

  PolyScalar derivative(int index) const;

  double evaluate(const Eigen::Ref<const Eigen::VectorXd>& p) const;
  Eigen::VectorXd gradient_at(const Eigen::Ref<const Eigen::VectorXd>& p) const;

  PolyScalar& operator+=(const PolyScalar& o);
  PolyScalar& operator-=(const PolyScalar& o);
  PolyScalar& operator*=(double s);

  friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
  friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
  friend PolyScalar operator*(PolyScalar a, double s) { return a *= s; }
  friend PolyScalar operator*(double s, PolyScalar a) { return a *= s; }
  friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
  PolyScalar operator-() const { return *this * -1.0; }

  bool operator==(const PolyScalar& o) const;
  bool operator!=(const PolyScalar& o) const { return !(*this == o); }

  /// One term per line, "coeff * x_i^r^e ..." when block > 0 (block = m+1),
  /// "coeff * u_j^e ..." otherwise. Deterministic under the term order.
  std::string dump(int block = 0) const;

 private:
  static PolyScalar from_unsorted(int dim, std::vector<Term> terms);
  PolyScalar& merge(const PolyScalar& o, double sign);

  int dim_ = 0;
  std::vector<Term> terms_;
};

/// Polynomial vector field on R^dim.
class PolyField {
 public:
  PolyField() = default;
  explicit PolyField(int dim);
  explicit PolyField(std::vector<PolyScalar> components);

  /// Coordinate field d/du_index.
  static PolyField coordinate(int dim, int index);

  int dim() const { return dim_; }
  const PolyScalar& operator[](int i) const { return comps_[i]; }
  PolyScalar& operator[](int i) { return comps_[i]; }
  const std::vector<PolyScalar>& components() const { return comps_; }

  bool is_zero() const;
  std::size_t term_count() const;

  Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& p) const;
  /// J(i, j) = d X^i / d u_j at p.
  Eigen::MatrixXd jacobian_at(const Eigen::Ref<const Eigen::VectorXd>& p) const;

  PolyField& operator+=(const PolyField& o);
  PolyField& operator-=(const PolyField& o);
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend PolyField operator*(const PolyScalar& f, const PolyField& X);
  friend PolyField operator*(double s, const PolyField& X);

  bool operator==(const PolyField& o) const { return dim_ == o.dim_ && comps_ == o.comps_; }
  bool operator!=(const PolyField& o) const { return !(*this == o); }

  std::string dump(int block = 0) const;

 private:
  int dim_ = 0;
  std::vector<PolyScalar> comps_;
};

/// Ordered generating family of a distribution.
class Frame {
 public:
  Frame() = default;
  explicit Frame(std::vector<PolyField> fields);

  int dim() const { return fields_.empty() ? 0 : fields_.front().dim(); }
  int size() const { return static_cast<int>(fields_.size()); }
  const PolyField& operator[](int i) const { return fields_[i]; }
  const std::vector<PolyField>& fields() const { return fields_; }

  void append(PolyField f);
  void append(const Frame& other);

  /// Columns are the fields evaluated at p.
  Eigen::MatrixXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& p) const;

 private:
  std::vector<PolyField> fields_;
};

/// [X, Y] = (DY) X - (DX) Y, exact.
PolyField lie_bracket(const PolyField& X, const PolyField& Y);

/// [X, Y](p) from the analytic Jacobians at p, without forming the bracket polynomial.
Eigen::VectorXd lie_bracket_at(const PolyField& X, const PolyField& Y,
                               const Eigen::Ref<const Eigen::VectorXd>& p);

/// Df(X) = sum_r X^r df/du_r, exact.
PolyScalar derive_scalar(const PolyScalar& f, const PolyField& X);

Eigen::VectorXd evaluate_field(const PolyField& X, const Eigen::Ref<const Eigen::VectorXd>& p);
double evaluate_scalar(const PolyScalar& f, const Eigen::Ref<const Eigen::VectorXd>& p);

}  // namespace multiflag
