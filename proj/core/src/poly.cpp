#include "multiflag/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace multiflag {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : m.words) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxAmbientDim) {
    std::ostringstream os;
    os << "ambient dimension " << dim << " exceeds " << kMaxAmbientDim;
    throw Error(ErrorCode::SizeLimitExceeded, os.str());
  }
}

void check_same(int a, int b) {
  if (a != b) {
    std::ostringstream os;
    os << "ambient dimensions " << a << " and " << b;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

void check_point(int dim, Eigen::Index n) {
  if (n != dim) {
    std::ostringstream os;
    os << "point has " << n << " coordinates, polynomial ring has " << dim;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

template <class F>
void for_each_var(const Monomial& m, F&& f) {
  for (std::size_t w = 0; w < m.words.size(); ++w) {
    std::uint64_t word = m.words[w];
    while (word != 0) {
      const int b = __builtin_clzll(word) >> 3;
      const int sh = (7 - b) * 8;
      f(static_cast<int>(w) * 8 + b, static_cast<int>((word >> sh) & 0xffu));
      word &= ~(std::uint64_t{0xff} << sh);
    }
  }
}

// pw[i * stride + e] = p_i^e for e < stride.
std::vector<double> power_table(const Eigen::Ref<const Eigen::VectorXd>& p, int dim, int stride) {
  std::vector<double> pw(static_cast<std::size_t>(dim) * stride);
  for (int i = 0; i < dim; ++i) {
    double v = 1.0;
    for (int e = 0; e < stride; ++e) {
      pw[i * stride + e] = v;
      v *= p[i];
    }
  }
  return pw;
}

}  // namespace

bool grlex_before(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  for (std::size_t w = 0; w < a.words.size(); ++w) {
    if (a.words[w] != b.words[w]) return a.words[w] > b.words[w];
  }
  return false;
}

PolyScalar::PolyScalar(int dim) : dim_(dim) { check_dim(dim); }

PolyScalar PolyScalar::constant(int dim, double c) {
  PolyScalar p(dim);
  if (c != 0.0) p.terms_.push_back({Monomial{}, c});
  return p;
}

PolyScalar PolyScalar::variable(int dim, int index) {
  PolyScalar p(dim);
  if (index < 0 || index >= dim) throw Error(ErrorCode::IndexOutOfRange, "variable index");
  Monomial m;
  m.set_exp(index, 1);
  m.degree = 1;
  p.terms_.push_back({m, 1.0});
  return p;
}

PolyScalar PolyScalar::from_unsorted(int dim, std::vector<Term> terms) {
  PolyScalar p(dim);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_before(a.first, b.first); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      p.terms_.push_back(t);
    }
  }
  p.terms_.erase(std::remove_if(p.terms_.begin(), p.terms_.end(),
                                [](const Term& t) { return t.second == 0.0; }),
                 p.terms_.end());
  return p;
}

int PolyScalar::degree() const { return terms_.empty() ? -1 : terms_.front().first.degree; }

double PolyScalar::max_abs_coeff() const {
  double r = 0.0;
  for (const auto& t : terms_) r = std::max(r, std::abs(t.second));
  return r;
}

bool PolyScalar::depends_on(int index) const {
  for (const auto& t : terms_) {
    if (t.first.exp(index) != 0) return true;
  }
  return false;
}

PolyScalar PolyScalar::derivative(int index) const {
  if (index < 0 || index >= dim_) throw Error(ErrorCode::IndexOutOfRange, "derivative index");
  std::vector<Term> out;
  for (const auto& [mono, c] : terms_) {
    const int e = mono.exp(index);
    if (e == 0) continue;
    Monomial d = mono;
    d.set_exp(index, e - 1);
    d.degree -= 1;
    out.push_back({d, c * e});
  }
  // Differentiation in one variable is injective on monomials, but it does
  // not preserve the order across degrees.
  return from_unsorted(dim_, std::move(out));
}

double PolyScalar::evaluate(const Eigen::Ref<const Eigen::VectorXd>& p) const {
  check_point(dim_, p.size());
  if (terms_.empty()) return 0.0;
  const int stride = degree() + 1;
  const std::vector<double> pw = power_table(p, dim_, stride);
  double sum = 0.0;
  for (const auto& [mono, c] : terms_) {
    double v = c;
    for_each_var(mono, [&](int i, int e) { v *= pw[i * stride + e]; });
    sum += v;
  }
  return sum;
}

Eigen::VectorXd PolyScalar::gradient_at(const Eigen::Ref<const Eigen::VectorXd>& p) const {
  check_point(dim_, p.size());
  Eigen::VectorXd g = Eigen::VectorXd::Zero(dim_);
  if (terms_.empty()) return g;
  const int stride = degree() + 1;
  const std::vector<double> pw = power_table(p, dim_, stride);
  int vars[kMaxAmbientDim];
  int exps[kMaxAmbientDim];
  double vals[kMaxAmbientDim];
  for (const auto& [mono, c] : terms_) {
    int n = 0;
    for_each_var(mono, [&](int i, int e) {
      vars[n] = i;
      exps[n] = e;
      vals[n++] = pw[i * stride + e];
    });
    for (int a = 0; a < n; ++a) {
      const int i = vars[a];
      double v = c * exps[a] * pw[i * stride + exps[a] - 1];
      for (int b = 0; b < n; ++b) {
        if (b != a) v *= vals[b];
      }
      g[i] += v;
    }
  }
  return g;
}

PolyScalar& PolyScalar::merge(const PolyScalar& o, double sign) {
  check_same(dim_, o.dim_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && grlex_before(a->first, b->first))) {
      out.push_back(*a++);
    } else if (a == terms_.end() || grlex_before(b->first, a->first)) {
      out.push_back({b->first, sign * b->second});
      ++b;
    } else {
      const double c = a->second + sign * b->second;
      if (c != 0.0) out.push_back({a->first, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) { return merge(o, 1.0); }
PolyScalar& PolyScalar::operator-=(const PolyScalar& o) { return merge(o, -1.0); }

PolyScalar& PolyScalar::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
  check_same(a.dim_, b.dim_);
  if (a.is_zero() || b.is_zero()) return PolyScalar(a.dim_);
  std::unordered_map<Monomial, double, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      // Every exponent is bounded by the degree, so bytes cannot carry.
      if (ma.degree + mb.degree > 255) throw Error(ErrorCode::SizeLimitExceeded, "degree above 255");
      Monomial m;
      for (std::size_t w = 0; w < m.words.size(); ++w) m.words[w] = ma.words[w] + mb.words[w];
      m.degree = ma.degree + mb.degree;
      acc[m] += ca * cb;
    }
  }
  std::vector<PolyScalar::Term> terms(acc.begin(), acc.end());
  return PolyScalar::from_unsorted(a.dim_, std::move(terms));
}

bool PolyScalar::operator==(const PolyScalar& o) const {
  if (dim_ != o.dim_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].first == o.terms_[i].first) || terms_[i].second != o.terms_[i].second) return false;
  }
  return true;
}

std::string PolyScalar::dump(int block) const {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [mono, c] : terms_) {
    os << c << " *";
    for_each_var(mono, [&](int i, int e) {
      if (block > 0) {
        os << " x_" << i / block << "^" << i % block + 1 << "^" << e;
      } else {
        os << " u_" << i << "^" << e;
      }
    });
    os << "\n";
  }
  return os.str();
}

PolyField::PolyField(int dim) : dim_(dim), comps_(dim, PolyScalar(dim)) { check_dim(dim); }

PolyField::PolyField(std::vector<PolyScalar> components)
    : dim_(static_cast<int>(components.size())), comps_(std::move(components)) {
  check_dim(dim_);
  for (const auto& c : comps_) check_same(c.dim(), dim_);
}

PolyField PolyField::coordinate(int dim, int index) {
  PolyField f(dim);
  if (index < 0 || index >= dim) throw Error(ErrorCode::IndexOutOfRange, "coordinate field index");
  f.comps_[index] = PolyScalar::constant(dim, 1.0);
  return f;
}

bool PolyField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const PolyScalar& c) { return c.is_zero(); });
}

std::size_t PolyField::term_count() const {
  std::size_t n = 0;
  for (const auto& c : comps_) n += c.term_count();
  return n;
}

Eigen::VectorXd PolyField::evaluate(const Eigen::Ref<const Eigen::VectorXd>& p) const {
  check_point(dim_, p.size());
  Eigen::VectorXd v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = comps_[i].evaluate(p);
  return v;
}

Eigen::MatrixXd PolyField::jacobian_at(const Eigen::Ref<const Eigen::VectorXd>& p) const {
  check_point(dim_, p.size());
  Eigen::MatrixXd J(dim_, dim_);
  for (int i = 0; i < dim_; ++i) J.row(i) = comps_[i].gradient_at(p).transpose();
  return J;
}

PolyField& PolyField::operator+=(const PolyField& o) {
  check_same(dim_, o.dim_);
  for (int i = 0; i < dim_; ++i) comps_[i] += o.comps_[i];
  return *this;
}

PolyField& PolyField::operator-=(const PolyField& o) {
  check_same(dim_, o.dim_);
  for (int i = 0; i < dim_; ++i) comps_[i] -= o.comps_[i];
  return *this;
}

PolyField operator*(const PolyScalar& f, const PolyField& X) {
  check_same(f.dim(), X.dim_);
  PolyField out(X.dim_);
  for (int i = 0; i < X.dim_; ++i) out.comps_[i] = f * X.comps_[i];
  return out;
}

PolyField operator*(double s, const PolyField& X) {
  PolyField out = X;
  for (auto& c : out.comps_) c *= s;
  return out;
}

std::string PolyField::dump(int block) const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    if (comps_[i].is_zero()) continue;
    if (block > 0) {
      os << "[d/dx_" << i / block << "^" << i % block + 1 << "]\n";
    } else {
      os << "[d/du_" << i << "]\n";
    }
    os << comps_[i].dump(block);
  }
  return os.str();
}

Frame::Frame(std::vector<PolyField> fields) : fields_(std::move(fields)) {
  for (const auto& f : fields_) check_same(f.dim(), fields_.front().dim());
}

void Frame::append(PolyField f) {
  if (!fields_.empty()) check_same(f.dim(), dim());
  fields_.push_back(std::move(f));
}

void Frame::append(const Frame& other) {
  for (const auto& f : other.fields()) append(f);
}

Eigen::MatrixXd Frame::evaluate(const Eigen::Ref<const Eigen::VectorXd>& p) const {
  Eigen::MatrixXd M(p.size(), size());
  for (int a = 0; a < size(); ++a) M.col(a) = fields_[a].evaluate(p);
  return M;
}

PolyField lie_bracket(const PolyField& X, const PolyField& Y) {
  check_same(X.dim(), Y.dim());
  const int n = X.dim();
  PolyField out(n);
  for (int i = 0; i < n; ++i) {
    PolyScalar acc(n);
    for (int j = 0; j < n; ++j) {
      if (!X[j].is_zero() && Y[i].depends_on(j)) acc += X[j] * Y[i].derivative(j);
      if (!Y[j].is_zero() && X[i].depends_on(j)) acc -= Y[j] * X[i].derivative(j);
    }
    out[i] = std::move(acc);
  }
  return out;
}

Eigen::VectorXd lie_bracket_at(const PolyField& X, const PolyField& Y,
                               const Eigen::Ref<const Eigen::VectorXd>& p) {
  check_same(X.dim(), Y.dim());
  return Y.jacobian_at(p) * X.evaluate(p) - X.jacobian_at(p) * Y.evaluate(p);
}

PolyScalar derive_scalar(const PolyScalar& f, const PolyField& X) {
  check_same(f.dim(), X.dim());
  PolyScalar acc(f.dim());
  for (int r = 0; r < f.dim(); ++r) {
    if (!X[r].is_zero() && f.depends_on(r)) acc += X[r] * f.derivative(r);
  }
  return acc;
}

Eigen::VectorXd evaluate_field(const PolyField& X, const Eigen::Ref<const Eigen::VectorXd>& p) {
  return X.evaluate(p);
}

double evaluate_scalar(const PolyScalar& f, const Eigen::Ref<const Eigen::VectorXd>& p) {
  return f.evaluate(p);
}

}  // namespace multiflag
