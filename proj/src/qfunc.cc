// Copyright 2026 The pdel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdel/qfunc.h"

#include <sstream>
#include <utility>

namespace pdel {

QuadraticFunction::QuadraticFunction(std::size_t dim)
    : dim_(dim), gram_(dim, dim), linear_(dim), constant_(0) {}

QuadraticFunction::QuadraticFunction(Mat gram, RatVec linear, Rat constant)
    : dim_(linear.size()),
      gram_(std::move(gram)),
      linear_(std::move(linear)),
      constant_(std::move(constant)) {
  if (gram_.rows() != dim_ || gram_.cols() != dim_) {
    throw std::invalid_argument("gram / linear size mismatch");
  }
  if (!IsSymmetric(gram_)) throw std::invalid_argument("gram not symmetric");
}

QuadraticFunction QuadraticFunction::FromCoefficients(
    std::size_t dim, std::span<const Rat> coeffs) {
  if (coeffs.size() != MonomialCount(dim)) {
    throw std::invalid_argument("coefficient count mismatch");
  }
  QuadraticFunction f(dim);
  std::size_t k = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j, ++k) {
      if (i == j) {
        f.gram_(i, i) = coeffs[k];
      } else {
        f.gram_(i, j) = coeffs[k] / 2;
        f.gram_(j, i) = f.gram_(i, j);
      }
    }
  }
  for (std::size_t i = 0; i < dim; ++i, ++k) f.linear_[i] = coeffs[k];
  f.constant_ = coeffs[k];
  return f;
}

QuadraticFunction QuadraticFunction::FromCoefficients(
    std::size_t dim, std::span<const Int> coeffs) {
  const RatVec q = ToRat(coeffs);
  return FromCoefficients(dim, q);
}

Rat QuadraticFunction::Evaluate(std::span<const std::int64_t> x) const {
  return Evaluate(ToRat(x));
}

Rat QuadraticFunction::Evaluate(std::span<const Rat> x) const {
  if (x.size() != dim_) throw std::invalid_argument("dimension mismatch");
  Rat acc = Bilinear(gram_, x, x) + constant_;
  for (std::size_t i = 0; i < dim_; ++i) acc += linear_[i] * x[i];
  return acc;
}

RatVec QuadraticFunction::Coefficients() const {
  RatVec c;
  c.reserve(MonomialCount(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      c.push_back(i == j ? gram_(i, i) : 2 * gram_(i, j));
  c.insert(c.end(), linear_.begin(), linear_.end());
  c.push_back(constant_);
  return c;
}

QuadraticFunction QuadraticFunction::Normalized() const {
  if (IsZero()) return *this;
  const RatVec coeffs = Coefficients();
  const IntVec prim = Primitive(coeffs);
  QuadraticFunction out = FromCoefficients(dim_, prim);
  int sign = 0;
  bool has_gram = false;
  for (std::size_t i = 0; i < dim_ * dim_; ++i) {
    if (out.gram_(i / dim_, i % dim_) != 0) has_gram = true;
  }
  if (has_gram) {
    const auto kind = ClassifyDefiniteness(out.gram_).kind;
    if (kind != DefinitenessKind::kIndefinite) {
      sign = 1;
    } else {
      Mat neg = out.gram_;
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) neg(i, j) = -neg(i, j);
      if (ClassifyDefiniteness(neg).kind != DefinitenessKind::kIndefinite) {
        sign = -1;
      }
    }
  }
  if (sign == 0) {
    for (const Int& z : prim) {
      if (z != 0) {
        sign = z > 0 ? 1 : -1;
        break;
      }
    }
  }
  return sign > 0 ? out : Rat(-1) * out;
}

RatVec QuadraticFunction::Center() const {
  Mat rhs(dim_, 1);
  for (std::size_t i = 0; i < dim_; ++i) rhs(i, 0) = -linear_[i] / 2;
  const auto sol = Solve(gram_, rhs);
  if (!sol || Rank(gram_) < dim_) {
    throw std::domain_error("quadratic part is singular; no unique center");
  }
  return sol->column(0);
}

QuadraticFunction QuadraticFunction::Substitute(const IntMat& l,
                                                std::span<const Int> t) const {
  // F(Lx + t) = x^T (L^T G L) x + (2 t^T G L + b L) x + F(t).
  const Mat lr = ToRat(l);
  const Mat g2 = lr.Transposed() * gram_ * lr;
  const RatVec tr = ToRat(t);
  const std::size_t m = l.cols();
  RatVec lin(m);
  const RatVec gt = gram_ * std::span<const Rat>(tr);
  for (std::size_t j = 0; j < m; ++j) {
    Rat acc = 0;
    for (std::size_t i = 0; i < dim_; ++i)
      acc += (2 * gt[i] + linear_[i]) * lr(i, j);
    lin[j] = acc;
  }
  return QuadraticFunction(g2, std::move(lin), Evaluate(tr));
}

bool QuadraticFunction::IsZero() const {
  if (constant_ != 0) return false;
  for (const Rat& q : linear_)
    if (q != 0) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (gram_(i, j) != 0) return false;
  return true;
}

QuadraticFunction operator+(const QuadraticFunction& a,
                            const QuadraticFunction& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  QuadraticFunction out = a;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t j = 0; j < a.dim_; ++j) out.gram_(i, j) += b.gram_(i, j);
    out.linear_[i] += b.linear_[i];
  }
  out.constant_ += b.constant_;
  return out;
}

QuadraticFunction operator-(const QuadraticFunction& a,
                            const QuadraticFunction& b) {
  return a + Rat(-1) * b;
}

QuadraticFunction operator*(const Rat& s, const QuadraticFunction& f) {
  QuadraticFunction out = f;
  for (std::size_t i = 0; i < f.dim_; ++i) {
    for (std::size_t j = 0; j < f.dim_; ++j) out.gram_(i, j) *= s;
    out.linear_[i] *= s;
  }
  out.constant_ *= s;
  return out;
}

std::string QuadraticFunction::DebugString() const {
  std::ostringstream os;
  os << ToJson(*this).dump();
  return os.str();
}

LiftedPoint DMap(std::span<const std::int64_t> u) {
  return LiftedPoint{VMap(u), ToRat(u)};
}

Mat VMap(std::span<const std::int64_t> u) {
  const std::size_t n = u.size();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Rat(Int(static_cast<long>(u[i] * u[j])));
  return m;
}

LiftedPoint IdentityPoint(std::size_t n) {
  return LiftedPoint{Mat::Identity(n), RatVec(n)};
}

Rat Pairing(const QuadraticFunction& f, const LiftedPoint& p) {
  const std::size_t n = f.dim();
  if (p.vec.size() != n) throw std::invalid_argument("dimension mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) acc += f.gram()(i, j) * p.sym(j, i);
    acc += f.linear()[i] * p.vec[i];
  }
  return acc;
}

IntVec Monomials(std::span<const std::int64_t> x) {
  const std::size_t n = x.size();
  IntVec m;
  m.reserve(MonomialCount(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      m.emplace_back(Int(static_cast<long>(x[i])) * static_cast<long>(x[j]));
  for (std::size_t i = 0; i < n; ++i) m.emplace_back(static_cast<long>(x[i]));
  m.emplace_back(1);
  return m;
}

IntMat EvaluationMatrix(std::span<const Point> points, std::size_t dim) {
  IntMat m(0, MonomialCount(dim));
  for (const Point& p : points) {
    if (p.size() != dim) throw std::invalid_argument("point dimension");
    const IntVec row = Monomials(p);
    m.AppendRow(row);
  }
  return m;
}

std::size_t Qrank(std::span<const Point> points, std::size_t dim) {
  if (points.empty()) return MonomialCount(dim);
  return MonomialCount(dim) - Rank(EvaluationMatrix(points, dim));
}

std::vector<QuadraticFunction> VanishingSpace(std::span<const Point> points,
                                              std::size_t dim) {
  std::vector<QuadraticFunction> out;
  if (points.empty()) {
    const std::size_t m = MonomialCount(dim);
    for (std::size_t k = 0; k < m; ++k) {
      IntVec e(m);
      e[k] = 1;
      out.push_back(QuadraticFunction::FromCoefficients(dim, e));
    }
    return out;
  }
  for (const IntVec& v : Nullspace(EvaluationMatrix(points, dim))) {
    out.push_back(QuadraticFunction::FromCoefficients(dim, v));
  }
  return out;
}

std::string RatToString(const Rat& q) { return q.get_str(); }

Rat RatFromString(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto check_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("malformed rational");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw std::invalid_argument("malformed rational: " + t);
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(Int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  const Int d(den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rat q(Int(num), d);
  q.canonicalize();
  return q;
}

nlohmann::ordered_json ToJson(const QuadraticFunction& f) {
  nlohmann::ordered_json j;
  j["dim"] = f.dim();
  auto gram = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < f.dim(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < f.dim(); ++c)
      row.push_back(RatToString(f.gram()(r, c)));
    gram.push_back(std::move(row));
  }
  j["gram"] = std::move(gram);
  auto lin = nlohmann::ordered_json::array();
  for (const Rat& q : f.linear()) lin.push_back(RatToString(q));
  j["lin"] = std::move(lin);
  j["const"] = RatToString(f.constant());
  return j;
}

QuadraticFunction QuadraticFunctionFromJson(const nlohmann::ordered_json& j) {
  try {
    const std::size_t n = j.at("dim").get<std::size_t>();
    const auto& gram = j.at("gram");
    const auto& lin = j.at("lin");
    if (gram.size() != n || lin.size() != n) {
      throw std::invalid_argument("quadratic function: size mismatch");
    }
    Mat g(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (gram[r].size() != n) throw std::invalid_argument("gram row size");
      for (std::size_t c = 0; c < n; ++c)
        g(r, c) = RatFromString(gram[r][c].get<std::string>());
    }
    RatVec b(n);
    for (std::size_t i = 0; i < n; ++i)
      b[i] = RatFromString(lin[i].get<std::string>());
    return QuadraticFunction(std::move(g), std::move(b),
                             RatFromString(j.at("const").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("quadratic function: ") + e.what());
  }
}

}  // namespace pdel
