// Copyright 2026 The sscd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sscd/qsim.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace sscd::qsim {
namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) throw std::length_error("dense dimension exceeds the configured cap");
    out *= base;
  }
  return out;
}

Complex root_of_unity(std::uint32_t p, std::uint64_t e) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e % p) / static_cast<double>(p);
  return {std::cos(angle), std::sin(angle)};
}

// Applies the p x p matrix u to the base-p digit with the given stride.
void apply_digit(std::vector<Complex>& amps, std::size_t stride, std::uint32_t p,
                 const std::vector<Complex>& u) {
  const std::size_t block = stride * p;
  std::vector<Complex> in(p), out(p);
  for (std::size_t hi = 0; hi < amps.size(); hi += block) {
    for (std::size_t lo = 0; lo < stride; ++lo) {
      const std::size_t base = hi + lo;
      if (p == 2) {
        const Complex a = amps[base], b = amps[base + stride];
        amps[base] = u[0] * a + u[1] * b;
        amps[base + stride] = u[2] * a + u[3] * b;
        continue;
      }
      for (std::uint32_t j = 0; j < p; ++j) in[j] = amps[base + j * stride];
      for (std::uint32_t i = 0; i < p; ++i) {
        Complex acc = 0;
        for (std::uint32_t j = 0; j < p; ++j) acc += u[i * p + j] * in[j];
        out[i] = acc;
      }
      for (std::uint32_t i = 0; i < p; ++i) amps[base + i * stride] = out[i];
    }
  }
}

std::vector<Complex> dft_matrix(std::uint32_t p, bool inverse) {
  std::vector<Complex> u(static_cast<std::size_t>(p) * p);
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  for (std::uint32_t i = 0; i < p; ++i) {
    for (std::uint32_t j = 0; j < p; ++j) {
      const std::uint64_t e = static_cast<std::uint64_t>(i) * j;
      u[i * p + j] = scale * root_of_unity(p, inverse ? (p - e % p) : e);
    }
  }
  return u;
}

void require_zero_register(const DenseState& s, const std::string& reg) {
  const std::size_t stride = s.layout().reg_stride(reg);
  const std::size_t dim = s.layout().reg_dimension(reg);
  const auto& amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i / stride) % dim != 0 && std::abs(amps[i]) > kUnitarityTol) {
      throw std::invalid_argument("register '" + reg + "' is not in |0...0>");
    }
  }
}

// Register value index (qudits packed most significant first) from values.
std::size_t encode(std::span<const Value> values, std::size_t q) {
  std::size_t v = 0;
  for (auto x : values) v = v * q + x;
  return v;
}

Eigen::MatrixXcd to_eigen(const DensityMatrix& m) {
  Eigen::MatrixXcd out(m.dimension(), m.dimension());
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    for (std::size_t c = 0; c < m.dimension(); ++c) out(r, c) = m.at(r, c);
  }
  return out;
}

// Splits every amplitude index into (kept index, traced index).
void split_indices(const QuditLayout& layout, const std::vector<std::string>& keep,
                   std::vector<std::size_t>& kept_idx, std::vector<std::size_t>& traced_idx,
                   std::size_t& kept_dim, std::size_t& traced_dim) {
  if (keep.empty()) throw std::invalid_argument("partial trace needs at least one kept register");
  std::set<std::string> keep_set(keep.begin(), keep.end());
  for (const auto& k : keep) {
    if (!layout.has(k)) throw std::invalid_argument("unknown register '" + k + "'");
  }
  kept_dim = 1;
  traced_dim = 1;
  struct Part {
    std::size_t stride, dim;
    bool kept;
  };
  std::vector<Part> parts;
  for (const auto& r : layout.registers()) {
    const std::size_t d = layout.reg_dimension(r.name);
    const bool kept = keep_set.count(r.name) > 0;
    parts.push_back({layout.reg_stride(r.name), d, kept});
    (kept ? kept_dim : traced_dim) *= d;
  }
  kept_idx.resize(layout.dimension());
  traced_idx.resize(layout.dimension());
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    std::size_t a = 0, t = 0;
    for (const auto& part : parts) {
      const std::size_t v = (i / part.stride) % part.dim;
      if (part.kept) {
        a = a * part.dim + v;
      } else {
        t = t * part.dim + v;
      }
    }
    kept_idx[i] = a;
    traced_idx[i] = t;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

ProductShare::ProductShare(const gf::Field& field, std::vector<Position> positions)
    : field_(&field), positions_(std::move(positions)) {
  for (const auto& p : positions_) {
    if (!field.contains(p.value)) throw std::out_of_range("position value outside field");
  }
}

void ProductShare::push_back(Position p) {
  if (!field_->contains(p.value)) throw std::out_of_range("position value outside field");
  positions_.push_back(p);
}

Value ProductShare::measure(std::size_t i, Basis basis, Rng& rng) {
  Position& pos = positions_.at(i);
  if (pos.basis == basis) return pos.value;
  pos.basis = basis;
  pos.value = static_cast<Value>(uniform_below(rng, field_->order()));
  return pos.value;
}

std::vector<Value> ProductShare::measure_all(Basis basis, Rng& rng) {
  std::vector<Value> out(positions_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = measure(i, basis, rng);
  return out;
}

// ---------------------------------------------------------------------------

QuditLayout::QuditLayout(std::vector<Register> regs, std::size_t cap)
    : regs_(std::move(regs)), cap_(cap) {
  std::set<std::string> names;
  for (const auto& r : regs_) {
    if (r.field == nullptr) throw std::invalid_argument("register without a field");
    if (r.count == 0) throw std::invalid_argument("register '" + r.name + "' has no qudits");
    if (!names.insert(r.name).second) throw std::invalid_argument("duplicate register '" + r.name + "'");
  }
  strides_.assign(regs_.size(), 1);
  dim_ = 1;
  for (std::size_t i = regs_.size(); i-- > 0;) {
    strides_[i] = dim_;
    const std::size_t d = checked_pow(regs_[i].field->order(), regs_[i].count, cap_);
    if (dim_ > cap_ / d) throw std::length_error("dense dimension exceeds the configured cap");
    dim_ *= d;
  }
}

std::size_t QuditLayout::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < regs_.size(); ++i) {
    if (regs_[i].name == name) return i;
  }
  throw std::invalid_argument("unknown register '" + name + "'");
}

bool QuditLayout::has(const std::string& name) const {
  return std::any_of(regs_.begin(), regs_.end(), [&](const Register& r) { return r.name == name; });
}

std::size_t QuditLayout::reg_dimension(const std::string& name) const {
  const Register& r = reg(name);
  std::size_t d = 1;
  for (std::size_t i = 0; i < r.count; ++i) d *= r.field->order();
  return d;
}

std::size_t QuditLayout::reg_stride(const std::string& name) const { return strides_[index_of(name)]; }

QuditLayout QuditLayout::with(Register r) const {
  auto regs = regs_;
  regs.push_back(std::move(r));
  return QuditLayout(std::move(regs), cap_);
}

QuditLayout QuditLayout::subset(const std::vector<std::string>& keep) const {
  std::vector<Register> regs;
  for (const auto& r : regs_) {
    if (std::find(keep.begin(), keep.end(), r.name) != keep.end()) regs.push_back(r);
  }
  return QuditLayout(std::move(regs), cap_);
}

bool operator==(const QuditLayout& a, const QuditLayout& b) {
  if (a.regs_.size() != b.regs_.size()) return false;
  for (std::size_t i = 0; i < a.regs_.size(); ++i) {
    const auto &x = a.regs_[i], &y = b.regs_[i];
    if (x.name != y.name || x.count != y.count || x.field != y.field) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

DenseState::DenseState(QuditLayout layout) : layout_(std::move(layout)), amps_(layout_.dimension(), 0.0) {
  amps_[0] = 1.0;
}

DenseState::DenseState(QuditLayout layout, std::vector<Complex> amps, double tol)
    : layout_(std::move(layout)), amps_(std::move(amps)) {
  if (amps_.size() != layout_.dimension()) throw std::invalid_argument("amplitude count != layout dimension");
  if (std::abs(norm() - 1.0) > tol) throw std::invalid_argument("state is not normalized");
}

DenseState DenseState::basis(QuditLayout layout, const std::vector<std::vector<Value>>& values) {
  if (values.size() != layout.registers().size()) throw std::invalid_argument("one value list per register");
  std::size_t index = 0;
  for (std::size_t r = 0; r < values.size(); ++r) {
    const Register& reg = layout.registers()[r];
    if (values[r].size() != reg.count) throw std::invalid_argument("value count != register size");
    for (auto v : values[r]) {
      if (!reg.field->contains(v)) throw std::out_of_range("basis value outside field");
    }
    index += encode(values[r], reg.field->order()) * layout.reg_stride(reg.name);
  }
  DenseState s(std::move(layout));
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

DenseState DenseState::from_product(const ProductShare& share, const std::string& name, std::size_t cap) {
  QuditLayout layout({{name, share.size(), &share.field()}}, cap);
  const gf::Field& f = share.field();
  const std::size_t q = f.order();
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  std::vector<Complex> amps{1.0};
  std::vector<Complex> factor(q);
  for (const auto& pos : share.positions()) {
    if (pos.basis == Basis::computational) {
      std::fill(factor.begin(), factor.end(), Complex(0.0));
      factor[pos.value] = 1.0;
    } else {
      for (Value y = 0; y < q; ++y) factor[y] = scale * root_of_unity(f.characteristic(), f.zp_dot(pos.value, y));
    }
    std::vector<Complex> next(amps.size() * q);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      for (std::size_t y = 0; y < q; ++y) next[i * q + y] = amps[i] * factor[y];
    }
    amps = std::move(next);
  }
  return DenseState(std::move(layout), std::move(amps));
}

double DenseState::norm() const {
  double acc = 0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

DenseState DenseState::with_register(const std::string& name, std::size_t count, const gf::Field& field) const {
  QuditLayout layout = layout_.with({name, count, &field});
  const std::size_t d = layout.reg_dimension(name);
  std::vector<Complex> amps(layout.dimension(), 0.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) amps[i * d] = amps_[i];
  DenseState out(std::move(layout));
  out.amps_ = std::move(amps);
  return out;
}

std::vector<Value> DenseState::register_values(std::size_t index, const std::string& name) const {
  const Register& r = layout_.reg(name);
  const std::size_t q = r.field->order();
  std::size_t v = (index / layout_.reg_stride(name)) % layout_.reg_dimension(name);
  std::vector<Value> out(r.count);
  for (std::size_t j = r.count; j-- > 0;) {
    out[j] = static_cast<Value>(v % q);
    v /= q;
  }
  return out;
}

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(QuditLayout layout, std::vector<Complex> entries)
    : layout_(std::move(layout)), dim_(layout_.dimension()), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) throw std::invalid_argument("density matrix size mismatch");
}

DensityMatrix DensityMatrix::pure(const DenseState& s) {
  const auto& a = s.amplitudes();
  std::vector<Complex> e(a.size() * a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) e[r * a.size() + c] = a[r] * std::conj(a[c]);
  }
  return DensityMatrix(s.layout(), std::move(e));
}

DensityMatrix DensityMatrix::maximally_mixed(QuditLayout layout) {
  const std::size_t d = layout.dimension();
  std::vector<Complex> e(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) e[i * d + i] = 1.0 / static_cast<double>(d);
  return DensityMatrix(std::move(layout), std::move(e));
}

Complex DensityMatrix::trace() const {
  Complex t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

bool DensityMatrix::is_valid(double tol) const {
  if (std::abs(trace() - Complex(1.0)) > tol) return false;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(*this), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
  std::vector<Register> regs = layout_.registers();
  for (const auto& r : other.layout_.registers()) regs.push_back(r);
  QuditLayout layout(std::move(regs), std::max(layout_.cap(), other.layout_.cap()));
  const std::size_t d = dim_ * other.dim_;
  std::vector<Complex> e(d * d);
  for (std::size_t r1 = 0; r1 < dim_; ++r1)
    for (std::size_t c1 = 0; c1 < dim_; ++c1)
      for (std::size_t r2 = 0; r2 < other.dim_; ++r2)
        for (std::size_t c2 = 0; c2 < other.dim_; ++c2)
          e[(r1 * other.dim_ + r2) * d + c1 * other.dim_ + c2] = at(r1, c1) * other.at(r2, c2);
  return DensityMatrix(std::move(layout), std::move(e));
}

// ---------------------------------------------------------------------------

DenseState qft_per_subfield(const DenseState& s, const std::string& reg, bool inverse) {
  const Register& r = s.layout().reg(reg);
  const std::uint32_t p = r.field->characteristic();
  const std::uint32_t k = r.field->degree();
  const std::size_t q = r.field->order();
  const auto u = dft_matrix(p, inverse);
  DenseState out = s;
  auto& amps = out.mutable_amplitudes();
  std::size_t qudit_stride = s.layout().reg_stride(reg);
  for (std::size_t j = 0; j < r.count; ++j, qudit_stride *= q) {
    std::size_t digit_stride = qudit_stride;
    for (std::uint32_t d = 0; d < k; ++d, digit_stride *= p) apply_digit(amps, digit_stride, p, u);
  }
  return out;
}

std::vector<double> outcome_probabilities(const DenseState& s, const std::string& reg) {
  const std::size_t stride = s.layout().reg_stride(reg);
  const std::size_t dim = s.layout().reg_dimension(reg);
  std::vector<double> probs(dim, 0.0);
  const auto& amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) probs[(i / stride) % dim] += std::norm(amps[i]);
  return probs;
}

Measurement measure_computational(const DenseState& s, const std::string& reg, Rng& rng) {
  const auto probs = outcome_probabilities(s, reg);
  std::discrete_distribution<std::size_t> pick(probs.begin(), probs.end());
  const std::size_t outcome = pick(rng);
  const double p = probs[outcome];
  if (p <= 0.0) throw std::runtime_error("sampled a zero-probability branch");
  const std::size_t stride = s.layout().reg_stride(reg);
  const std::size_t dim = s.layout().reg_dimension(reg);
  std::vector<Complex> amps = s.amplitudes();
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = ((i / stride) % dim == outcome) ? amps[i] * scale : Complex(0.0);
  }
  DenseState collapsed(s.layout(), std::move(amps), 1e-9);
  return {collapsed.register_values(outcome * stride, reg), std::move(collapsed)};
}

Measurement measure_fourier(const DenseState& s, const std::string& reg, Rng& rng) {
  Measurement m = measure_computational(qft_per_subfield(s, reg, true), reg, rng);
  m.collapsed = qft_per_subfield(m.collapsed, reg, false);
  return m;
}

DenseState copy_isometry(const DenseState& s, const std::string& src, const std::string& dst, Basis basis) {
  const Register& rs = s.layout().reg(src);
  const Register& rd = s.layout().reg(dst);
  if (rs.count != rd.count || rs.field != rd.field) {
    throw std::invalid_argument("copy needs registers of equal size over one field");
  }
  if (basis == Basis::fourier) {
    DenseState rotated = qft_per_subfield(s, src, true);
    DenseState copied = copy_isometry(rotated, src, dst, Basis::computational);
    return qft_per_subfield(qft_per_subfield(copied, src, false), dst, false);
  }
  require_zero_register(s, dst);
  const std::size_t s_stride = s.layout().reg_stride(src), d_stride = s.layout().reg_stride(dst);
  const std::size_t dim = s.layout().reg_dimension(src);
  const auto& in = s.amplitudes();
  std::vector<Complex> out(in.size(), 0.0);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == Complex(0.0)) continue;
    const std::size_t x = (i / s_stride) % dim;
    out[i + x * d_stride] = in[i];
  }
  return DenseState(s.layout(), std::move(out), 1e-9);
}

DenseState apply_linear_map(const DenseState& s, const gf::FieldMatrix& r, const std::string& src,
                            const std::string& dst) {
  const Register& rs = s.layout().reg(src);
  const Register& rd = s.layout().reg(dst);
  if (rs.field != &r.field() || rd.field != &r.field()) throw gf::FieldMismatch();
  if (rs.count != r.cols() || rd.count != r.rows()) {
    throw std::invalid_argument("register sizes do not match the matrix shape");
  }
  require_zero_register(s, dst);
  const std::size_t q = r.field().order();
  const std::size_t d_stride = s.layout().reg_stride(dst);
  const auto& in = s.amplitudes();
  std::vector<Complex> out(in.size(), 0.0);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == Complex(0.0)) continue;
    const auto x = s.register_values(i, src);
    const auto y = r.apply(x);
    out[i + encode(y, q) * d_stride] = in[i];
  }
  return DenseState(s.layout(), std::move(out), 1e-9);
}

DensityMatrix partial_trace(const DenseState& s, const std::vector<std::string>& keep) {
  std::vector<std::size_t> kept, traced;
  std::size_t kd = 0, td = 0;
  split_indices(s.layout(), keep, kept, traced, kd, td);
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(kd, td);
  const auto& a = s.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) psi(kept[i], traced[i]) = a[i];
  const Eigen::MatrixXcd rho = psi * psi.adjoint();
  std::vector<Complex> e(kd * kd);
  for (std::size_t r = 0; r < kd; ++r) {
    for (std::size_t c = 0; c < kd; ++c) e[r * kd + c] = rho(r, c);
  }
  return DensityMatrix(s.layout().subset(keep), std::move(e));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
  std::vector<std::size_t> kept, traced;
  std::size_t kd = 0, td = 0;
  split_indices(rho.layout(), keep, kept, traced, kd, td);
  std::vector<Complex> e(kd * kd, 0.0);
  const std::size_t d = rho.dimension();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (traced[r] == traced[c]) e[kept[r] * kd + kept[c]] += rho.at(r, c);
    }
  }
  return DensityMatrix(rho.layout().subset(keep), std::move(e));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (!(a.layout() == b.layout())) throw std::invalid_argument("trace distance needs equal layouts");
  const Eigen::MatrixXcd diff = to_eigen(a) - to_eigen(b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

namespace {

std::vector<bool> predicate_mask(const DenseState& rotated, const std::string& reg,
                                 std::span<const Value> cert, std::size_t ell) {
  const Register& r = rotated.layout().reg(reg);
  if (cert.size() != r.count) throw std::invalid_argument("certificate length != register size");
  const std::size_t stride = rotated.layout().reg_stride(reg);
  const std::size_t dim = rotated.layout().reg_dimension(reg);
  std::vector<bool> accept_value(dim);
  for (std::size_t v = 0; v < dim; ++v) {
    const auto vals = rotated.register_values(v * stride, reg);
    std::size_t dist = 0;
    for (std::size_t j = 0; j < vals.size(); ++j) dist += vals[j] != cert[j];
    accept_value[v] = 2 * dist < ell;
  }
  std::vector<bool> mask(rotated.amplitudes().size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = accept_value[(i / stride) % dim];
  return mask;
}

}  // namespace

double deletion_predicate_probability(const DenseState& s, const std::string& reg,
                                      std::span<const Value> cert, std::size_t ell) {
  const DenseState rotated = qft_per_subfield(s, reg, true);
  const auto mask = predicate_mask(rotated, reg, cert, ell);
  double p = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) p += std::norm(rotated.amplitudes()[i]);
  }
  return p;
}

PredicateResult deletion_predicate(const DenseState& s, const std::string& reg,
                                   std::span<const Value> cert, std::size_t ell, Rng& rng) {
  const DenseState rotated = qft_per_subfield(s, reg, true);
  const auto mask = predicate_mask(rotated, reg, cert, ell);
  double p = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) p += std::norm(rotated.amplitudes()[i]);
  }
  p = std::clamp(p, 0.0, 1.0);
  const bool accept = std::bernoulli_distribution(p)(rng);
  const double branch = accept ? p : 1.0 - p;
  std::vector<Complex> amps = rotated.amplitudes();
  const double scale = 1.0 / std::sqrt(branch);
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = mask[i] == accept ? amps[i] * scale : Complex(0.0);
  DenseState collapsed = qft_per_subfield(DenseState(s.layout(), std::move(amps), 1e-9), reg, false);
  return {accept, std::move(collapsed), p};
}

}  // namespace sscd::qsim
