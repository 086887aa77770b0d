#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mellinop/errors.hpp"
#include "mellinop/group.hpp"
#include "mellinop/types.hpp"

namespace mellinop {

/// A matrix-valued function on a finite group: one dim x dim value per element.
template <class Scalar = Complex>
class GroupFunction {
 public:
  using Value = Dense<Scalar>;

  GroupFunction(GroupPtr group, std::vector<Value> values)
      : group_(std::move(group)), values_(std::move(values)) {
    if (!group_) throw InputError("group function: null group");
    if (static_cast<int>(values_.size()) != group_->order())
      throw InputError("group function: need exactly one value per group element");
    const auto d = values_.front().rows();
    if (d < 1) throw InputError("group function: values must be non-empty square matrices");
    for (const auto& v : values_) {
      if (v.rows() != d || v.cols() != d) throw InputError("group function: dimension mismatch among values");
      if (!v.allFinite()) throw InputError("group function: non-finite entry");
    }
  }

  static GroupFunction zero(GroupPtr group, Eigen::Index dim) {
    std::vector<Value> v(group->order(), Value::Zero(dim, dim));
    return {std::move(group), std::move(v)};
  }

  /// Point mass m at element g.
  static GroupFunction delta(GroupPtr group, int g, const Value& m) {
    GroupFunction f = zero(group, m.rows());
    f.values_.at(g) = m;
    return f;
  }

  const GroupPtr& group() const { return group_; }
  Eigen::Index dim() const { return values_.front().rows(); }
  const Value& operator()(int g) const { return values_[g]; }
  const std::vector<Value>& values() const { return values_; }

 private:
  GroupPtr group_;
  std::vector<Value> values_;
};

namespace detail {

inline void require_same_group(const FiniteGroup& a, const FiniteGroup& b, const char* op) {
  if (&a != &b && !a.same_as(b)) throw InputError(std::string(op) + ": functions live on different groups");
}

}  // namespace detail

/// Sum over the group against counting Haar measure.
template <class Scalar>
Dense<Scalar> integrate(const GroupFunction<Scalar>& f) {
  Dense<Scalar> acc = Dense<Scalar>::Zero(f.dim(), f.dim());
  for (const auto& v : f.values()) acc += v;
  return acc;
}

/// (f1 * f2)(g) = sum_h f1(h) f2(h^{-1} g).
template <class Scalar>
GroupFunction<Scalar> convolve(const GroupFunction<Scalar>& f1, const GroupFunction<Scalar>& f2) {
  detail::require_same_group(*f1.group(), *f2.group(), "convolve");
  if (f1.dim() != f2.dim()) throw InputError("convolve: value dimensions differ");
  const FiniteGroup& grp = *f1.group();
  std::vector<Dense<Scalar>> out(grp.order(), Dense<Scalar>::Zero(f1.dim(), f1.dim()));
  for (int g = 0; g < grp.order(); ++g)
    for (int h = 0; h < grp.order(); ++h) out[g].noalias() += f1(h) * f2(grp.multiply(grp.inverse(h), g));
  return {f1.group(), std::move(out)};
}

/// f*(g) = f(g^{-1})^dagger * Delta(g^{-1}).
template <class Scalar>
GroupFunction<Scalar> involution(const GroupFunction<Scalar>& f) {
  const FiniteGroup& grp = *f.group();
  std::vector<Dense<Scalar>> out;
  out.reserve(grp.order());
  for (int g = 0; g < grp.order(); ++g) {
    const int gi = grp.inverse(g);
    out.push_back(f(gi).adjoint() * grp.modular(gi));
  }
  return {f.group(), std::move(out)};
}

/// Sum of spectral norms of the values.
template <class Scalar>
double l1_norm(const GroupFunction<Scalar>& f) {
  double acc = 0.0;
  for (const auto& v : f.values()) acc += spectral_norm(v);
  return acc;
}

/// Matrix of convolution by f on C^{|G|} (x) C^{dim}: block (g, k) = f(g k^{-1}).
template <class Scalar>
Dense<Scalar> left_regular_representation(const GroupFunction<Scalar>& f) {
  const FiniteGroup& grp = *f.group();
  const Eigen::Index d = f.dim();
  Dense<Scalar> out(grp.order() * d, grp.order() * d);
  for (int g = 0; g < grp.order(); ++g)
    for (int k = 0; k < grp.order(); ++k) out.block(g * d, k * d, d, d) = f(grp.multiply(g, grp.inverse(k)));
  return out;
}

/// C*-norm of f: operator norm of its left regular representation.
template <class Scalar>
double regular_rep_cstar_norm(const GroupFunction<Scalar>& f) {
  return spectral_norm(left_regular_representation(f));
}

/// Direct sum of group-function spaces over a set of localization labels.
template <class Scalar = Complex>
class LocalizationFamily {
 public:
  void add(std::string label, GroupFunction<Scalar> f) {
    if (find(label) >= 0) throw InputError("localization family: duplicate label '" + label + "'");
    labels_.push_back(std::move(label));
    components_.push_back(std::move(f));
  }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<GroupFunction<Scalar>>& components() const { return components_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  int find(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
  }

 private:
  std::vector<std::string> labels_;
  std::vector<GroupFunction<Scalar>> components_;
};

/// sup over components of l1_norm.
template <class Scalar>
double family_norm(const LocalizationFamily<Scalar>& fam) {
  if (fam.empty()) throw InputError("family_norm: empty family");
  double best = 0.0;
  for (const auto& f : fam.components()) best = std::max(best, l1_norm(f));
  return best;
}

template <class Scalar>
const GroupFunction<Scalar>& project_localization(const LocalizationFamily<Scalar>& fam,
                                                  const std::string& label) {
  const int i = fam.find(label);
  if (i < 0) throw InputError("project_localization: unknown label '" + label + "'");
  return fam.components()[i];
}

}  // namespace mellinop
