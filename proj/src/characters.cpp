#include "mellinop/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mellinop/errors.hpp"

namespace mellinop {

CharacterTable character_table(const FiniteGroup& g) {
  CharacterTable t;
  t.classes = conjugacy_classes(g);
  const int k = static_cast<int>(t.classes.size());
  const int n = g.order();
  t.class_of.assign(n, -1);
  for (int c = 0; c < k; ++c)
    for (int x : t.classes[c]) t.class_of[x] = c;

  // structure constants: C_i C_j = sum_l a(i,j,l) C_l, counted at the representative of C_l
  std::vector<Eigen::MatrixXd> mult(k, Eigen::MatrixXd::Zero(k, k));
  for (int i = 0; i < k; ++i)
    for (int x : t.classes[i])
      for (int j = 0; j < k; ++j)
        for (int y : t.classes[j]) {
          const int xy = g.multiply(x, y);
          const int l = t.class_of[xy];
          if (xy == t.classes[l].front()) mult[i](j, l) += 1.0;
        }

  // generic combination separates the common eigenvectors
  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) combo += std::sqrt(2.0 + i) / (1.0 + i * 0.37) * mult[i];
  Eigen::EigenSolver<Eigen::MatrixXd> es(combo);
  if (es.info() != Eigen::Success) throw NumericalError("character_table: eigensolver failed");

  const int id_class = t.class_of[g.identity()];
  for (int v = 0; v < k; ++v) {
    CVector w = es.eigenvectors().col(v);
    if (std::abs(w(id_class)) < 1e-12) throw NumericalError("character_table: degenerate central character");
    w /= w(id_class);
    double s = 0.0;
    for (int c = 0; c < k; ++c) s += std::norm(w(c)) / static_cast<double>(t.classes[c].size());
    const double deg_real = std::sqrt(n / s);
    const int deg = static_cast<int>(std::lround(deg_real));
    if (std::abs(deg_real - deg) > 1e-6) throw NumericalError("character_table: non-integral degree");
    ClassFunction chi(k);
    for (int c = 0; c < k; ++c) chi[c] = w(c) * static_cast<double>(deg) / static_cast<double>(t.classes[c].size());
    t.characters.push_back(std::move(chi));
    t.degrees.push_back(deg);
  }

  // trivial first, then by degree, then by character values (descending)
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  auto is_trivial = [&](int i) {
    return std::all_of(t.characters[i].begin(), t.characters[i].end(),
                       [](Complex c) { return std::abs(c - 1.0) < 1e-8; });
  };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (is_trivial(a) != is_trivial(b)) return is_trivial(a);
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    for (int c = 0; c < k; ++c) {
      const Complex x = t.characters[a][c], y = t.characters[b][c];
      if (std::abs(x.real() - y.real()) > 1e-8) return x.real() > y.real();
      if (std::abs(x.imag() - y.imag()) > 1e-8) return x.imag() > y.imag();
    }
    return false;
  });
  CharacterTable sorted = t;
  sorted.characters.clear();
  sorted.degrees.clear();
  for (int i : idx) {
    ClassFunction chi = t.characters[i];
    for (auto& c : chi) {
      // snap roundoff in exact integer/real values
      if (std::abs(c.imag()) < 1e-12) c.imag(0.0);
      if (std::abs(c.real() - std::round(c.real())) < 1e-12) c.real(std::round(c.real()));
    }
    sorted.characters.push_back(std::move(chi));
    sorted.degrees.push_back(t.degrees[i]);
  }

  int sum_sq = 0;
  for (int d : sorted.degrees) sum_sq += d * d;
  if (sum_sq != n) throw NumericalError("character_table: degrees do not satisfy sum d^2 = |G|");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const Complex ip = class_inner_product(sorted, sorted.characters[a], sorted.characters[b]);
      if (std::abs(ip - (a == b ? 1.0 : 0.0)) > 1e-9) {
        std::ostringstream msg;
        msg << "character_table: orthogonality fails for irreps " << a << ", " << b;
        throw NumericalError(msg.str());
      }
    }
  return sorted;
}

Complex class_inner_product(const CharacterTable& t, const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.size() != t.classes.size() || psi.size() != t.classes.size())
    throw InputError("class_inner_product: class function length differs from class count");
  Complex acc = 0.0;
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    acc += static_cast<double>(t.classes[c].size()) * chi[c] * std::conj(psi[c]);
  return acc / static_cast<double>(t.order());
}

}  // namespace mellinop
