#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "orbittie/errors.hpp"

namespace orbittie {

/// A permutation of the index set {0, ..., n-1}, stored as its image array:
/// images[i] = sigma(i). Composition convention throughout the library:
/// (sigma * tau)(i) = sigma(tau(i)), i.e. tau acts first.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    check_bijection();
  }

  static Permutation identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  /// Build from disjoint cycles, e.g. {{0,1},{2,3}} on n points.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    for (const auto& cyc : cycles) {
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        im[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(im));
  }

  int n() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < n(); ++i) {
      if (images_[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  /// Disjoint cycle notation over indices, fixed points omitted; "()" for id.
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < n(); ++i) {
      if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
      out += '(';
      int j = i;
      bool first = true;
      while (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        if (!first) out += ' ';
        out += std::to_string(j);
        first = false;
        j = (*this)(j);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

private:
  void check_bijection() const {
    std::vector<bool> hit(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= n() || hit[static_cast<std::size_t>(v)]) {
        throw PreconditionError("permutation image array is not a bijection");
      }
      hit[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<int> images_;
};

/// (sigma . tau)(i) = sigma(tau(i)).
inline Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.n() != tau.n()) {
    throw DimensionError("compose: permutations act on different index sets");
  }
  std::vector<int> im(static_cast<std::size_t>(sigma.n()));
  for (int i = 0; i < sigma.n(); ++i) {
    im[static_cast<std::size_t>(i)] = sigma(tau(i));
  }
  return Permutation(std::move(im));
}

inline Permutation invert(const Permutation& sigma) {
  std::vector<int> im(static_cast<std::size_t>(sigma.n()));
  for (int i = 0; i < sigma.n(); ++i) {
    im[static_cast<std::size_t>(sigma(i))] = i;
  }
  return Permutation(std::move(im));
}

}  // namespace orbittie
