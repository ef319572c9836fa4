#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grpverify/numeric.hpp"

namespace grpverify {

// Bijection on {0..d-1}. Points are 0-based internally; cycle strings use
// 1-based points.
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;
  // Throws std::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Parses "(1 2 3)(4 5)" or "()"; throws ParseError on malformed text.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;
  // Smallest moved point, or degree() for the identity.
  std::size_t first_moved() const;
  std::string to_cycles() const;
  std::size_t hash() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

// (a ∘ b)(x) = a(b(x)): the right factor is applied first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// Generator-defined permutation group with a deterministic stabilizer chain.
class PermGroup {
 public:
  // Throws std::invalid_argument for degree 0 or mismatched generator degrees.
  PermGroup(std::vector<Permutation> generators, std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const BigInt& order() const { return order_; }
  std::vector<std::size_t> base() const;
  bool contains(const Permutation& x) const;

 private:
  struct Level {
    std::size_t base_point = 0;
    std::vector<Permutation> gens;
    std::vector<int> slot;                 // point -> index into orbit, or -1
    std::vector<std::size_t> orbit;
    std::vector<Permutation> transversal;  // transversal[i](base_point) == orbit[i]
  };

  void rebuild_orbit(Level& level) const;
  // Sifts g from level `start`; returns the residue and the level where it stopped.
  Permutation sift(Permutation g, std::size_t start, std::size_t& stopped) const;
  void schreier_sims();

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

}  // namespace grpverify
