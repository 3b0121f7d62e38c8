#ifndef PRYM_PERMUTATION_HPP
#define PRYM_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace prym {

/// A bijection of {0, ..., degree-1}.
///
/// Points are 0-based in the library; the textual cycle notation is 1-based.
/// Products compose left to right: `(p * q)(x) == q(p(x))`, so a path that
/// goes around branch points in order multiplies its local monodromies in
/// the same order.
class Permutation {
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// From 0-based images. Throws std::invalid_argument if not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// From 1-based images, as in `{2, 1, 4, 3, 6, 5}`.
  static Permutation from_one_based(std::initializer_list<int> images);

  std::size_t degree() const { return images_.size(); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;
  std::size_t cycle_count() const; // fixed points count as 1-cycles
  std::vector<std::size_t> cycle_type() const; // descending lengths, fixed points included
  std::vector<std::vector<int>> cycles() const; // nontrivial cycles only

  /// Canonical cycle notation: each cycle starts at its smallest symbol,
  /// cycles ordered by that symbol, fixed points omitted, identity "()".
  std::string to_string() const;

  friend Permutation operator*(const Permutation &p, const Permutation &q);
  Permutation &operator*=(const Permutation &q);

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

/// Parses disjoint-cycle notation, e.g. "(1 2)(3 4)(5 6)". Empty text and
/// "()" give the identity. Throws std::invalid_argument on out-of-range or
/// repeated symbols and on malformed parentheses.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// `g^-1 * x * g`.
Permutation conjugate(const Permutation &x, const Permutation &g);

/// Left-to-right product of the sequence; the identity of `degree` if empty.
Permutation product(const std::vector<Permutation> &perms, std::size_t degree);

} // namespace prym

template <> struct std::hash<prym::Permutation> {
  std::size_t operator()(const prym::Permutation &p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p.images()) {
      h ^= static_cast<std::size_t>(x) + 1;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

#endif // PRYM_PERMUTATION_HPP
