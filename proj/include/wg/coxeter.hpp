#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wg/config.hpp"

namespace wg {

using Generator = int;

/// A finite sequence of generator indices.
using Word = std::vector<Generator>;

/// Symmetric table of braid orders m(s,t). The value 0 encodes m = infinity.
class CoxeterMatrix {
public:
  /// Validates the table: unit diagonal, symmetry, off-diagonal entries >= 2
  /// (or 0 for infinity). Throws ValidationError naming the offending entry.
  explicit CoxeterMatrix(std::vector<std::vector<int>> entries);

  /// I2(m); m = 0 gives the infinite dihedral group.
  static CoxeterMatrix dihedral(int m);
  /// A_n: rank n, m(i,i+1) = 3, all other pairs commute.
  static CoxeterMatrix type_a(int n);

  int rank() const { return static_cast<int>(entries_.size()); }
  int at(int i, int j) const { return entries_[i][j]; }
  bool is_infinite(int i, int j) const { return entries_[i][j] == 0; }
  const std::vector<std::vector<int>> &entries() const { return entries_; }

  friend bool operator==(const CoxeterMatrix &, const CoxeterMatrix &) = default;

private:
  std::vector<std::vector<int>> entries_;
};

namespace detail {
struct ElementNode;
struct SystemState;
} // namespace detail

/// An element of a Coxeter group, stored as its lexicographically least
/// reduced word. Elements are interned per system, so equality is identity
/// of the interned node. An Element stays valid while any CoxeterSystem
/// handle to its system is alive.
class Element {
public:
  Element() = default;

  bool valid() const { return node_ != nullptr; }
  const Word &word() const;
  int length() const { return static_cast<int>(word().size()); }
  bool is_identity() const { return word().empty(); }

  friend bool operator==(const Element &a, const Element &b) { return a.node_ == b.node_; }
  /// Shortlex order on canonical words.
  friend std::strong_ordering operator<=>(const Element &a, const Element &b);

  std::size_t hash() const { return std::hash<const void *>{}(node_); }

private:
  explicit Element(const detail::ElementNode *node) : node_(node) {}
  const detail::ElementNode *node_ = nullptr;

  friend class CoxeterSystem;
};

/// Exact arithmetic in a Coxeter system (W, S).
///
/// Canonical forms come from Tits' solution of the word problem: the reduced
/// words of an element form one class under braid moves, so an element is
/// represented by the least word of that class. Products are computed one
/// generator at a time through the exchange condition, and every result is
/// memoized in a write-once cache that is safe to share between threads.
class CoxeterSystem {
public:
  explicit CoxeterSystem(CoxeterMatrix matrix, int length_cap = kDefaultLengthCap);

  const CoxeterMatrix &matrix() const;
  int rank() const;
  int length_cap() const;

  Element identity() const;
  Element generator(Generator s) const;

  Element mult(const Element &u, const Element &v) const;
  /// u * s
  Element mult_generator(const Element &u, Generator s) const;
  Element inverse(const Element &u) const;
  int length(const Element &u) const;

  /// Product of the letters of `word`.
  Element canonicalize(const Word &word) const;
  bool is_reduced(const Word &word) const;

  /// All reduced words of u, sorted lexicographically.
  std::vector<Word> reduced_words(const Element &u) const;

  /// Bruhat order via the subword property over the canonical word of w.
  bool bruhat_leq(const Element &u, const Element &w) const;
  /// The Bruhat interval [1, w], in shortlex order.
  std::vector<Element> lower_interval(const Element &w) const;

  bool is_right_descent(const Element &u, Generator s) const;
  std::vector<Generator> right_descents(const Element &u) const;
  std::vector<Generator> left_descents(const Element &u) const;

  /// Every element of length <= max_length, in shortlex order.
  std::vector<Element> enumerate_elements(int max_length) const;
  /// The whole group; throws CapacityError when W is infinite or its
  /// longest element exceeds the length cap.
  std::vector<Element> all_elements() const;
  bool is_finite() const;

  /// True when the canonical word of u only uses letters from `subset`.
  bool in_parabolic(const Element &u, std::span<const Generator> subset) const;
  /// The Coxeter system of the standard parabolic subgroup W_J; generator k
  /// of the result is subset[k].
  CoxeterSystem parabolic(std::span<const Generator> subset) const;

  bool owns(const Element &u) const;
  /// Same handle (not merely the same matrix).
  bool same_as(const CoxeterSystem &other) const { return state_ == other.state_; }
  /// Re-express an element of a system with an identical matrix in this one.
  Element import(const Element &u) const;

private:
  void check_owned(const Element &u) const;
  void check_generator(Generator s) const;

  std::shared_ptr<detail::SystemState> state_;
};

std::string to_string(const Word &word);
std::string to_string(const Element &u);

/// Parses "e" or "[]" as the identity and "[0,1,0]" or "0,1,0" as words.
Word parse_word(const std::string &text);

} // namespace wg

template <> struct std::hash<wg::Element> {
  std::size_t operator()(const wg::Element &e) const noexcept { return e.hash(); }
};
