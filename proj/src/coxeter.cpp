#include "wg/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "wg/error.hpp"

namespace wg {

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0)
    throw ValidationError("Coxeter matrix must have positive rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n)
      throw ValidationError("Coxeter matrix row " + std::to_string(i) + " has " +
                            std::to_string(entries_[i].size()) + " entries, expected " +
                            std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i][i] != 1)
      throw ValidationError("Coxeter matrix entry (" + std::to_string(i) + "," + std::to_string(i) +
                            ") must be 1, found " + std::to_string(entries_[i][i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      const int m = entries_[i][j];
      if (m != entries_[j][i])
        throw ValidationError("Coxeter matrix is not symmetric at entry (" + std::to_string(i) + "," +
                              std::to_string(j) + "): " + std::to_string(m) + " vs " +
                              std::to_string(entries_[j][i]));
      if (m != 0 && m < 2)
        throw ValidationError("Coxeter matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") must be >= 2 or 0 (infinity), found " + std::to_string(m));
    }
  }
}

CoxeterMatrix CoxeterMatrix::dihedral(int m) { return CoxeterMatrix({{1, m}, {m, 1}}); }

CoxeterMatrix CoxeterMatrix::type_a(int n) {
  if (n <= 0)
    throw ValidationError("type A requires positive rank");
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    e[i][i] = 1;
    if (i + 1 < n)
      e[i][i + 1] = e[i + 1][i] = 3;
  }
  return CoxeterMatrix(std::move(e));
}

namespace detail {

struct ElementNode {
  const SystemState *system = nullptr;
  Word word;
  std::unique_ptr<std::atomic<const ElementNode *>[]> right;
  std::atomic<const ElementNode *> inverse{nullptr};
  // Written once under the system mutex, then read lock-free.
  std::atomic<const std::vector<Word> *> reduced{nullptr};
  std::atomic<const std::vector<const ElementNode *> *> interval{nullptr};
  std::unique_ptr<std::vector<Word>> reduced_storage;
  std::unique_ptr<std::vector<const ElementNode *>> interval_storage;
};

struct SystemState {
  SystemState(CoxeterMatrix m, int c) : matrix(std::move(m)), cap(c) {}

  CoxeterMatrix matrix;
  int cap;
  mutable std::recursive_mutex mutex;
  std::map<Word, std::unique_ptr<ElementNode>> nodes;
  const ElementNode *identity = nullptr;
};

} // namespace detail

namespace {

using detail::ElementNode;
using detail::SystemState;

/// All words reachable from `start` by braid moves. `start` must be reduced.
std::vector<Word> braid_closure(const CoxeterMatrix &matrix, const Word &start) {
  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    const std::size_t n = w.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const int a = w[i], b = w[i + 1];
      if (a == b)
        continue;
      const int m = matrix.at(a, b);
      if (m == 0 || i + m > n)
        continue;
      bool alternating = true;
      for (int k = 0; k < m && alternating; ++k)
        alternating = w[i + k] == (k % 2 == 0 ? a : b);
      if (!alternating)
        continue;
      Word next = w;
      for (int k = 0; k < m; ++k)
        next[i + k] = (k % 2 == 0 ? b : a);
      if (seen.insert(next).second)
        queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

const ElementNode *intern(SystemState &st, std::vector<Word> closure) {
  // Caller holds the mutex. closure is sorted, so front() is the canonical word.
  const Word &canonical = closure.front();
  auto it = st.nodes.find(canonical);
  if (it != st.nodes.end())
    return it->second.get();
  if (static_cast<int>(canonical.size()) > st.cap)
    throw CapacityError("Coxeter word length " + std::to_string(canonical.size()) +
                        " exceeds the configured cap " + std::to_string(st.cap));
  auto node = std::make_unique<ElementNode>();
  node->system = &st;
  node->word = canonical;
  const int rank = st.matrix.rank();
  node->right = std::make_unique<std::atomic<const ElementNode *>[]>(rank);
  for (int s = 0; s < rank; ++s)
    node->right[s].store(nullptr, std::memory_order_relaxed);
  node->reduced_storage = std::make_unique<std::vector<Word>>(std::move(closure));
  node->reduced.store(node->reduced_storage.get(), std::memory_order_release);
  const ElementNode *raw = node.get();
  st.nodes.emplace(raw->word, std::move(node));
  return raw;
}

const std::vector<Word> &reduced_of(const ElementNode *node) {
  return *node->reduced.load(std::memory_order_acquire);
}

const ElementNode *right_mult(SystemState &st, const ElementNode *u, Generator s) {
  if (auto *cached = u->right[s].load(std::memory_order_acquire))
    return cached;
  std::lock_guard lock(st.mutex);
  if (auto *cached = u->right[s].load(std::memory_order_acquire))
    return cached;
  const ElementNode *result = nullptr;
  const auto &words = reduced_of(u);
  auto ending = std::find_if(words.begin(), words.end(),
                             [s](const Word &w) { return !w.empty() && w.back() == s; });
  if (ending != words.end()) {
    // s is a right descent: drop the last letter.
    Word shorter(ending->begin(), ending->end() - 1);
    auto found = st.nodes.find(shorter);
    result = found != st.nodes.end() ? found->second.get()
                                     : intern(st, braid_closure(st.matrix, shorter));
  } else {
    Word longer = u->word;
    longer.push_back(s);
    if (static_cast<int>(longer.size()) > st.cap)
      throw CapacityError("Coxeter word length " + std::to_string(longer.size()) +
                          " exceeds the configured cap " + std::to_string(st.cap));
    result = intern(st, braid_closure(st.matrix, longer));
  }
  const_cast<ElementNode *>(u)->right[s].store(result, std::memory_order_release);
  const_cast<ElementNode *>(result)->right[s].store(u, std::memory_order_release);
  return result;
}

const ElementNode *fold(SystemState &st, const ElementNode *start, const Word &letters) {
  const ElementNode *cur = start;
  for (Generator s : letters)
    cur = right_mult(st, cur, s);
  return cur;
}

} // namespace

const Word &Element::word() const {
  if (node_ == nullptr)
    throw ValidationError("use of an empty Element");
  return node_->word;
}

std::strong_ordering operator<=>(const Element &a, const Element &b) {
  if (a.node_ == b.node_)
    return std::strong_ordering::equal;
  const Word &x = a.word();
  const Word &y = b.word();
  if (x.size() != y.size())
    return x.size() <=> y.size();
  if (x != y)
    return x <=> y;
  // Equal words from different systems: order by address for a total order.
  return std::compare_three_way{}(static_cast<const void *>(a.node_), static_cast<const void *>(b.node_));
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, int length_cap)
    : state_(std::make_shared<SystemState>(std::move(matrix), length_cap)) {
  if (length_cap < 0)
    throw ValidationError("length cap must be non-negative");
  std::lock_guard lock(state_->mutex);
  state_->identity = intern(*state_, {Word{}});
}

const CoxeterMatrix &CoxeterSystem::matrix() const { return state_->matrix; }
int CoxeterSystem::rank() const { return state_->matrix.rank(); }
int CoxeterSystem::length_cap() const { return state_->cap; }

bool CoxeterSystem::owns(const Element &u) const {
  return u.node_ != nullptr && u.node_->system == state_.get();
}

void CoxeterSystem::check_owned(const Element &u) const {
  if (!owns(u))
    throw ValidationError("element does not belong to this Coxeter system");
}

void CoxeterSystem::check_generator(Generator s) const {
  if (s < 0 || s >= rank())
    throw ValidationError("generator index " + std::to_string(s) + " out of range for rank " +
                          std::to_string(rank()));
}

Element CoxeterSystem::identity() const { return Element(state_->identity); }

Element CoxeterSystem::generator(Generator s) const {
  check_generator(s);
  return Element(right_mult(*state_, state_->identity, s));
}

Element CoxeterSystem::mult_generator(const Element &u, Generator s) const {
  check_owned(u);
  check_generator(s);
  return Element(right_mult(*state_, u.node_, s));
}

Element CoxeterSystem::mult(const Element &u, const Element &v) const {
  check_owned(u);
  check_owned(v);
  return Element(fold(*state_, u.node_, v.node_->word));
}

Element CoxeterSystem::inverse(const Element &u) const {
  check_owned(u);
  if (auto *cached = u.node_->inverse.load(std::memory_order_acquire))
    return Element(cached);
  Word reversed(u.word().rbegin(), u.word().rend());
  const ElementNode *inv = fold(*state_, state_->identity, reversed);
  const_cast<ElementNode *>(u.node_)->inverse.store(inv, std::memory_order_release);
  const_cast<ElementNode *>(inv)->inverse.store(u.node_, std::memory_order_release);
  return Element(inv);
}

int CoxeterSystem::length(const Element &u) const {
  check_owned(u);
  return u.length();
}

Element CoxeterSystem::canonicalize(const Word &word) const {
  for (Generator s : word)
    check_generator(s);
  return Element(fold(*state_, state_->identity, word));
}

bool CoxeterSystem::is_reduced(const Word &word) const {
  return canonicalize(word).length() == static_cast<int>(word.size());
}

std::vector<Word> CoxeterSystem::reduced_words(const Element &u) const {
  check_owned(u);
  return reduced_of(u.node_);
}

std::vector<Element> CoxeterSystem::lower_interval(const Element &w) const {
  check_owned(w);
  auto *interval = w.node_->interval.load(std::memory_order_acquire);
  if (interval == nullptr) {
    // Products of reduced subwords of one reduced word of w, accumulated
    // letter by letter.
    std::vector<const ElementNode *> found{state_->identity};
    std::set<const ElementNode *> seen{state_->identity};
    for (Generator s : w.word()) {
      const std::size_t n = found.size();
      for (std::size_t i = 0; i < n; ++i) {
        const ElementNode *x = found[i];
        const ElementNode *y = right_mult(*state_, x, s);
        if (y->word.size() > x->word.size() && seen.insert(y).second)
          found.push_back(y);
      }
    }
    std::sort(found.begin(), found.end());
    std::lock_guard lock(state_->mutex);
    auto *node = const_cast<ElementNode *>(w.node_);
    if (node->interval_storage == nullptr) {
      node->interval_storage = std::make_unique<std::vector<const ElementNode *>>(std::move(found));
      node->interval.store(node->interval_storage.get(), std::memory_order_release);
    }
    interval = node->interval.load(std::memory_order_acquire);
  }
  std::vector<Element> out;
  out.reserve(interval->size());
  for (auto *n : *interval)
    out.push_back(Element(n));
  std::sort(out.begin(), out.end());
  return out;
}

bool CoxeterSystem::bruhat_leq(const Element &u, const Element &w) const {
  check_owned(u);
  check_owned(w);
  if (u.length() > w.length())
    return false;
  if (u.length() == w.length())
    return u == w;
  if (u.is_identity())
    return true;
  auto *interval = w.node_->interval.load(std::memory_order_acquire);
  if (interval == nullptr) {
    lower_interval(w);
    interval = w.node_->interval.load(std::memory_order_acquire);
  }
  return std::binary_search(interval->begin(), interval->end(), u.node_);
}

bool CoxeterSystem::is_right_descent(const Element &u, Generator s) const {
  return mult_generator(u, s).length() < u.length();
}

std::vector<Generator> CoxeterSystem::right_descents(const Element &u) const {
  std::vector<Generator> out;
  for (Generator s = 0; s < rank(); ++s)
    if (is_right_descent(u, s))
      out.push_back(s);
  return out;
}

std::vector<Generator> CoxeterSystem::left_descents(const Element &u) const {
  return right_descents(inverse(u));
}

std::vector<Element> CoxeterSystem::enumerate_elements(int max_length) const {
  if (max_length < 0)
    return {};
  const std::size_t budget = element_budget();
  std::vector<Element> all{identity()};
  std::vector<Element> layer{identity()};
  for (int len = 0; len < max_length && !layer.empty(); ++len) {
    std::set<Element> next;
    for (const Element &u : layer)
      for (Generator s = 0; s < rank(); ++s) {
        Element v = mult_generator(u, s);
        if (v.length() > u.length())
          next.insert(v);
      }
    layer.assign(next.begin(), next.end());
    all.insert(all.end(), layer.begin(), layer.end());
    if (all.size() > budget)
      throw CapacityError("element enumeration exceeds the budget of " + std::to_string(budget) +
                          " (WG_MAX_ELEMENTS)");
  }
  return all;
}

std::vector<Element> CoxeterSystem::all_elements() const {
  auto all = enumerate_elements(length_cap());
  for (const Element &u : all) {
    if (u.length() < length_cap())
      continue;
    for (Generator s = 0; s < rank(); ++s)
      if (!is_right_descent(u, s))
        throw CapacityError("Coxeter group is infinite or its longest element exceeds the length cap " +
                            std::to_string(length_cap()));
  }
  return all;
}

bool CoxeterSystem::is_finite() const {
  // Finite iff no pair has m = infinity and the group enumeration terminates.
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (matrix().is_infinite(i, j))
        return false;
  try {
    all_elements();
    return true;
  } catch (const CapacityError &) {
    return false;
  }
}

bool CoxeterSystem::in_parabolic(const Element &u, std::span<const Generator> subset) const {
  check_owned(u);
  for (Generator s : u.word())
    if (std::find(subset.begin(), subset.end(), s) == subset.end())
      return false;
  return true;
}

CoxeterSystem CoxeterSystem::parabolic(std::span<const Generator> subset) const {
  if (subset.empty())
    throw ValidationError("parabolic subsystem needs a nonempty generator set");
  std::vector<std::vector<int>> sub(subset.size(), std::vector<int>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    check_generator(subset[i]);
    for (std::size_t j = 0; j < subset.size(); ++j)
      sub[i][j] = matrix().at(subset[i], subset[j]);
  }
  return CoxeterSystem(CoxeterMatrix(std::move(sub)), length_cap());
}

Element CoxeterSystem::import(const Element &u) const {
  if (owns(u))
    return u;
  if (!u.valid() || !(u.node_->system->matrix == matrix()))
    throw ValidationError("cannot import an element from a system with a different Coxeter matrix");
  return canonicalize(u.word());
}

std::string to_string(const Word &word) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < word.size(); ++i)
    out << (i ? "," : "") << word[i];
  out << ']';
  return out.str();
}

std::string to_string(const Element &u) { return to_string(u.word()); }

Word parse_word(const std::string &text) {
  Word out;
  std::string digits;
  auto flush = [&] {
    if (!digits.empty()) {
      out.push_back(std::stoi(digits));
      digits.clear();
    }
  };
  if (text == "e")
    return out;
  for (char c : text) {
    if (c >= '0' && c <= '9')
      digits.push_back(c);
    else if (c == ',' || c == ' ' || c == '[' || c == ']')
      flush();
    else
      throw ValidationError("invalid character in word: '" + text + "'");
  }
  flush();
  return out;
}

} // namespace wg
