#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace egd {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Malformed input: bad ids, parity preconditions, unparsable text.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string &what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// A request exceeds a configured size cap (e.g. exhaustive certification).
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal contract check failed (invalid decomposition, broken bound).
class AssertionFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
   Membership set over ids 0..universe-1 with O(1) insert/erase/contains.
   The tag keeps vertex sets and edge sets from being mixed up.
 */
template <class Tag> class IdSet {
public:
  IdSet() = default;
  explicit IdSet(std::size_t universe) : bits_(universe, 0) {}

  static IdSet full(std::size_t universe) {
    IdSet s(universe);
    std::fill(s.bits_.begin(), s.bits_.end(), std::uint8_t{1});
    s.count_ = universe;
    return s;
  }

  template <class Range> static IdSet of(std::size_t universe, const Range &ids) {
    IdSet s(universe);
    for (auto id : ids)
      s.insert(static_cast<std::uint32_t>(id));
    return s;
  }

  static IdSet of(std::size_t universe, std::initializer_list<std::uint32_t> ids) {
    IdSet s(universe);
    for (auto id : ids)
      s.insert(id);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(std::uint32_t id) const {
    return id < bits_.size() && bits_[id] != 0;
  }

  /// Returns true if the id was newly added.
  bool insert(std::uint32_t id) {
    check(id);
    if (bits_[id])
      return false;
    bits_[id] = 1;
    ++count_;
    return true;
  }

  bool erase(std::uint32_t id) {
    check(id);
    if (!bits_[id])
      return false;
    bits_[id] = 0;
    --count_;
    return true;
  }

  void clear() {
    std::fill(bits_.begin(), bits_.end(), std::uint8_t{0});
    count_ = 0;
  }

  /// Ascending list of members. O(universe).
  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count_);
    for (std::uint32_t i = 0; i < bits_.size(); ++i)
      if (bits_[i])
        out.push_back(i);
    return out;
  }

  bool is_subset_of(const IdSet &o) const {
    for (std::uint32_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !o.contains(i))
        return false;
    return true;
  }

  IdSet &operator|=(const IdSet &o) {
    for (std::uint32_t i = 0; i < o.bits_.size(); ++i)
      if (o.bits_[i])
        insert(i);
    return *this;
  }

  IdSet &operator-=(const IdSet &o) {
    for (std::uint32_t i = 0; i < o.bits_.size() && i < bits_.size(); ++i)
      if (o.bits_[i])
        erase(i);
    return *this;
  }

  friend bool operator==(const IdSet &a, const IdSet &b) {
    return a.count_ == b.count_ && a.bits_ == b.bits_;
  }

private:
  void check(std::uint32_t id) const {
    if (id >= bits_.size())
      throw InputError("id " + std::to_string(id) + " out of range (universe " +
                       std::to_string(bits_.size()) + ")");
  }

  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

struct VertexTag;
struct EdgeTag;
using VertexSet = IdSet<VertexTag>;
using EdgeSubset = IdSet<EdgeTag>;

} // namespace egd
