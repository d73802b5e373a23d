#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace msh {

// Interned vertex name. A label is either an atom (an opaque token from the
// input) or the barycenter of a non-empty set of labels. Equal labels always
// share the same id, so equality and hashing are O(1); ordering is structural
// and therefore independent of interning history.
class Label {
 public:
  static Label atom(std::string_view token);
  // Barycenter of the simplex spanned by `members`. Duplicates are collapsed.
  static Label bary(std::span<const Label> members);
  static Label bary(std::initializer_list<Label> members) {
    return bary(std::span<const Label>(members.begin(), members.size()));
  }

  bool is_atom() const;
  bool is_bary() const { return !is_atom(); }
  // Atom token. Throws std::logic_error for barycenters.
  const std::string& token() const;
  // Members of a barycenter in canonical order; empty for atoms.
  std::span<const Label> members() const;
  // Atoms have depth 0; a barycenter is one deeper than its deepest member.
  unsigned depth() const;

  std::uint32_t id() const { return id_; }
  std::string to_string() const;

  friend bool operator==(Label a, Label b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Label a, Label b);

 private:
  explicit Label(std::uint32_t id) : id_(id) {}
  friend class LabelRegistry;
  std::uint32_t id_ = 0;
};

// Number of distinct labels interned so far.
std::size_t interned_label_count();

struct LabelHash {
  std::size_t operator()(Label l) const noexcept { return std::hash<std::uint32_t>{}(l.id()); }
};

}  // namespace msh
