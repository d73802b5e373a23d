#include "morseshell/label.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace msh {

namespace {

struct Node {
  bool atom = true;
  unsigned depth = 0;
  std::string token;
  std::vector<Label> members;
};

struct IdVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

}  // namespace

// Append-only node store. Chunks are never moved once published, so readers
// may dereference any id they legitimately hold without taking the lock.
class LabelRegistry {
 public:
  static LabelRegistry& instance() {
    static LabelRegistry registry;
    return registry;
  }

  const Node& node(std::uint32_t id) const {
    const Node* chunk = chunks_[id >> kChunkBits].load(std::memory_order_acquire);
    return chunk[id & kChunkMask];
  }

  Label intern_atom(std::string_view token) {
    std::lock_guard lock(mutex_);
    auto it = atoms_.find(std::string(token));
    if (it != atoms_.end()) return Label(it->second);
    Node n;
    n.atom = true;
    n.token = std::string(token);
    auto id = push(std::move(n));
    atoms_.emplace(std::string(token), id);
    return Label(id);
  }

  Label intern_bary(std::vector<Label> members) {
    std::vector<std::uint32_t> key;
    key.reserve(members.size());
    for (auto m : members) key.push_back(m.id());
    std::lock_guard lock(mutex_);
    auto it = barys_.find(key);
    if (it != barys_.end()) return Label(it->second);
    Node n;
    n.atom = false;
    unsigned depth = 0;
    for (auto m : members) depth = std::max(depth, node(m.id()).depth);
    n.depth = depth + 1;
    n.members = std::move(members);
    auto id = push(std::move(n));
    barys_.emplace(std::move(key), id);
    return Label(id);
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return size_;
  }

 private:
  static constexpr unsigned kChunkBits = 12;
  static constexpr std::uint32_t kChunkSize = 1u << kChunkBits;
  static constexpr std::uint32_t kChunkMask = kChunkSize - 1;
  static constexpr std::size_t kMaxChunks = 1u << 12;

  LabelRegistry() {
    for (auto& c : chunks_) c.store(nullptr, std::memory_order_relaxed);
  }

  std::uint32_t push(Node n) {
    auto id = static_cast<std::uint32_t>(size_);
    auto chunk_index = id >> kChunkBits;
    if (chunk_index >= kMaxChunks) throw std::length_error("label registry exhausted");
    if ((id & kChunkMask) == 0) {
      owned_.push_back(std::make_unique<Node[]>(kChunkSize));
      chunks_[chunk_index].store(owned_.back().get(), std::memory_order_release);
    }
    owned_[chunk_index][id & kChunkMask] = std::move(n);
    ++size_;
    return id;
  }

  mutable std::mutex mutex_;
  std::size_t size_ = 0;
  std::array<std::atomic<Node*>, kMaxChunks> chunks_;
  std::vector<std::unique_ptr<Node[]>> owned_;
  std::unordered_map<std::string, std::uint32_t> atoms_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, IdVectorHash> barys_;
};

Label Label::atom(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("atom label with empty token");
  return LabelRegistry::instance().intern_atom(token);
}

Label Label::bary(std::span<const Label> members) {
  if (members.empty()) throw std::invalid_argument("barycenter of an empty set");
  std::vector<Label> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return LabelRegistry::instance().intern_bary(std::move(sorted));
}

bool Label::is_atom() const { return LabelRegistry::instance().node(id_).atom; }

const std::string& Label::token() const {
  const auto& n = LabelRegistry::instance().node(id_);
  if (!n.atom) throw std::logic_error("token() on a barycenter label");
  return n.token;
}

std::span<const Label> Label::members() const {
  const auto& n = LabelRegistry::instance().node(id_);
  return {n.members.data(), n.members.size()};
}

unsigned Label::depth() const { return LabelRegistry::instance().node(id_).depth; }

std::string Label::to_string() const {
  const auto& n = LabelRegistry::instance().node(id_);
  if (n.atom) return n.token;
  std::string out = "[";
  for (std::size_t i = 0; i < n.members.size(); ++i) {
    if (i) out += ',';
    out += n.members[i].to_string();
  }
  out += ']';
  return out;
}

std::strong_ordering operator<=>(Label a, Label b) {
  if (a.id_ == b.id_) return std::strong_ordering::equal;
  const auto& reg = LabelRegistry::instance();
  const Node& na = reg.node(a.id_);
  const Node& nb = reg.node(b.id_);
  if (na.atom != nb.atom) return na.atom ? std::strong_ordering::less : std::strong_ordering::greater;
  if (na.atom) return na.token.compare(nb.token) <=> 0;
  return std::lexicographical_compare_three_way(na.members.begin(), na.members.end(),
                                                nb.members.begin(), nb.members.end());
}

std::size_t interned_label_count() { return LabelRegistry::instance().size(); }

}  // namespace msh
