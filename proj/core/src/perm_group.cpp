#include "nabt/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "nabt/errors.hpp"

namespace nabt {

namespace {
// Products are tabulated once mul() is first used; beyond this order they
// are computed on demand instead.
constexpr std::size_t kMulTableLimit = 2048;
constexpr Elem kNone = static_cast<Elem>(-1);
}  // namespace

struct PermGroup::Cache {
  std::once_flag enumerated;
  std::vector<Perm> elements;
  std::unordered_map<Perm, Elem, PermHash> index;
  std::vector<Elem> inverse;
  std::vector<Elem> right_gen;  // n x k
  std::vector<Elem> bfs;
  std::vector<Elem> parent;
  std::vector<std::size_t> via;

  std::once_flag tabulated;
  std::vector<Elem> products;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t element_bound)
    : degree_(degree),
      generators_(std::move(generators)),
      element_bound_(element_bound),
      cache_(std::make_shared<Cache>()) {
  if (degree_ == 0) throw InvalidArgument("permutation group of degree 0");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw InvalidArgument("generator degree mismatch");
}

PermGroup PermGroup::trivial(std::size_t degree, std::size_t element_bound) {
  return PermGroup(degree, {}, element_bound);
}

const PermGroup::Cache& PermGroup::table() const {
  std::call_once(cache_->enumerated, [this] {
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> all{Perm::identity(degree_)};
    seen.insert(all.front());
    for (std::size_t head = 0; head < all.size(); ++head) {
      for (const auto& s : generators_) {
        Perm y = all[head] * s;
        if (seen.insert(y).second) {
          if (seen.size() > element_bound_) throw BoundExceeded(element_bound_);
          all.push_back(std::move(y));
        }
      }
    }
    std::sort(all.begin(), all.end());
    const std::size_t n = all.size();
    const std::size_t k = generators_.size();
    Cache& c = *cache_;
    c.index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.index.emplace(all[i], static_cast<Elem>(i));
    c.inverse.resize(n);
    c.right_gen.resize(n * k);
    for (std::size_t i = 0; i < n; ++i) {
      c.inverse[i] = c.index.at(all[i].inverse());
      for (std::size_t s = 0; s < k; ++s) c.right_gen[i * k + s] = c.index.at(all[i] * generators_[s]);
    }
    c.parent.assign(n, kNone);
    c.via.assign(n, 0);
    c.bfs.reserve(n);
    c.bfs.push_back(identity());
    c.parent[identity()] = identity();
    for (std::size_t head = 0; head < c.bfs.size(); ++head) {
      Elem x = c.bfs[head];
      for (std::size_t s = 0; s < k; ++s) {
        Elem y = c.right_gen[x * k + s];
        if (c.parent[y] == kNone) {
          c.parent[y] = x;
          c.via[y] = s;
          c.bfs.push_back(y);
        }
      }
    }
    c.elements = std::move(all);
  });
  return *cache_;
}

const std::vector<Elem>* PermGroup::mul_table() const {
  const Cache& c = table();
  const std::size_t n = c.elements.size();
  if (n > kMulTableLimit) return nullptr;
  std::call_once(cache_->tabulated, [this, &c, n] {
    const std::size_t k = generators_.size();
    std::vector<Elem> products(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      Elem* row = products.data() + a * n;
      row[identity()] = static_cast<Elem>(a);
      for (std::size_t i = 1; i < c.bfs.size(); ++i) {
        Elem b = c.bfs[i];
        row[b] = c.right_gen[row[c.parent[b]] * k + c.via[b]];
      }
    }
    cache_->products = std::move(products);
  });
  return &cache_->products;
}

std::span<const Perm> PermGroup::elements() const { return table().elements; }

std::optional<Elem> PermGroup::find(const Perm& p) const {
  if (p.degree() != degree_) return std::nullopt;
  const Cache& c = table();
  auto it = c.index.find(p);
  if (it == c.index.end()) return std::nullopt;
  return it->second;
}

Elem PermGroup::index_of(const Perm& p) const {
  auto e = find(p);
  if (!e) throw InvalidArgument("permutation " + p.to_cycle_string() + " is not a group member");
  return *e;
}

Elem PermGroup::mul(Elem a, Elem b) const {
  if (const auto* t = mul_table()) return (*t)[a * order() + b];
  const Cache& c = table();
  return c.index.at(c.elements[a] * c.elements[b]);
}

Elem PermGroup::inv(Elem a) const { return table().inverse[a]; }

Elem PermGroup::mul_generator(Elem a, std::size_t gen) const {
  return table().right_gen[a * generators_.size() + gen];
}

std::span<const Elem> PermGroup::cayley_order() const { return table().bfs; }

std::pair<Elem, std::size_t> PermGroup::cayley_parent(Elem e) const {
  const Cache& c = table();
  return {c.parent[e], c.via[e]};
}

std::vector<std::size_t> PermGroup::word_of(Elem e) const {
  const Cache& c = table();
  std::vector<std::size_t> word;
  while (e != identity()) {
    word.push_back(c.via[e]);
    e = c.parent[e];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::size_t PermGroup::element_order(Elem e) const {
  std::size_t k = 1;
  for (Elem x = e; x != identity(); x = mul(x, e)) ++k;
  return k;
}

std::vector<Elem> PermGroup::generator_elements() const {
  std::vector<Elem> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(index_of(g));
  return out;
}

bool PermGroup::is_abelian() const {
  auto gens = generator_elements();
  for (Elem a : gens)
    for (Elem b : gens)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

}  // namespace nabt
