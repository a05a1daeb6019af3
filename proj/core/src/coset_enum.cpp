#include "nabt/coset_enum.hpp"

#include <algorithm>
#include <set>

#include "nabt/errors.hpp"

namespace nabt {

namespace {

using Column = std::uint32_t;
constexpr std::int32_t kUndefined = -1;

Column column_of(const Letter& l) { return 2 * l.gen + (l.exp < 0 ? 1 : 0); }
Column inverse_column(Column x) { return x ^ 1u; }

std::vector<Column> to_columns(const Word& w) {
  std::vector<Column> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) out.push_back(column_of(l));
  return out;
}

class Enumerator {
 public:
  Enumerator(const FpGroup& p, const EnumLimits& limits)
      : columns_(2 * p.generator_count()), limits_(limits), conjugates_(columns_) {
    std::set<std::vector<Column>> seen;
    for (const auto& r : p.relators()) {
      Word reduced = r.cyclically_reduced();
      if (reduced.empty()) continue;
      auto cols = to_columns(reduced);
      if (seen.insert(cols).second) relators_.push_back(cols);
    }
    // Short relators first: they collapse generators early.
    std::stable_sort(relators_.begin(), relators_.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::set<std::vector<Column>> rotations;
    for (const auto& r : relators_) {
      for (const auto& word : {r, invert(r)}) {
        for (std::size_t k = 0; k < word.size(); ++k) {
          std::vector<Column> rot(word.begin() + static_cast<std::ptrdiff_t>(k), word.end());
          rot.insert(rot.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
          if (rotations.insert(rot).second) conjugates_[rot.front()].push_back(std::move(rot));
        }
      }
    }
  }

  CosetTable run(const std::vector<Word>& subgroup) {
    new_coset();
    bool trivial_subgroup = true;
    for (const auto& w : subgroup) {
      Word reduced = w.free_reduced();
      if (reduced.empty()) continue;
      trivial_subgroup = false;
      scan_and_fill(0, to_columns(reduced));
      process_deductions();
    }
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(parent_.size()); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan_and_fill(c, r);
        process_deductions();
      }
      for (Column x = 0; x < columns_ && live(c); ++x) {
        if (at(c, x) == kUndefined) {
          define(c, x);
          process_deductions();
        }
      }
    }
    return compact(trivial_subgroup);
  }

 private:
  static std::vector<Column> invert(const std::vector<Column>& w) {
    std::vector<Column> out(w.rbegin(), w.rend());
    for (auto& x : out) x = inverse_column(x);
    return out;
  }

  std::int32_t& at(std::int32_t c, Column x) { return table_[static_cast<std::size_t>(c) * columns_ + x]; }
  bool live(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  std::int32_t rep(std::int32_t c) {
    std::int32_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      std::int32_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  std::int32_t new_coset() {
    if (defined_ >= limits_.max_cosets) throw LimitExceeded(defined_);
    auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + columns_, kUndefined);
    ++defined_;
    return c;
  }

  void define(std::int32_t c, Column x) {
    std::int32_t d = new_coset();
    at(c, x) = d;
    at(d, inverse_column(x)) = c;
    push_deduction(c, x);
  }

  void push_deduction(std::int32_t c, Column x) {
    if (limits_.max_deductions && deductions_.size() >= *limits_.max_deductions) return;
    deductions_.emplace_back(c, x);
  }

  // Walks `w` from both ends of the cycle at `c`. With `fill`, gaps longer
  // than one letter are bridged by new definitions.
  void scan(std::int32_t c, const std::vector<Column>& w, bool fill) {
    std::int32_t f = c;
    std::int32_t b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inverse_column(w[j])) != kUndefined) b = at(b, inverse_column(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inverse_column(w[i])) = f;
        push_deduction(f, w[i]);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void scan_and_fill(std::int32_t c, const std::vector<Column>& w) { scan(c, w, true); }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(c)) continue;
      for (const auto& w : conjugates_[x]) {
        scan(c, w, false);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      std::int32_t d = at(c, x);
      if (d == kUndefined || !live(d)) continue;
      for (const auto& w : conjugates_[inverse_column(x)]) {
        scan(d, w, false);
        if (!live(d)) break;
      }
    }
  }

  void merge(std::int32_t k, std::int32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue_.push_back(l);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    if (a == b) return;
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      std::int32_t g = queue_[q];
      for (Column x = 0; x < columns_; ++x) {
        std::int32_t d = at(g, x);
        if (d == kUndefined) continue;
        at(d, inverse_column(x)) = kUndefined;
        std::int32_t mu = rep(g);
        std::int32_t nu = rep(d);
        if (at(mu, x) != kUndefined) {
          merge(nu, at(mu, x));
        } else if (at(nu, inverse_column(x)) != kUndefined) {
          merge(mu, at(nu, inverse_column(x)));
        } else {
          at(mu, x) = nu;
          at(nu, inverse_column(x)) = mu;
          push_deduction(mu, x);
        }
      }
    }
  }

  CosetTable compact(bool trivial_subgroup) {
    std::vector<std::int32_t> renumber(parent_.size(), kUndefined);
    std::uint32_t live_count = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (live(static_cast<std::int32_t>(c))) renumber[c] = static_cast<std::int32_t>(live_count++);
    std::vector<std::uint32_t> entries;
    entries.reserve(static_cast<std::size_t>(live_count) * columns_);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(static_cast<std::int32_t>(c))) continue;
      for (Column x = 0; x < columns_; ++x) {
        std::int32_t d = at(static_cast<std::int32_t>(c), x);
        if (d == kUndefined) throw InternalError("coset enumeration finished with an undefined entry");
        entries.push_back(static_cast<std::uint32_t>(renumber[rep(d)]));
      }
    }
    return CosetTable(columns_ / 2, live_count, std::move(entries), trivial_subgroup, defined_);
  }

  std::size_t columns_;
  EnumLimits limits_;
  std::vector<std::vector<Column>> relators_;
  std::vector<std::vector<std::vector<Column>>> conjugates_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::pair<std::int32_t, Column>> deductions_;
  std::vector<std::int32_t> queue_;
  std::size_t defined_ = 0;
};

}  // namespace

CosetTable::CosetTable(std::size_t generator_count, std::size_t cosets,
                       std::vector<std::uint32_t> entries, bool over_trivial_subgroup,
                       std::size_t cosets_defined)
    : generators_(generator_count),
      cosets_(cosets),
      entries_(std::move(entries)),
      trivial_subgroup_(over_trivial_subgroup),
      defined_(cosets_defined) {
  if (entries_.size() != cosets_ * 2 * generators_) throw InvalidArgument("coset table shape mismatch");
}

std::uint32_t CosetTable::trace(std::size_t coset, const Word& w) const {
  auto c = static_cast<std::uint32_t>(coset);
  for (const auto& l : w.letters()) c = act(c, l.gen, l.exp);
  return c;
}

CosetTable todd_coxeter(const FpGroup& p, const std::vector<Word>& subgroup, const EnumLimits& limits) {
  if (limits.max_cosets < 1) throw InvalidArgument("max_cosets must be at least 1");
  for (const auto& w : subgroup)
    for (const auto& l : w.letters())
      if (l.gen >= p.generator_count()) throw InvalidArgument("subgroup word uses an undeclared generator");
  return Enumerator(p, limits).run(subgroup);
}

bool audit_coset_table(const CosetTable& t, const FpGroup& p) {
  const std::size_t n = t.coset_count();
  for (std::size_t x = 0; x < t.column_count(); ++x) {
    std::vector<bool> hit(n, false);
    for (std::size_t c = 0; c < n; ++c) {
      auto d = t(c, x);
      if (d >= n || hit[d]) return false;
      hit[d] = true;
      if (t(d, x ^ 1u) != c) return false;
    }
  }
  for (const auto& r : p.relators())
    for (std::size_t c = 0; c < n; ++c)
      if (t.trace(c, r) != c) return false;
  return true;
}

FpRealization perm_rep(const CosetTable& t, const FpGroup& p, std::size_t element_bound) {
  if (!t.over_trivial_subgroup() || t.generator_count() != p.generator_count())
    throw IncompleteTable();
  const std::size_t n = t.coset_count();
  std::vector<Perm> gens;
  for (std::uint32_t g = 0; g < t.generator_count(); ++g) {
    std::vector<Point> images(n);
    for (std::size_t c = 0; c < n; ++c) images[c] = t.act(c, g, 1);
    gens.emplace_back(std::move(images));
  }
  PermGroup group(n, std::move(gens), element_bound);
  std::vector<Elem> images;
  for (const auto& g : group.generators()) images.push_back(group.index_of(g));
  if (first_failing_relator(p, group, images) >= 0)
    throw InternalError("coset-table representation violates a relator");
  if (group.order() != n) throw InternalError("regular representation has the wrong order");
  return FpRealization{std::move(group), std::move(images)};
}

FpOrder order_of_fp(const FpGroup& p, const EnumLimits& limits) {
  try {
    auto t = todd_coxeter(p, {}, limits);
    return FpOrder{t.coset_count(), t.cosets_defined()};
  } catch (const LimitExceeded& e) {
    return FpOrder{std::nullopt, e.cosets_defined()};
  }
}

}  // namespace nabt
