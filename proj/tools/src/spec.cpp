#include "nabt_cli/spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "nabt/coset_enum.hpp"
#include "nabt/groups.hpp"

namespace nabt::cli {

ParseError::ParseError(std::size_t line, std::size_t column, std::string expectation)
    : InvalidArgument("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                      ": expected " + expectation),
      line_(line),
      column_(column),
      expectation_(std::move(expectation)) {}

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text, std::size_t pos = 0) : text_(text), pos_(pos) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    pos_ += w.size();
    return true;
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long long v = 0;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_ || pos_ == start) {
      pos_ = start;
      fail("an integer");
    }
    return v;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      pos_ = start;
      fail("an identifier");
    }
    return text_.substr(start, pos_ - start);
  }
  std::string rest() {
    skip_ws();
    std::string r = text_.substr(pos_);
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
    pos_ = text_.size();
    return r;
  }
  /// Position of the next token.
  std::size_t mark() {
    skip_ws();
    return pos_;
  }

  [[noreturn]] void fail(const std::string& expectation) const { fail_at(pos_, expectation); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& expectation) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, expectation);
  }

 private:
  const std::string& text_;
  std::size_t pos_;
};

// A product of cycles; `()` is the identity. Points inside a cycle are
// separated by spaces or commas.
std::vector<std::vector<Point>> parse_cycles(Cursor& c) {
  std::vector<std::vector<Point>> cycles;
  if (c.peek() != '(') c.fail("'('");
  while (c.peek() == '(') {
    c.expect('(');
    std::vector<Point> cycle;
    while (!c.accept(')')) {
      if (!cycle.empty()) c.accept(',');
      std::size_t at = c.mark();
      long long p = c.integer();
      if (p < 0) c.fail_at(at, "a non-negative point");
      if (std::find(cycle.begin(), cycle.end(), static_cast<Point>(p)) != cycle.end())
        c.fail_at(at, "distinct points within a cycle");
      cycle.push_back(static_cast<Point>(p));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::size_t degree_of(const std::vector<std::vector<Point>>& cycles) {
  std::size_t d = 1;
  for (const auto& cyc : cycles)
    for (Point p : cyc) d = std::max<std::size_t>(d, p + 1);
  return d;
}

PermSpec parse_perm_body(Cursor& c) {
  PermSpec spec;
  do {
    spec.generators.push_back(parse_cycles(c));
    spec.degree = std::max(spec.degree, degree_of(spec.generators.back()));
  } while (c.accept(','));
  return spec;
}

class WordParser {
 public:
  WordParser(Cursor& c, const std::vector<std::string>& names) : c_(c), names_(names) {}

  Word expr() {
    Word w = term();
    while (c_.accept('*')) w *= term();
    return w;
  }

 private:
  Word term() {
    Word w = atom();
    if (c_.accept('^')) {
      long long e = c_.integer();
      Word base = e < 0 ? w.inverse() : w;
      w = Word();
      for (long long i = 0; i < (e < 0 ? -e : e); ++i) w *= base;
    }
    return w;
  }
  Word atom() {
    if (c_.accept('(')) {
      Word w = expr();
      c_.expect(')');
      return w;
    }
    if (c_.accept('[')) {
      Word a = expr();
      c_.expect(',');
      Word b = expr();
      c_.expect(']');
      Word w = a;
      w *= b;
      w *= a.inverse();
      w *= b.inverse();
      return w;
    }
    std::size_t at = c_.mark();
    std::string name = c_.identifier();
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) c_.fail_at(at, "a declared generator");
    return Word({Letter{static_cast<std::uint32_t>(it - names_.begin()), 1}});
  }

  Cursor& c_;
  const std::vector<std::string>& names_;
};

FpGroup parse_fp_body(Cursor& c) {
  c.expect('<');
  std::vector<std::string> names;
  if (c.peek() != '|') {
    do {
      std::size_t at = c.mark();
      std::string n = c.identifier();
      if (std::find(names.begin(), names.end(), n) != names.end()) c.fail_at(at, "a new generator name");
      names.push_back(std::move(n));
    } while (c.accept(','));
  }
  c.expect('|');
  std::vector<Word> relators;
  WordParser words(c, names);
  if (c.peek() != '>') {
    do relators.push_back(words.expr());
    while (c.accept(','));
  }
  c.expect('>');
  return FpGroup(std::move(names), std::move(relators));
}

Perm to_perm(const PermSpec& s, std::size_t degree, std::size_t index) {
  if (s.degree > degree) throw InvalidArgument("generator " + std::to_string(index) + " moves points outside the group");
  return Perm::from_cycles(degree, s.generators.front());
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  Cursor c(text);
  GroupSpec spec{text, CorpusSpec{}};
  if (c.accept_word("perm")) {
    c.expect(':');
    spec.form = parse_perm_body(c);
  } else if (c.accept_word("fp")) {
    c.expect(':');
    spec.form = parse_fp_body(c);
  } else if (c.accept_word("corpus")) {
    c.expect(':');
    std::size_t at = c.mark();
    std::string name = c.rest();
    if (name.empty()) c.fail_at(at, "a corpus group name");
    spec.form = CorpusSpec{name};
    return spec;
  } else {
    c.fail("'perm:', 'fp:' or 'corpus:'");
  }
  if (!c.done()) c.fail("end of input");
  return spec;
}

ResolvedGroup resolve_group(const GroupSpec& spec, const TensorLimits& limits) {
  if (const auto* p = std::get_if<PermSpec>(&spec.form)) {
    std::vector<Perm> gens;
    for (const auto& g : p->generators) gens.push_back(Perm::from_cycles(p->degree, g));
    return {spec, PermGroup(p->degree, std::move(gens), limits.element_bound), std::nullopt};
  }
  if (const auto* f = std::get_if<FpGroup>(&spec.form)) {
    CosetTable table = todd_coxeter(*f, {}, limits.enumeration);
    FpRealization real = perm_rep(table, *f, limits.element_bound);
    return {spec, real.group, table.cosets_defined()};
  }
  const auto& name = std::get<CorpusSpec>(spec.form).name;
  auto g = groups::by_name(name);
  if (!g) throw ParseError(1, spec.text.find(name) + 1, "a known corpus group name, got '" + name + "'");
  return {spec, *g, std::nullopt};
}

ActionSpec parse_action_spec(const std::string& text) {
  Cursor c(text);
  ActionSpec spec;
  spec.text = text;
  if (c.accept_word("trivial")) {
    spec.mode = ActionSpec::Mode::trivial;
  } else if (c.accept_word("conjugation")) {
    spec.mode = ActionSpec::Mode::conjugation;
  } else if (c.accept_word("explicit")) {
    spec.mode = ActionSpec::Mode::explicit_images;
    c.expect(':');
    do {
      std::vector<PermSpec> row;
      if (c.peek() == '(') {
        do {
          auto cycles = parse_cycles(c);
          row.push_back(PermSpec{degree_of(cycles), {std::move(cycles)}});
        } while (c.accept(','));
      }
      spec.images.push_back(std::move(row));
    } while (c.accept(';'));
  } else {
    c.fail("'trivial', 'conjugation' or 'explicit:'");
  }
  if (!c.done()) c.fail("end of input");
  return spec;
}

IntMatrix parse_matrix(const std::string& text) {
  Cursor c(text);
  std::vector<std::vector<long long>> rows;
  do {
    std::vector<long long> row;
    do row.push_back(c.integer());
    while (c.accept(','));
    if (!rows.empty() && row.size() != rows.front().size()) c.fail("rows of equal length");
    rows.push_back(std::move(row));
  } while (c.accept('/'));
  if (!c.done()) c.fail("end of input");
  std::vector<long long> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return IntMatrix(rows.size(), rows.front().size(), flat);
}

Subgroup embed(const PermGroup& ambient, const PermGroup& sub) {
  if (ambient.degree() != sub.degree())
    throw InvalidArgument("groups act on different degrees (" + std::to_string(ambient.degree()) + " and " +
                          std::to_string(sub.degree()) + ")");
  std::vector<Elem> members;
  for (Elem x = 0; x < sub.order(); ++x) {
    auto e = ambient.find(sub.element(x));
    if (!e) throw InvalidArgument("element " + sub.element(x).to_cycle_string() + " is not in the ambient group");
    members.push_back(*e);
  }
  std::sort(members.begin(), members.end());
  std::vector<Elem> gens;
  for (const auto& p : sub.generators()) gens.push_back(*ambient.find(p));
  return Subgroup(ambient, std::move(members), std::move(gens));
}

namespace {

Action build_action(const PermGroup& actor, const PermGroup& target, const ActionSpec& spec,
                    const std::optional<std::pair<Subgroup, Subgroup>>& subs, bool actor_is_first) {
  switch (spec.mode) {
    case ActionSpec::Mode::trivial:
      return Action::trivial(actor, target);
    case ActionSpec::Mode::conjugation:
      if (!subs) throw InvalidArgument("conjugation needs both groups on a common degree");
      return actor_is_first ? Action::conjugation(subs->first, subs->second)
                            : Action::conjugation(subs->second, subs->first);
    case ActionSpec::Mode::explicit_images: {
      if (spec.images.size() != actor.generators().size())
        throw InvalidArgument("explicit action lists " + std::to_string(spec.images.size()) +
                              " image rows for " + std::to_string(actor.generators().size()) + " actor generators");
      std::vector<std::vector<Elem>> images;
      for (const auto& row : spec.images) {
        if (row.size() != target.generators().size())
          throw InvalidArgument("explicit action row lists " + std::to_string(row.size()) + " images for " +
                                std::to_string(target.generators().size()) + " target generators");
        std::vector<Elem> r;
        for (std::size_t i = 0; i < row.size(); ++i) {
          auto e = target.find(to_perm(row[i], target.degree(), i));
          if (!e) throw InvalidArgument("explicit image is not an element of the target group");
          r.push_back(*e);
        }
        images.push_back(std::move(r));
      }
      return Action::from_generator_images(actor, target, images);
    }
  }
  throw InternalError("unknown action mode");
}

}  // namespace

MutualActions build_mutual(const PermGroup& g, const PermGroup& h, const ActionSpec& gh, const ActionSpec& hg,
                           std::size_t element_bound) {
  std::optional<std::pair<Subgroup, Subgroup>> subs;
  PermGroup gg = g;
  PermGroup hh = h;
  if (g.degree() == h.degree()) {
    std::vector<Perm> gens = g.generators();
    gens.insert(gens.end(), h.generators().begin(), h.generators().end());
    PermGroup k(g.degree(), std::move(gens), element_bound);
    subs.emplace(embed(k, g), embed(k, h));
    gg = subs->first.as_group();
    hh = subs->second.as_group();
  }
  return make_mutual(build_action(gg, hh, gh, subs, true), build_action(hh, gg, hg, subs, false));
}

}  // namespace nabt::cli
