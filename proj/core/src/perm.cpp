#include "grpverify/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "grpverify/deadline.hpp"
#include "grpverify/error.hpp"

namespace grpverify {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > 65535) throw std::invalid_argument("degree too large");
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> im = identity(degree).images_;
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty cycle string", i);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] < '0' || text[i] > '9') throw ParseError("expected point number", i);
      const std::size_t start = i;
      std::size_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 65536) throw ParseError("point out of range", start);
        ++i;
      }
      if (v < 1 || v > degree) throw ParseError("point out of range", start);
      if (used[v - 1]) throw ParseError("point repeated", start);
      used[v - 1] = 1;
      cycle.push_back(static_cast<Point>(v - 1));
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      im[cycle[j]] = cycle[(j + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::size_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t Permutation::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<Permutation::Point> im(a.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = a(b(static_cast<Permutation::Point>(i)));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& a) { return a.inverse(); }

PermGroup::PermGroup(std::vector<Permutation> generators, std::size_t degree)
    : degree_(degree) {
  if (degree == 0) throw std::invalid_argument("empty domain");
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(g);
  }
  schreier_sims();
}

std::vector<std::size_t> PermGroup::base() const {
  std::vector<std::size_t> out;
  for (const Level& l : levels_) out.push_back(l.base_point);
  return out;
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.slot.assign(degree_, -1);
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.slot[level.base_point] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    for (const Permutation& s : level.gens) {
      const std::size_t y = s(static_cast<Permutation::Point>(level.orbit[i]));
      if (level.slot[y] >= 0) continue;
      level.slot[y] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(compose(s, level.transversal[i]));
    }
  }
}

Permutation PermGroup::sift(Permutation g, std::size_t start, std::size_t& stopped) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    const std::size_t x = g(static_cast<Permutation::Point>(l.base_point));
    if (l.slot[x] < 0) {
      stopped = i;
      return g;
    }
    g = compose(l.transversal[l.slot[x]].inverse(), g);
  }
  stopped = levels_.size();
  return g;
}

void PermGroup::schreier_sims() {
  // Initial base: smallest moved points until every generator moves one.
  for (const Permutation& g : generators_) {
    bool moves_base = false;
    for (const Level& l : levels_)
      if (g(static_cast<Permutation::Point>(l.base_point)) != l.base_point) moves_base = true;
    if (!moves_base) {
      Level l;
      l.base_point = g.first_moved();
      levels_.push_back(std::move(l));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const Permutation& g : generators_) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g(static_cast<Permutation::Point>(levels_[j].base_point)) != levels_[j].base_point)
          fixes_prefix = false;
      if (fixes_prefix) levels_[i].gens.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  std::size_t tick = 0;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    Level& l = levels_[i];
    bool extended = false;
    for (std::size_t xi = 0; !extended && xi < l.orbit.size(); ++xi) {
      for (std::size_t si = 0; !extended && si < l.gens.size(); ++si) {
        if ((++tick & 0xff) == 0) check_deadline();
        const Permutation& s = l.gens[si];
        const Permutation su = compose(s, l.transversal[xi]);
        const std::size_t y = s(static_cast<Permutation::Point>(l.orbit[xi]));
        const Permutation& uy = l.transversal[l.slot[y]];
        if (su == uy) continue;
        std::size_t stopped = 0;
        Permutation h = sift(compose(uy.inverse(), su), static_cast<std::size_t>(i) + 1, stopped);
        if (h.is_identity()) continue;
        if (stopped == levels_.size()) {
          Level nl;
          nl.base_point = h.first_moved();
          levels_.push_back(std::move(nl));
        }
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j <= stopped; ++j) {
          levels_[j].gens.push_back(h);
          rebuild_orbit(levels_[j]);
        }
        i = static_cast<std::ptrdiff_t>(stopped);
        extended = true;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const Level& lv : levels_) order_ *= lv.orbit.size();
}

bool PermGroup::contains(const Permutation& x) const {
  if (x.degree() != degree_) throw std::invalid_argument("degree mismatch");
  std::size_t stopped = 0;
  const Permutation r = sift(x, 0, stopped);
  return stopped == levels_.size() && r.is_identity();
}

}  // namespace grpverify
