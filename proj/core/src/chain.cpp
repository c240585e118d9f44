#include "pathhom/chain.hpp"

#include <algorithm>
#include <charconv>

#include "pathhom/errors.hpp"

namespace pathhom {

bool is_regular(std::span<const Vertex> p) {
  for (std::size_t k = 1; k < p.size(); ++k)
    if (p[k - 1] == p[k]) return false;
  return true;
}

Chain::Chain(int grade) : grade_(grade) {
  if (grade < -2) throw InputError("chain grade below -2");
}

Chain Chain::of(Path p, const Rational& c) {
  Chain ch(grade_of(p));
  ch.add(p, c);
  return ch;
}

void Chain::add(const Path& p, const Rational& c) {
  if (grade_of(p) != grade_) throw InputError("path grade does not match chain grade");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Chain::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Chain::l1_norm() const {
  Rational s = 0;
  for (const auto& [p, c] : terms_) s += abs(c);
  return s;
}

Rational Chain::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Chain& Chain::operator+=(const Chain& o) {
  if (o.grade_ != grade_ && !o.is_zero()) {
    if (!is_zero()) throw InputError("adding chains of different grades");
    grade_ = o.grade_;
  }
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  if (o.grade_ != grade_ && !o.is_zero()) {
    if (!is_zero()) throw InputError("subtracting chains of different grades");
    grade_ = o.grade_;
  }
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

Chain& Chain::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Chain& a, const Chain& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.grade_ == b.grade_ && a.terms_ == b.terms_;
}

Chain boundary(const Chain& c, BoundaryMode mode) {
  const bool regular = mode.regularity == Regularity::regular;
  if (c.grade() < 0) return Chain(-2);
  Chain out(c.grade() - 1);
  if (c.grade() == 0) {
    if (mode.augmentation == Augmentation::augmented)
      for (const auto& [p, coef] : c.terms()) out.add({}, coef);
    return out;
  }
  Path face;
  for (const auto& [p, coef] : c.terms()) {
    if (regular && !is_regular(p)) throw InputError("non-regular path in regular boundary");
    for (std::size_t q = 0; q < p.size(); ++q) {
      face.assign(p.begin(), p.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(q));
      if (regular && !is_regular(face)) continue;
      out.add(face, q % 2 == 0 ? coef : Rational(-coef));
    }
  }
  return out;
}

Chain join_paths(const Chain& u, const Chain& v, Regularity r) {
  Chain out(u.grade() + v.grade() + 1);
  Path xy;
  for (const auto& [x, a] : u.terms()) {
    for (const auto& [y, b] : v.terms()) {
      xy.assign(x.begin(), x.end());
      xy.insert(xy.end(), y.begin(), y.end());
      if (r == Regularity::regular && !is_regular(xy)) continue;
      out.add(xy, a * b);
    }
  }
  return out;
}

std::string format_chain(const Chain& c, std::span<const std::string> labels) {
  if (c.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, coef] : c.terms()) {
    if (!first) s += " + ";
    first = false;
    s += to_string(coef);
    s += " * ";
    if (p.empty()) s += "()";
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) s += '.';
      if (labels.empty())
        s += std::to_string(p[k]);
      else
        s += labels[static_cast<std::size_t>(p[k])];
    }
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Vertex parse_vertex(std::string_view tok, std::span<const std::string> labels) {
  if (labels.empty()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
      throw InputError("bad vertex id '" + std::string(tok) + "'");
    return v;
  }
  auto it = std::find(labels.begin(), labels.end(), tok);
  if (it == labels.end()) throw InputError("unknown vertex '" + std::string(tok) + "'");
  return static_cast<Vertex>(it - labels.begin());
}

}  // namespace

Chain parse_chain(std::string_view text, std::span<const std::string> labels, int zero_grade) {
  text = trim(text);
  if (text == "0") return Chain(zero_grade);
  std::vector<std::pair<Path, Rational>> terms;
  while (!text.empty()) {
    auto plus = text.find(" + ");
    std::string_view term = trim(text.substr(0, plus));
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 3);
    auto star = term.find('*');
    if (star == std::string_view::npos) throw InputError("chain term without '*': '" + std::string(term) + "'");
    Rational coef = parse_rational(trim(term.substr(0, star)));
    std::string_view body = trim(term.substr(star + 1));
    Path p;
    if (body != "()") {
      while (true) {
        auto dot = body.find('.');
        p.push_back(parse_vertex(body.substr(0, dot), labels));
        if (dot == std::string_view::npos) break;
        body = body.substr(dot + 1);
      }
    }
    terms.emplace_back(std::move(p), std::move(coef));
  }
  if (terms.empty()) throw InputError("empty chain text");
  Chain c(grade_of(terms.front().first));
  for (const auto& [p, coef] : terms) c.add(p, coef);
  return c;
}

}  // namespace pathhom
