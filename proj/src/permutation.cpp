#include "prym/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace prym {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_one_based(std::initializer_list<int> images) {
  std::vector<int> v;
  v.reserve(images.size());
  for (int x : images)
    v.push_back(x - 1);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<int>(i);
  Permutation r;
  r.images_ = std::move(inv);
  return r;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  for (std::size_t len : cycle_type())
    ord = std::lcm(ord, len);
  return ord;
}

std::size_t Permutation::cycle_count() const { return cycle_type().size(); }

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i))
      continue;
    std::vector<int> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<int>(j));
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto &cycle : cycles()) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k)
        out += ' ';
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i)
    r.images_[i] = q.images_[p.images_[i]];
  return r;
}

Permutation &Permutation::operator*=(const Permutation &q) {
  *this = *this * q;
  return *this;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string &why) {
    throw std::invalid_argument("cycle notation \"" + std::string(text) + "\": " + why);
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size())
        fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("unexpected character '" + std::string(1, text[pos]) + "'");
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1000000)
          fail("symbol out of range");
        ++pos;
      }
      if (pos < text.size() && text[pos] != ')' &&
          !std::isspace(static_cast<unsigned char>(text[pos])))
        fail("symbols must be separated by spaces");
      if (value < 1 || static_cast<std::size_t>(value) > degree)
        fail("symbol " + std::to_string(value) + " out of range 1.." + std::to_string(degree));
      int sym = static_cast<int>(value - 1);
      if (used[sym])
        fail("repeated symbol " + std::to_string(value));
      used[sym] = true;
      cycle.push_back(sym);
    }
    // "()" is the identity; a lone symbol is a fixed point.
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation &x, const Permutation &g) {
  return g.inverse() * x * g;
}

Permutation product(const std::vector<Permutation> &perms, std::size_t degree) {
  Permutation acc(degree);
  for (const auto &p : perms)
    acc *= p;
  return acc;
}

} // namespace prym
