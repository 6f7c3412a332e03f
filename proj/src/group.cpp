#include "qcx/group.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcx {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Multiplies payload views in place of full elements; used recursively for products.
void multiply_payload(const GroupSpec& spec, const std::int64_t* a, const std::int64_t* b,
                      std::int64_t* out) {
  switch (spec.family) {
    case GroupFamily::Symmetric:
      // (a·b)(x) = a(b(x)); payload[i] holds the image of i+1.
      for (std::int64_t i = 0; i < spec.n; ++i) out[i] = a[b[i] - 1];
      break;
    case GroupFamily::Cyclic:
      out[0] = mod(a[0] + b[0], spec.n);
      break;
    case GroupFamily::Dihedral: {
      // s^b1 r^j1 · s^b2 r^j2 = s^(b1 xor b2) r^((-1)^b2 j1 + j2)
      std::int64_t b1 = a[0], j1 = a[1], b2 = b[0], j2 = b[1];
      out[0] = b1 ^ b2;
      out[1] = mod((b2 ? -j1 : j1) + j2, spec.n);
      break;
    }
    case GroupFamily::Product: {
      std::size_t off = 0;
      for (const auto& f : spec.factors) {
        multiply_payload(f, a + off, b + off, out + off);
        off += f.payload_size();
      }
      break;
    }
  }
}

void inverse_payload(const GroupSpec& spec, const std::int64_t* a, std::int64_t* out) {
  switch (spec.family) {
    case GroupFamily::Symmetric:
      for (std::int64_t i = 0; i < spec.n; ++i) out[a[i] - 1] = i + 1;
      break;
    case GroupFamily::Cyclic:
      out[0] = mod(-a[0], spec.n);
      break;
    case GroupFamily::Dihedral:
      // (s^b r^j)^{-1} = s^b r^j for b=1, r^{-j} for b=0.
      out[0] = a[0];
      out[1] = a[0] ? a[1] : mod(-a[1], spec.n);
      break;
    case GroupFamily::Product: {
      std::size_t off = 0;
      for (const auto& f : spec.factors) {
        inverse_payload(f, a + off, out + off);
        off += f.payload_size();
      }
      break;
    }
  }
}

void validate_payload(const GroupSpec& spec, const std::int64_t* p, std::size_t len) {
  if (len != spec.payload_size()) throw std::invalid_argument("element payload has wrong length");
  switch (spec.family) {
    case GroupFamily::Symmetric: {
      std::vector<bool> seen(static_cast<std::size_t>(spec.n), false);
      for (std::int64_t i = 0; i < spec.n; ++i) {
        if (p[i] < 1 || p[i] > spec.n) throw std::invalid_argument("permutation image out of range");
        if (seen[static_cast<std::size_t>(p[i]) - 1])
          throw std::invalid_argument("permutation payload is not a bijection");
        seen[static_cast<std::size_t>(p[i]) - 1] = true;
      }
      break;
    }
    case GroupFamily::Cyclic:
      if (p[0] < 0 || p[0] >= spec.n) throw std::invalid_argument("residue out of range");
      break;
    case GroupFamily::Dihedral:
      if (p[0] != 0 && p[0] != 1) throw std::invalid_argument("dihedral reflection flag must be 0 or 1");
      if (p[1] < 0 || p[1] >= spec.n) throw std::invalid_argument("dihedral rotation out of range");
      break;
    case GroupFamily::Product: {
      std::size_t off = 0;
      for (const auto& f : spec.factors) {
        validate_payload(f, p + off, f.payload_size());
        off += f.payload_size();
      }
      break;
    }
  }
}

void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.group != b.group) throw std::invalid_argument("elements belong to different groups");
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::int64_t> parse_int_list(const std::string& body) {
  std::vector<std::int64_t> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      out.push_back(std::stoll(token));
      token.clear();
    }
  };
  for (char c : body) {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      token += c;
    } else if (c == ' ' || c == ',' || c == '\t') {
      flush();
    } else {
      throw std::invalid_argument("unexpected character in element text: " + std::string(1, c));
    }
  }
  flush();
  return out;
}

GroupElement parse_permutation(const GroupSpec& spec, const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty permutation text");
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated one-line form");
    auto images = parse_int_list(s.substr(1, s.size() - 2));
    if (static_cast<std::int64_t>(images.size()) != spec.n)
      throw std::invalid_argument("one-line form must list all " + std::to_string(spec.n) + " images");
    return make_element(spec, images);
  }
  // Cycle notation: one or more "(a b c)" groups, composed left to right.
  GroupElement acc = identity(spec);
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated cycle");
    auto points = parse_int_list(s.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    any = true;
    std::vector<bool> seen(static_cast<std::size_t>(spec.n), false);
    std::vector<std::int64_t> cyc(static_cast<std::size_t>(spec.n));
    for (std::int64_t i = 0; i < spec.n; ++i) cyc[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::int64_t from = points[i];
      std::int64_t to = points[(i + 1) % points.size()];
      if (from < 1 || from > spec.n)
        throw std::invalid_argument("cycle point " + std::to_string(from) + " out of range for S_" +
                                    std::to_string(spec.n));
      if (seen[static_cast<std::size_t>(from) - 1])
        throw std::invalid_argument("repeated point in cycle");
      seen[static_cast<std::size_t>(from) - 1] = true;
      cyc[static_cast<std::size_t>(from) - 1] = to;
    }
    acc = multiply(acc, make_element(spec, cyc));
  }
  if (!any) throw std::invalid_argument("empty permutation text");
  return acc;
}

GroupElement parse_dihedral(const GroupSpec& spec, const std::string& text) {
  std::string s = trim(text);
  if (s == "e" || s == "r^0") return identity(spec);
  std::int64_t reflect = 0;
  if (!s.empty() && s.front() == 's') {
    reflect = 1;
    s = trim(s.substr(1));
    // optional separator between s and the rotation part
    if (!s.empty() && (s.front() == '*' || s.front() == '.')) s = trim(s.substr(1));
    if (s.rfind("\xC2\xB7", 0) == 0) s = trim(s.substr(2));  // UTF-8 middle dot
    if (s.empty()) return make_element(spec, {1, 0});
  }
  if (s.front() != 'r') throw std::invalid_argument("malformed dihedral element: " + text);
  s = s.substr(1);
  std::int64_t k = 1;
  if (!s.empty()) {
    if (s.front() != '^') throw std::invalid_argument("malformed dihedral element: " + text);
    k = std::stoll(s.substr(1));
  }
  return make_element(spec, {reflect, mod(k, spec.n)});
}

std::vector<std::string> split_top_level(const std::string& body, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : body) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

GroupSpec GroupSpec::symmetric(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("symmetric(n) requires n >= 1");
  return GroupSpec{GroupFamily::Symmetric, n, {}};
}

GroupSpec GroupSpec::cyclic(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclic(n) requires n >= 1");
  return GroupSpec{GroupFamily::Cyclic, n, {}};
}

GroupSpec GroupSpec::dihedral(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("dihedral(n) requires n >= 3");
  return GroupSpec{GroupFamily::Dihedral, n, {}};
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  if (factors.empty()) throw std::invalid_argument("product requires at least one factor");
  return GroupSpec{GroupFamily::Product, 0, std::move(factors)};
}

BigUint GroupSpec::order() const {
  switch (family) {
    case GroupFamily::Symmetric:
      return BigUint::factorial(static_cast<std::uint64_t>(n));
    case GroupFamily::Cyclic:
      return BigUint(static_cast<std::uint64_t>(n));
    case GroupFamily::Dihedral:
      return BigUint(static_cast<std::uint64_t>(2 * n));
    case GroupFamily::Product: {
      BigUint r{1};
      for (const auto& f : factors) r = r * f.order();
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

std::size_t GroupSpec::payload_size() const {
  switch (family) {
    case GroupFamily::Symmetric:
      return static_cast<std::size_t>(n);
    case GroupFamily::Cyclic:
      return 1;
    case GroupFamily::Dihedral:
      return 2;
    case GroupFamily::Product: {
      std::size_t s = 0;
      for (const auto& f : factors) s += f.payload_size();
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

std::string GroupSpec::name() const {
  switch (family) {
    case GroupFamily::Symmetric:
      return "S_" + std::to_string(n);
    case GroupFamily::Cyclic:
      return "Z_" + std::to_string(n);
    case GroupFamily::Dihedral:
      return "D_" + std::to_string(n);
    case GroupFamily::Product: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i].name();
      }
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

bool GroupSpec::operator==(const GroupSpec& other) const {
  return family == other.family && n == other.n && factors == other.factors;
}

GroupElement make_element(const GroupSpec& group, std::vector<std::int64_t> payload) {
  validate_payload(group, payload.data(), payload.size());
  return GroupElement{group, std::move(payload)};
}

GroupElement identity(const GroupSpec& group) {
  std::vector<std::int64_t> p(group.payload_size(), 0);
  switch (group.family) {
    case GroupFamily::Symmetric:
      for (std::int64_t i = 0; i < group.n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
      break;
    case GroupFamily::Cyclic:
    case GroupFamily::Dihedral:
      break;
    case GroupFamily::Product: {
      std::size_t off = 0;
      for (const auto& f : group.factors) {
        auto sub = identity(f);
        std::copy(sub.payload.begin(), sub.payload.end(), p.begin() + static_cast<std::ptrdiff_t>(off));
        off += f.payload_size();
      }
      break;
    }
  }
  return GroupElement{group, std::move(p)};
}

GeneratorSet make_generator_set(const GroupSpec& group, std::vector<GroupElement> elements) {
  if (elements.empty()) throw std::invalid_argument("generator set must be nonempty");
  for (const auto& e : elements) {
    if (e.group != group) throw std::invalid_argument("generator does not belong to the group");
  }
  std::vector<int> labels(elements.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i + 1);
  return GeneratorSet{group, std::move(elements), std::move(labels)};
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  GroupElement out{a.group, std::vector<std::int64_t>(a.payload.size())};
  multiply_payload(a.group, a.payload.data(), b.payload.data(), out.payload.data());
  return out;
}

GroupElement inverse(const GroupElement& a) {
  GroupElement out{a.group, std::vector<std::int64_t>(a.payload.size())};
  inverse_payload(a.group, a.payload.data(), out.payload.data());
  return out;
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& group, std::uint64_t cap) {
  if (BigUint(cap) < group.order())
    throw std::runtime_error("group too large for dense path: |" + group.name() + "| = " +
                             group.order().to_string() + " exceeds cap " + std::to_string(cap));
  std::vector<GroupElement> out;
  switch (group.family) {
    case GroupFamily::Symmetric: {
      auto e = identity(group);
      out.push_back(e);
      auto p = e.payload;
      while (std::next_permutation(p.begin(), p.end())) out.push_back(GroupElement{group, p});
      break;
    }
    case GroupFamily::Cyclic:
      for (std::int64_t j = 0; j < group.n; ++j) out.push_back(GroupElement{group, {j}});
      break;
    case GroupFamily::Dihedral:
      for (std::int64_t b = 0; b <= 1; ++b)
        for (std::int64_t j = 0; j < group.n; ++j) out.push_back(GroupElement{group, {b, j}});
      break;
    case GroupFamily::Product: {
      std::vector<std::vector<GroupElement>> lists;
      for (const auto& f : group.factors) lists.push_back(enumerate_elements(f, cap));
      std::vector<std::size_t> idx(lists.size(), 0);
      while (true) {
        std::vector<std::int64_t> p;
        for (std::size_t i = 0; i < lists.size(); ++i) {
          const auto& sub = lists[i][idx[i]].payload;
          p.insert(p.end(), sub.begin(), sub.end());
        }
        out.push_back(GroupElement{group, std::move(p)});
        std::size_t i = lists.size();
        while (i-- > 0) {
          if (++idx[i] < lists[i].size()) break;
          idx[i] = 0;
          if (i == 0) return out;
        }
        if (idx == std::vector<std::size_t>(lists.size(), 0)) break;
      }
      break;
    }
  }
  return out;
}

ClosureResult closure(const GeneratorSet& gens, std::uint64_t cap) {
  std::set<std::vector<std::int64_t>> seen;
  std::queue<GroupElement> todo;
  auto e = identity(gens.group);
  seen.insert(e.payload);
  todo.push(e);
  while (!todo.empty()) {
    GroupElement cur = todo.front();
    todo.pop();
    for (const auto& g : gens.elements) {
      GroupElement next = multiply(cur, g);
      if (seen.insert(next.payload).second) {
        if (seen.size() > cap) throw std::runtime_error("closure exceeds cap " + std::to_string(cap));
        todo.push(std::move(next));
      }
    }
  }
  ClosureResult result;
  result.elements.reserve(seen.size());
  for (const auto& p : seen) result.elements.push_back(GroupElement{gens.group, p});
  result.generates_full_group = (BigUint(seen.size()) == gens.group.order());
  return result;
}

GeneratorSet symmetrize(const GeneratorSet& gens) {
  std::vector<GroupElement> out;
  std::set<std::vector<std::int64_t>> seen;
  auto add = [&](const GroupElement& g) {
    if (seen.insert(g.payload).second) out.push_back(g);
  };
  for (const auto& g : gens.elements) add(g);
  for (const auto& g : gens.elements) add(inverse(g));
  return make_generator_set(gens.group, std::move(out));
}

GroupElement parse_element(const GroupSpec& group, const std::string& text) {
  std::string s = trim(text);
  switch (group.family) {
    case GroupFamily::Symmetric:
      return parse_permutation(group, s);
    case GroupFamily::Cyclic: {
      if (s.empty()) throw std::invalid_argument("empty cyclic element text");
      std::size_t used = 0;
      std::int64_t v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("malformed cyclic element: " + text);
      return make_element(group, {mod(v, group.n)});
    }
    case GroupFamily::Dihedral:
      return parse_dihedral(group, s);
    case GroupFamily::Product: {
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("product element must be parenthesized: " + text);
      auto parts = split_top_level(s.substr(1, s.size() - 2), ';');
      if (parts.size() != group.factors.size())
        throw std::invalid_argument("product element needs " + std::to_string(group.factors.size()) +
                                    " components");
      std::vector<std::int64_t> p;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto sub = parse_element(group.factors[i], parts[i]);
        p.insert(p.end(), sub.payload.begin(), sub.payload.end());
      }
      return GroupElement{group, std::move(p)};
    }
  }
  throw std::logic_error("unreachable");
}

std::string format_element(const GroupElement& g) {
  const auto& spec = g.group;
  switch (spec.family) {
    case GroupFamily::Symmetric: {
      std::string s;
      std::vector<bool> done(g.payload.size(), false);
      for (std::size_t start = 0; start < g.payload.size(); ++start) {
        if (done[start] || g.payload[start] == static_cast<std::int64_t>(start) + 1) continue;
        s += "(";
        std::size_t x = start;
        bool first = true;
        while (!done[x]) {
          done[x] = true;
          if (!first) s += " ";
          first = false;
          s += std::to_string(x + 1);
          x = static_cast<std::size_t>(g.payload[x]) - 1;
        }
        s += ")";
      }
      return s.empty() ? "()" : s;
    }
    case GroupFamily::Cyclic:
      return std::to_string(g.payload[0]);
    case GroupFamily::Dihedral: {
      bool reflect = g.payload[0] != 0;
      std::int64_t j = g.payload[1];
      if (!reflect && j == 0) return "e";
      if (!reflect) return "r^" + std::to_string(j);
      if (j == 0) return "s";
      return "s\xC2\xB7r^" + std::to_string(j);
    }
    case GroupFamily::Product: {
      std::string s = "(";
      std::size_t off = 0;
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        const auto& f = spec.factors[i];
        GroupElement sub{f, std::vector<std::int64_t>(g.payload.begin() + static_cast<std::ptrdiff_t>(off),
                                                      g.payload.begin() +
                                                          static_cast<std::ptrdiff_t>(off + f.payload_size()))};
        if (i) s += "; ";
        s += format_element(sub);
        off += f.payload_size();
      }
      return s + ")";
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace qcx
