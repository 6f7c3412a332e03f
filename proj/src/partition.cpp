#include "qcx/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace qcx {

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Partition Partition::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("unterminated partition: " + text);
    body = body.substr(1, body.size() - 2);
  }
  Partition p;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      p.parts.push_back(std::stoi(token));
      token.clear();
    }
  };
  for (char c : body) {
    if (c >= '0' && c <= '9') token += c;
    else if (c == ',' || c == ' ') flush();
    else throw std::invalid_argument("malformed partition: " + text);
  }
  flush();
  validate_partition(p);
  return p;
}

void validate_partition(const Partition& p) {
  if (p.parts.empty()) throw std::invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && p.parts[i] > p.parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    prefix.push_back(first);
    gen_partitions(remaining - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  gen_partitions(n, n, prefix, out);
  return out;
}

BigUint irrep_dimension_big(const Partition& p) {
  validate_partition(p);
  const int n = p.n();
  std::vector<int> padded(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < p.parts.size(); ++i) padded[i] = p.parts[i];

  BigUint num = BigUint::factorial(static_cast<std::uint64_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // (λ_i − i) strictly decreases, so every factor is a positive integer.
      int factor = padded[static_cast<std::size_t>(i)] - padded[static_cast<std::size_t>(j)] - (i + 1) + (j + 1);
      num.mul_small(static_cast<std::uint32_t>(factor));
    }
  }
  for (int i = 0; i < n; ++i) {
    int m = padded[static_cast<std::size_t>(i)] + n - (i + 1);
    for (int d = 2; d <= m; ++d) {
      if (num.div_small(static_cast<std::uint32_t>(d)) != 0)
        throw std::logic_error("irrep dimension formula did not divide exactly");
    }
  }
  return num;
}

std::uint64_t irrep_dimension(const Partition& p) { return irrep_dimension_big(p).to_u64(); }

}  // namespace qcx
