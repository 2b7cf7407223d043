#include "qspectra/partition.hpp"

#include <cctype>

#include "qspectra/errors.hpp"

namespace qspectra {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(ErrorCode::InvalidPartition, "negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.size() < 2 || !((s.front() == '(' && s.back() == ')') || (s.front() == '[' && s.back() == ']'))) {
    throw Error(ErrorCode::InvalidPartition, "expected (a,b,...) or [a,b,...], got '" + std::string(text) + "'");
  }
  std::string body = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty() || tok.size() > 6) throw Error(ErrorCode::InvalidPartition, "bad part in '" + std::string(text) + "'");
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw Error(ErrorCode::InvalidPartition, "bad part '" + tok + "'");
        }
      }
      parts.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 0; c < (*this)[0]; ++c) {
    int len = 0;
    while (len < length() && parts_[static_cast<std::size_t>(len)] > c) ++len;
    out.push_back(len);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

bool contains(const Partition& mu, const Partition& nu) {
  for (int i = 0; i < mu.length(); ++i) {
    if (mu[i] > nu[i]) return false;
  }
  return true;
}

bool in_hook(const Partition& lambda, int m, int n) { return lambda[m] <= n; }

Partition lambda_mn(int m, int n) {
  if (m < 0 || n < 0) throw Error(ErrorCode::IndexOutOfRange, "lambda_mn needs m, n >= 0");
  return Partition(std::vector<int>(static_cast<std::size_t>(m + 1), n + 1));
}

std::pair<Partition, Partition> ch_partitions(int m, int n, int k, int r) {
  if (m < 0 || n < 0 || k < 0 || k > m || r < 0 || r > n) {
    throw Error(ErrorCode::IndexOutOfRange, "ch_partitions needs 0 <= k <= m and 0 <= r <= n");
  }
  std::vector<int> upper(static_cast<std::size_t>(k), n + 1);
  upper.insert(upper.end(), static_cast<std::size_t>(m - k), n);
  std::vector<int> lower(static_cast<std::size_t>(m), n);
  lower.push_back(r);
  return {Partition(std::move(upper)), Partition(std::move(lower))};
}

namespace {

struct LrSearch {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> tableau;  // tableau[r][c], 0 = unfilled / inside lambda
  std::vector<int> count;                 // count[v] for v = 1..l(mu)
  std::vector<std::pair<int, int>> cells; // reading order: rows top-down, each right-to-left
  std::uint64_t found = 0;

  void run(std::size_t idx) {
    if (idx == cells.size()) {
      ++found;
      return;
    }
    auto [r, c] = cells[idx];
    int hi = mu.length();
    if (c + 1 < nu[r]) hi = std::min(hi, tableau[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= lambda[r - 1]) lo = tableau[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (count[v] == mu[v - 1]) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;
      ++count[v];
      tableau[r][c] = v;
      run(idx + 1);
      tableau[r][c] = 0;
      --count[v];
    }
  }
};

}  // namespace

std::uint64_t lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.weight() != lambda.weight() + mu.weight()) return 0;
  if (!contains(lambda, nu) || !contains(mu, nu)) return 0;
  LrSearch s{lambda, mu, nu, {}, {}, {}, 0};
  s.tableau.assign(static_cast<std::size_t>(nu.length()), std::vector<int>(static_cast<std::size_t>(nu[0]), 0));
  s.count.assign(static_cast<std::size_t>(mu.length()) + 1, 0);
  for (int r = 0; r < nu.length(); ++r) {
    for (int c = nu[r] - 1; c >= lambda[r]; --c) s.cells.emplace_back(r, c);
  }
  s.run(0);
  return s.found;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "partitions_of negative weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate(k, k, prefix, out);
  return out;
}

}  // namespace qspectra
