#include "hopf/zoo.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "hopf/doubles.hpp"

namespace hopf {

namespace {

std::pair<std::vector<std::vector<int>>, std::vector<std::string>> cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return {t, labels};
}

std::pair<std::vector<std::vector<int>>, std::vector<std::string>> symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  // (a b)(i) = a(b(i)): apply b first.
  auto compose = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return std::array<int, 3>{a[b[0]], a[b[1]], a[b[2]]};
  };
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = index(compose(perms[a], perms[b]));
  auto cycle_label = [](const std::array<int, 3>& q) -> std::string {
    std::string s;
    std::array<bool, 3> seen{};
    for (int i = 0; i < 3; ++i) {
      if (seen[i] || q[i] == i) continue;
      std::string c = "(";
      for (int j = i; !seen[j]; j = q[j]) {
        seen[j] = true;
        c += std::to_string(j + 1);
      }
      s += c + ")";
    }
    return s.empty() ? "e" : s;
  };
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(cycle_label(q));
  return {t, labels};
}

std::int64_t power_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  __int128 r = 1, x = ((b % p) + p) % p;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

std::pair<std::vector<std::vector<int>>, std::vector<std::string>> named_group(std::string_view g) {
  if (g == "C2") return cyclic(2);
  if (g == "C3") return cyclic(3);
  if (g == "C4") return cyclic(4);
  if (g == "S3") return symmetric3();
  throw std::invalid_argument("unknown group '" + std::string(g) + "' (known: C2 C3 C4 S3)");
}

HopfData group_algebra(std::string name, const std::vector<std::vector<int>>& table,
                       std::vector<std::string> labels, Field f) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("empty Cayley table");
  std::vector<int> inverse(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw std::invalid_argument("Cayley table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      int ab = table[a][b];
      if (ab < 0 || static_cast<std::size_t>(ab) >= n)
        throw std::invalid_argument("Cayley table entry out of range");
      if (ab == 0) inverse[a] = static_cast<int>(b);
    }
    if (table[0][a] != static_cast<int>(a) || table[a][0] != static_cast<int>(a))
      throw std::invalid_argument("element 0 of the Cayley table is not the identity");
    if (inverse[a] < 0) throw std::invalid_argument("Cayley table element without inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("Cayley table is not associative");
  if (labels.empty())
    for (std::size_t a = 0; a < n; ++a) labels.push_back("g" + std::to_string(a));
  const auto un = static_cast<std::uint32_t>(n);
  return make_hopf(
      std::move(name), f, std::move(labels),
      [&](std::uint32_t a, std::uint32_t b) {
        return SparseVec::unit(static_cast<std::uint32_t>(table[a][b]), f);
      },
      SparseVec::unit(0, f), [&](std::uint32_t a) { return SparseVec::unit(a * un + a, f); },
      [&](std::uint32_t) { return Scalar::one(f); },
      [&](std::uint32_t a) { return SparseVec::unit(static_cast<std::uint32_t>(inverse[a]), f); });
}

HopfData group_algebra(std::string_view group, Field f) {
  auto [table, labels] = named_group(group);
  return group_algebra("k" + std::string(group), table, labels, f);
}

HopfData dual_group_algebra(std::string_view group, Field f) {
  return dual(group_algebra(group, f)).renamed("k^" + std::string(group));
}

HopfData taft(int n, Field f, const Scalar& q) {
  if (n < 2) throw std::invalid_argument("taft: n must be at least 2");
  if (q.field() != f) throw FieldMismatch("taft: root of unity over another field");
  // q must have multiplicative order exactly n.
  Scalar qk = Scalar::one(f);
  for (int k = 1; k <= n; ++k) {
    qk *= q;
    if (qk.is_one() && k < n)
      throw std::invalid_argument("taft: q is not a primitive " + std::to_string(n) + "-th root");
  }
  if (!qk.is_one())
    throw std::invalid_argument("taft: q is not an " + std::to_string(n) + "-th root of unity");
  const auto un = static_cast<std::uint32_t>(n);
  const std::uint32_t dim = un * un;
  std::vector<Scalar> qpow(n, Scalar::one(f));
  for (int k = 1; k < n; ++k) qpow[k] = qpow[k - 1] * q;
  auto idx = [&](std::uint32_t a, std::uint32_t b) { return (a % un) + un * b; };

  auto mult = [&](std::uint32_t i, std::uint32_t j) {
    std::uint32_t a = i % un, b = i / un, c = j % un, d = j / un;
    if (b + d >= un) return SparseVec{};
    SparseVec v;
    v.entries.emplace_back(idx(a + c, b + d), qpow[(b * c) % un]);
    return v;
  };
  auto mul = [&](const SparseVec& u, const SparseVec& v) {
    std::vector<SparseVec::Entry> t;
    for (const auto& [i, x] : u.entries)
      for (const auto& [j, y] : v.entries)
        for (const auto& [k, z] : mult(i, j).entries) t.emplace_back(k, x * y * z);
    return SparseVec::from_terms(std::move(t));
  };
  // Products in H (x) H on flattened indices.
  auto mul2 = [&](const SparseVec& u, const SparseVec& v) {
    std::vector<SparseVec::Entry> t;
    for (const auto& [ij, x] : u.entries)
      for (const auto& [kl, y] : v.entries)
        for (const auto& [p, z] : mult(ij / dim, kl / dim).entries)
          for (const auto& [r, w] : mult(ij % dim, kl % dim).entries)
            t.emplace_back(p * dim + r, x * y * z * w);
    return SparseVec::from_terms(std::move(t));
  };
  const SparseVec one = SparseVec::unit(0, f);
  const SparseVec ginv = SparseVec::unit(idx(un - 1, 0), f);
  const SparseVec x = SparseVec::unit(idx(0, 1), f);
  const SparseVec dg = SparseVec::unit(idx(1, 0) * dim + idx(1, 0), f);
  SparseVec dx = SparseVec::unit(idx(0, 1) * dim + idx(0, 0), f) +
                 SparseVec::unit(idx(1, 0) * dim + idx(0, 1), f);
  const SparseVec sx = mul(ginv, x).scaled(-Scalar::one(f));

  std::vector<SparseVec> comult(dim), antipode(dim);
  for (std::uint32_t b = 0; b < un; ++b)
    for (std::uint32_t a = 0; a < un; ++a) {
      SparseVec d = SparseVec::unit(0, f);
      SparseVec s = one;
      for (std::uint32_t k = 0; k < a; ++k) d = mul2(d, dg);
      for (std::uint32_t k = 0; k < b; ++k) d = mul2(d, dx);
      for (std::uint32_t k = 0; k < b; ++k) s = mul(s, sx);
      for (std::uint32_t k = 0; k < a; ++k) s = mul(s, ginv);
      comult[idx(a, b)] = d;
      antipode[idx(a, b)] = s;
    }
  std::vector<std::string> labels;
  for (std::uint32_t b = 0; b < un; ++b)
    for (std::uint32_t a = 0; a < un; ++a) {
      std::string s;
      if (a > 0) s += a == 1 ? "g" : "g^" + std::to_string(a);
      if (b > 0) s += b == 1 ? "x" : "x^" + std::to_string(b);
      labels.push_back(s.empty() ? "1" : s);
    }
  return make_hopf(
      "taft(" + std::to_string(n) + ")", f, std::move(labels), mult, one,
      [&](std::uint32_t i) { return comult[i]; },
      [&](std::uint32_t i) { return Scalar(f, i / un == 0 ? 1 : 0); },
      [&](std::uint32_t i) { return antipode[i]; });
}

HopfData taft(int n, std::int64_t p, std::int64_t root) {
  if (n < 2 || (p - 1) % n != 0)
    throw std::invalid_argument("taft: n = " + std::to_string(n) + " does not divide p - 1 = " +
                                std::to_string(p - 1));
  Field f = Field::prime(static_cast<std::uint64_t>(p));
  for (int k = 1; k < n; ++k)
    if (power_mod(root, k, p) == 1)
      throw std::invalid_argument("taft: " + std::to_string(root) + " is not a primitive " +
                                  std::to_string(n) + "-th root of unity mod " + std::to_string(p));
  auto h = taft(n, f, Scalar(f, root));
  return h.renamed("taft(" + std::to_string(n) + "," + std::to_string(p) + ")");
}

HopfData sweedler_h4(Field f) {
  if (f.modulus() == 2) throw std::invalid_argument("sweedler_h4 needs characteristic other than 2");
  return taft(2, f, Scalar(f, -1)).renamed("sweedler_h4");
}

namespace {

HopfData builtin_base(std::string_view spec, Field f) {
  auto strip = [&](std::string_view prefix, std::string_view& rest) {
    if (spec.substr(0, prefix.size()) != prefix) return false;
    rest = spec.substr(prefix.size());
    return true;
  };
  std::string_view rest;
  if (strip("D(", rest) && rest.ends_with(")"))
    return drinfeld_double(builtin_base(rest.substr(0, rest.size() - 1), f));
  if (strip("Dtilde(", rest) && rest.ends_with(")"))
    return tilde_double(builtin_base(rest.substr(0, rest.size() - 1), f));
  if (strip("L(", rest) && rest.ends_with(")"))
    return L_of(builtin_base(rest.substr(0, rest.size() - 1), f));
  if (strip("k^", rest)) return dual_group_algebra(rest, f);
  if (strip("dual_group_algebra:", rest)) return dual_group_algebra(rest, f);
  if (strip("group_algebra:", rest)) return group_algebra(rest, f);
  if (spec == "sweedler_h4" || spec == "H4") return sweedler_h4(f);
  if (strip("taft:", rest)) {
    std::vector<std::int64_t> v;
    std::string s(rest);
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t c = s.find(':', pos);
      v.push_back(std::stoll(s.substr(pos, c - pos)));
      if (c == std::string::npos) break;
      pos = c + 1;
    }
    if (v.size() != 3) throw std::invalid_argument("taft spec is taft:<n>:<p>:<root>");
    return taft(static_cast<int>(v[0]), v[1], v[2]);
  }
  if (strip("k", rest)) return group_algebra(rest, f);
  throw std::invalid_argument("unknown builtin '" + std::string(spec) + "'");
}

}  // namespace

HopfData builtin(std::string_view spec, std::optional<Field> field) {
  if (spec.substr(0, 5) == "taft:") {
    HopfData h = builtin_base(spec, Field::rationals());
    if (field && *field != h.field())
      throw std::invalid_argument("taft algebras are defined over their own prime field");
    return h;
  }
  return builtin_base(spec, field.value_or(Field::rationals()));
}

std::vector<std::string> builtin_names() {
  return {"kC2", "kC3", "kC4", "kS3", "k^C2", "k^C3", "k^C4", "k^S3", "sweedler_h4", "taft:3:7:2"};
}

}  // namespace hopf
