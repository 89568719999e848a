#include "quandle/finite_quandle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quandle/error.hpp"

namespace quandle {

namespace {

std::vector<Element> flatten_checked(const Table& table, const char* what) {
  const std::size_t n = table.size();
  if (n == 0) throw DomainError(std::string("malformed ") + what + ": empty table");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      std::ostringstream os;
      os << "malformed " << what << ": row " << r << " has " << table[r].size() << " entries, expected "
         << n;
      throw DomainError(os.str());
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = table[r][c];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        std::ostringstream os;
        os << "malformed " << what << ": cell (" << r << ", " << c << ") = " << v << " is outside [0, " << n
           << ")";
        throw DomainError(os.str());
      }
      flat.push_back(static_cast<Element>(v));
    }
  }
  return flat;
}

AxiomReport scan_axioms(std::size_t n, const std::vector<Element>& op) {
  AxiomReport report;
  auto record = [&](AxiomViolation v) {
    report.valid = false;
    if (report.violations.size() < AxiomReport::kMaxViolations)
      report.violations.push_back(v);
    else
      report.truncated = true;
  };
  auto at = [&](std::size_t x, std::size_t y) { return op[x * n + y]; };

  for (Element x = 0; x < n; ++x)
    if (at(x, x) != x) record({1, x, x, 0});

  std::vector<char> seen(n);
  for (Element y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element x = 0; x < n; ++x) {
      auto& s = seen[at(x, y)];
      if (s) {
        // witness: the second x hitting an already-used image
        record({2, x, y, 0});
        break;
      }
      s = 1;
    }
  }

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(at(x, z), at(y, z))) record({3, x, y, z});
  return report;
}

}  // namespace

AxiomReport verify_axioms(const Table& table) {
  const auto op = flatten_checked(table, "quandle table");
  return scan_axioms(table.size(), op);
}

FiniteGroup FiniteGroup::from_table(const Table& mul, const std::optional<Table>& inv) {
  FiniteGroup g;
  g.n_ = mul.size();
  g.mul_ = flatten_checked(mul, "group table");
  const std::size_t n = g.n_;
  auto m = [&](std::size_t a, std::size_t b) { return g.mul_[a * n + b]; };

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) {
          std::ostringstream os;
          os << "malformed group: associativity fails at (" << a << ", " << b << ", " << c << ")";
          throw DomainError(os.str());
        }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = m(e, a) == a && m(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw DomainError("malformed group: no identity element");
  g.identity_ = *identity;

  g.inv_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b)
      if (m(a, b) == g.identity_ && m(b, a) == g.identity_) {
        g.inv_[a] = b;
        found = true;
      }
    if (!found) throw DomainError("malformed group: element " + std::to_string(a) + " has no inverse");
  }

  if (inv) {
    if (inv->size() != 1 && inv->size() != n)
      throw DomainError("malformed group: inverse table has wrong length");
    // Accept either a single row or an n×1 column.
    std::vector<std::int64_t> given;
    if (inv->size() == 1)
      given = inv->front();
    else
      for (const auto& row : *inv) {
        if (row.size() != 1) throw DomainError("malformed group: inverse table must be a list");
        given.push_back(row[0]);
      }
    if (given.size() != n) throw DomainError("malformed group: inverse table has wrong length");
    for (Element a = 0; a < n; ++a)
      if (given[a] != static_cast<std::int64_t>(g.inv_[a]))
        throw DomainError("malformed group: supplied inverse of " + std::to_string(a) + " is wrong");
  }
  return g;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  Table t(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<std::int64_t>((a + b) % n);
  return FiniteGroup::from_table(t);
}

FiniteGroup symmetric_group(std::size_t degree) {
  if (degree == 0 || degree > 6) throw DomainError("symmetric group degree must be in [1, 6]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = perms.size();
  Table t(n, std::vector<std::int64_t>(n));
  std::vector<int> prod(degree);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // apply a first, then b
      for (std::size_t i = 0; i < degree; ++i) prod[i] = perms[b][perms[a][i]];
      const auto it = std::lower_bound(perms.begin(), perms.end(), prod);
      t[a][b] = it - perms.begin();
    }
  return FiniteGroup::from_table(t);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw DomainError("dihedral group parameter must be positive");
  // element e*n + k stands for r^k s^e
  const std::size_t order = 2 * n;
  Table t(order, std::vector<std::int64_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t ka = a % n, ea = a / n, kb = b % n, eb = b / n;
      const std::size_t k = ea ? (ka + n - kb) % n : (ka + kb) % n;
      t[a][b] = static_cast<std::int64_t>((ea ^ eb) * n + k);
    }
  return FiniteGroup::from_table(t);
}

FiniteQuandle::FiniteQuandle(std::size_t n, std::vector<Element> op, std::string name)
    : n_(n), op_(std::move(op)), inv_op_(n * n), name_(std::move(name)) {
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y) inv_op_[op_[x * n_ + y] * n_ + y] = x;
}

FiniteQuandle FiniteQuandle::from_table(const Table& table, std::string name) {
  auto op = flatten_checked(table, "quandle table");
  const auto report = scan_axioms(table.size(), op);
  if (!report.valid) {
    const auto& v = report.violations.front();
    std::ostringstream os;
    os << "table is not a quandle: axiom " << v.axiom << " fails at x=" << v.x << ", y=" << v.y;
    if (v.axiom == 3) os << ", z=" << v.z;
    throw DomainError(os.str());
  }
  return FiniteQuandle(table.size(), std::move(op), std::move(name));
}

Table FiniteQuandle::table() const {
  Table t(n_, std::vector<std::int64_t>(n_));
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) t[x][y] = op_[x * n_ + y];
  return t;
}

FiniteQuandle dihedral_quandle(std::size_t n) {
  if (n == 0) throw DomainError("dihedral quandle order must be positive");
  std::vector<Element> op(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) op[x * n + y] = static_cast<Element>((2 * y + n - x) % n);
  return FiniteQuandle(n, std::move(op), "dihedral:" + std::to_string(n));
}

FiniteQuandle conjugation_quandle(const FiniteGroup& group, std::string name) {
  const std::size_t n = group.size();
  std::vector<Element> op(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) op[a * n + b] = group.mul(group.mul(group.inv(b), a), b);
  return FiniteQuandle(n, std::move(op), std::move(name));
}

std::vector<FiniteQuandle> standard_battery() {
  std::vector<FiniteQuandle> battery;
  for (std::size_t n : {3, 4, 5, 7}) battery.push_back(dihedral_quandle(n));
  battery.push_back(conjugation_quandle(symmetric_group(3), "conj:S3"));
  return battery;
}

HomomorphismCheck is_homomorphism(const QuandleMap& map) {
  const auto& src = *map.source;
  const auto& tgt = *map.target;
  if (map.values.size() != src.size())
    throw DomainError("quandle map has " + std::to_string(map.values.size()) + " values, source has " +
                      std::to_string(src.size()) + " elements");
  for (std::size_t i = 0; i < map.values.size(); ++i)
    if (map.values[i] >= tgt.size())
      throw DomainError("quandle map value at " + std::to_string(i) + " is outside the target");

  HomomorphismCheck result;
  const auto& f = map.values;
  for (Element x = 0; x < src.size(); ++x)
    for (Element y = 0; y < src.size(); ++y) {
      const bool op_ok = f[src.op(x, y)] == tgt.op(f[x], f[y]);
      const bool inv_ok = f[src.inv_op(x, y)] == tgt.inv_op(f[x], f[y]);
      if (!op_ok || !inv_ok) {
        result.is_homomorphism = false;
        result.counterexample = {x, y};
        result.inverse_operation = op_ok;
        return result;
      }
    }
  return result;
}

}  // namespace quandle
