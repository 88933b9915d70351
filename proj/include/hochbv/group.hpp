#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hochbv/errors.hpp"

namespace hochbv {

// Interned index (finite groups) or exponent vector (Z^d).
struct GroupElement {
  std::vector<std::int64_t> c;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
 public:
  enum class Kind { Finite, FreeAbelian };

  static GroupPtr finite(std::vector<std::vector<int>> table, std::string name = "") {
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = Kind::Finite;
    g->name_ = std::move(name);
    g->table_ = std::move(table);
    g->validate();
    return g;
  }

  static GroupPtr free_abelian(int rank) {
    if (rank < 1) fail(ErrorCode::InvalidGroup, "free abelian rank must be >= 1");
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = Kind::FreeAbelian;
    g->rank_ = rank;
    g->name_ = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    return g;
  }

  static GroupPtr cyclic(int n) {
    if (n < 1) fail(ErrorCode::InvalidGroup, "cyclic order must be >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return finite(std::move(t), n == 1 ? "1" : "Z/" + std::to_string(n));
  }

  // S_3 with elements listed as permutations of {0,1,2} in lexicographic order.
  static GroupPtr symmetric3() {
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index = [&](const std::vector<int>& p) {
      for (std::size_t i = 0; i < perms.size(); ++i)
        if (perms[i] == p) return static_cast<int>(i);
      return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        std::vector<int> ab(3);
        for (int x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];  // (ab)(x) = a(b(x))
        t[a][b] = index(ab);
      }
    return finite(std::move(t), "S3");
  }

  static GroupPtr from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind")) fail(ErrorCode::InvalidGroup, "group spec needs a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    const std::string name = j.value("name", "");
    if (kind == "finite") {
      if (!j.contains("table") || !j.at("table").is_array()) fail(ErrorCode::InvalidGroup, "finite group needs a table");
      std::vector<std::vector<int>> table;
      for (const auto& row : j.at("table")) {
        if (!row.is_array()) fail(ErrorCode::InvalidGroup, "table rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
          if (!v.is_number_integer()) fail(ErrorCode::InvalidGroup, "table entries must be integers");
          r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
      }
      auto g = finite(std::move(table), name);
      if (j.contains("identity") && j.at("identity").get<int>() != g->identity_)
        fail(ErrorCode::InvalidGroup, "declared identity is not neutral");
      return g;
    }
    if (kind == "free_abelian") {
      if (!j.contains("rank") || !j.at("rank").is_number_integer()) fail(ErrorCode::InvalidGroup, "free_abelian needs an integer rank");
      return free_abelian(j.at("rank").get<int>());
    }
    fail(ErrorCode::InvalidGroup, "unknown group kind: " + kind);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    if (kind_ == Kind::Finite) {
      j["kind"] = "finite";
      j["table"] = table_;
      j["identity"] = identity_;
    } else {
      j["kind"] = "free_abelian";
      j["rank"] = rank_;
    }
    return j;
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  std::size_t coordinate_count() const { return is_finite() ? 1 : static_cast<std::size_t>(rank_); }

  std::size_t order() const {
    require_finite("order");
    return table_.size();
  }

  GroupElement identity() const {
    if (is_finite()) return GroupElement{{identity_}};
    return GroupElement{std::vector<std::int64_t>(static_cast<std::size_t>(rank_), 0)};
  }
  bool is_identity(const GroupElement& g) const { return g == identity(); }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    if (is_finite()) return GroupElement{{table_[static_cast<std::size_t>(a.c[0])][static_cast<std::size_t>(b.c[0])]}};
    GroupElement out = a;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
    return out;
  }
  GroupElement inverse(const GroupElement& a) const {
    if (is_finite()) return GroupElement{{inverse_[static_cast<std::size_t>(a.c[0])]}};
    GroupElement out = a;
    for (auto& x : out.c) x = -x;
    return out;
  }
  GroupElement product(const std::vector<GroupElement>& word) const {
    GroupElement out = identity();
    for (const auto& g : word) out = multiply(out, g);
    return out;
  }
  GroupElement power(const GroupElement& g, std::int64_t n) const {
    GroupElement base = n < 0 ? inverse(g) : g;
    GroupElement out = identity();
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) out = multiply(out, base);
    return out;
  }

  std::vector<GroupElement> elements() const {
    require_finite("enumeration");
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < table_.size(); ++i) out.push_back(GroupElement{{static_cast<std::int64_t>(i)}});
    return out;
  }
  std::vector<GroupElement> non_identity_elements() const {
    std::vector<GroupElement> out;
    for (auto& g : elements())
      if (!is_identity(g)) out.push_back(g);
    return out;
  }
  std::size_t index(const GroupElement& g) const {
    require_finite("indexing");
    return static_cast<std::size_t>(g.c.at(0));
  }
  GroupElement element(std::size_t i) const {
    require_finite("indexing");
    return GroupElement{{static_cast<std::int64_t>(i)}};
  }

  // t_i in Z^d, or the element with index 1 of a finite group (generator of Z/n).
  GroupElement generator(int i = 0) const {
    if (is_finite()) return GroupElement{{order() > 1 ? 1 : 0}};
    GroupElement g = identity();
    g.c.at(static_cast<std::size_t>(i)) = 1;
    return g;
  }
  GroupElement monomial(std::vector<std::int64_t> exponents) const {
    if (is_finite() || exponents.size() != static_cast<std::size_t>(rank_))
      fail(ErrorCode::GroupMismatch, "monomial needs a free abelian group of matching rank");
    return GroupElement{std::move(exponents)};
  }

  std::string format(const GroupElement& g) const {
    if (is_finite()) return is_identity(g) ? "e" : "g" + std::to_string(g.c[0]);
    if (is_identity(g)) return "1";
    std::string out;
    for (std::size_t i = 0; i < g.c.size(); ++i) {
      if (g.c[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += rank_ == 1 ? "t" : "t" + std::to_string(i + 1);
      if (g.c[i] != 1) out += "^" + std::to_string(g.c[i]);
    }
    return out;
  }

  friend bool operator==(const Group& a, const Group& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.table_ == b.table_;
  }

 private:
  Group() = default;

  void require_finite(const char* what) const {
    if (!is_finite()) fail(ErrorCode::InfiniteGroup, std::string(what) + " needs a finite group, got " + name_);
  }

  void validate() {
    const std::size_t n = table_.size();
    if (n == 0) fail(ErrorCode::InvalidGroup, "empty multiplication table");
    for (const auto& row : table_) {
      if (row.size() != n) fail(ErrorCode::InvalidGroup, "multiplication table is not square");
      for (int v : row)
        if (v < 0 || static_cast<std::size_t>(v) >= n) fail(ErrorCode::InvalidGroup, "table entry out of range");
    }
    identity_ = -1;
    for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
      bool neutral = true;
      for (std::size_t x = 0; x < n && neutral; ++x)
        neutral = table_[e][x] == static_cast<int>(x) && table_[x][e] == static_cast<int>(x);
      if (neutral) identity_ = static_cast<int>(e);
    }
    if (identity_ < 0) fail(ErrorCode::InvalidGroup, "no identity element");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[static_cast<std::size_t>(table_[a][b])][c] != table_[a][static_cast<std::size_t>(table_[b][c])])
            fail(ErrorCode::InvalidGroup, "table is not associative");
    inverse_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = static_cast<int>(b);
      if (inverse_[a] < 0) fail(ErrorCode::InvalidGroup, "element without inverse");
    }
    if (name_.empty()) name_ = "G" + std::to_string(n);
  }

  Kind kind_ = Kind::Finite;
  std::string name_;
  int rank_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

}  // namespace hochbv
