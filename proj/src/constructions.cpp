#include "ordalg/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <utility>

#include "ordalg/error.hpp"

namespace ordalg {

  namespace {
    using Covers = std::vector<std::pair<std::string, std::string>>;

    BinOp table(Poset const& p, std::vector<std::vector<std::string>> const& rows) {
      BinOp op(p.size());
      for (Elem a = 0; a < rows.size(); ++a) {
        for (Elem b = 0; b < rows[a].size(); ++b) {
          op.set(a, b, p.index(rows[a][b]));
        }
      }
      return op;
    }

    std::map<std::string, Elem> bound_constants(Poset const& p) {
      std::map<std::string, Elem> out;
      Bounds const                bd = bounds(p);
      if (bd.top) {
        out["one"] = *bd.top;
      }
      if (bd.bottom) {
        out["zero"] = *bd.bottom;
      }
      return out;
    }

    // "NAME(k)" -> k
    std::optional<std::size_t> parameter(std::string_view name, std::string_view head) {
      if (name.size() <= head.size() + 2 || name.substr(0, head.size()) != head
          || name[head.size()] != '(' || name.back() != ')') {
        return std::nullopt;
      }
      std::string_view const digits = name.substr(head.size() + 1, name.size() - head.size() - 2);
      std::size_t            k      = 0;
      auto const [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        return std::nullopt;
      }
      return k;
    }
  }  // namespace

  BinOp const* Fixture::op(std::string_view op_name) const {
    for (auto const& op : ops) {
      if (op.name == op_name) {
        return &op.table;
      }
    }
    return nullptr;
  }

  Poset chain(std::size_t k) {
    if (k == 0) {
      throw Error(ErrorKind::EmptyCarrier, "a chain needs at least one element");
    }
    std::vector<std::string> names{"0"};
    for (std::size_t i = 1; i + 1 < k; ++i) {
      names.push_back("c" + std::to_string(i));
    }
    if (k > 1) {
      names.emplace_back("1");
    }
    Covers covers;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      covers.emplace_back(names[i], names[i + 1]);
    }
    return make_poset(names, covers);
  }

  Poset boolean_lattice(std::size_t k) {
    if (k > 6) {
      throw Error(ErrorKind::BudgetExceeded, "BOOLE(k) supports k <= 6");
    }
    std::size_t const        n = std::size_t{1} << k;
    std::vector<std::string> names(n);
    for (std::size_t s = 0; s < n; ++s) {
      if (s == 0) {
        names[s] = "0";
      } else if (s == n - 1) {
        names[s] = "1";
      } else {
        for (std::size_t i = 0; i < k; ++i) {
          if ((s >> i) & 1U) {
            names[s].push_back(static_cast<char>('a' + i));
          }
        }
      }
    }
    std::vector<ElemSet> up(n);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if ((s & ~t) == 0) {
          up[s].insert(static_cast<Elem>(t));
        }
      }
    }
    return Poset(std::move(names), std::move(up));
  }

  Fixture fixture(std::string_view name) {
    if (name == "N5") {
      Poset p = make_poset({"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
      BinOp star = table(p,
                         {{"1", "1", "1", "1", "1"},
                          {"b", "1", "b", "1", "1"},
                          {"c", "a", "1", "c", "1"},
                          {"b", "a", "b", "1", "1"},
                          {"0", "a", "b", "c", "1"}});
      auto constants = bound_constants(p);
      return Fixture{"N5", std::move(p), {{"*", std::move(star)}}, std::move(constants)};
    }
    if (name == "P6") {
      Poset p = make_poset({"0", "a", "b", "c", "d", "1"},
                           {{"0", "a"},
                            {"0", "b"},
                            {"a", "c"},
                            {"b", "c"},
                            {"a", "d"},
                            {"b", "d"},
                            {"c", "1"},
                            {"d", "1"}});
      BinOp star = table(p,
                         {{"1", "1", "1", "1", "1", "1"},
                          {"b", "1", "b", "1", "1", "1"},
                          {"a", "a", "1", "1", "1", "1"},
                          {"0", "a", "b", "1", "d", "1"},
                          {"0", "a", "b", "c", "1", "1"},
                          {"0", "a", "b", "c", "d", "1"}});
      auto constants = bound_constants(p);
      return Fixture{"P6", std::move(p), {{"*", std::move(star)}}, std::move(constants)};
    }
    if (name == "EX1") {
      Poset p    = make_poset({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}});
      BinOp mult = table(p, {{"0", "0", "0"}, {"0", "0", "a"}, {"0", "a", "1"}});
      BinOp imp  = table(p, {{"1", "1", "1"}, {"a", "1", "1"}, {"0", "a", "1"}});
      auto  constants = bound_constants(p);
      return Fixture{"EX1",
                     std::move(p),
                     {{"mul", std::move(mult)}, {"imp", std::move(imp)}},
                     std::move(constants)};
    }
    if (name == "M3") {
      Poset p = make_poset(
          {"0", "a", "b", "c", "1"},
          {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
      auto constants = bound_constants(p);
      return Fixture{"M3", std::move(p), {}, std::move(constants)};
    }
    if (auto k = parameter(name, "CHAIN"); k && *k >= 1 && *k <= kMaxCarrier) {
      Poset p         = chain(*k);
      auto  constants = bound_constants(p);
      return Fixture{std::string(name), std::move(p), {}, std::move(constants)};
    }
    if (auto k = parameter(name, "BOOLE"); k && *k <= 6) {
      Poset p         = boolean_lattice(*k);
      auto  constants = bound_constants(p);
      return Fixture{std::string(name), std::move(p), {}, std::move(constants)};
    }
    throw Error(ErrorKind::UnknownFixture, std::string(name));
  }

  Poset direct_product(Poset const& p, Poset const& q, std::size_t budget) {
    std::size_t const n = p.size() * q.size();
    if (n > budget || n > kMaxCarrier) {
      throw Error(ErrorKind::BudgetExceeded,
                  "product of " + std::to_string(n) + " elements exceeds the size budget of "
                      + std::to_string(std::min(budget, kMaxCarrier)));
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (Elem x = 0; x < p.size(); ++x) {
      for (Elem y = 0; y < q.size(); ++y) {
        names.push_back(p.name(x) + "." + q.name(y));
      }
    }
    std::vector<ElemSet> up(n);
    Elem const           width = static_cast<Elem>(q.size());
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        if (p.leq(i / width, j / width) && q.leq(i % width, j % width)) {
          up[i].insert(j);
        }
      }
    }
    return Poset(std::move(names), std::move(up));
  }

  BinOp product_op(BinOp const& x, BinOp const& y) {
    std::size_t const width = y.size();
    return BinOp::tabulate(x.size() * width, [&](Elem i, Elem j) -> std::optional<Elem> {
      auto const u = x.get(i / width, j / width);
      auto const v = y.get(i % width, j % width);
      if (!u || !v) {
        return std::nullopt;
      }
      return static_cast<Elem>(*u * width + *v);
    });
  }

  std::vector<std::uint64_t> canonical_form(Poset const& p) {
    std::size_t const n = p.size();

    // Colour refinement on (colour, colours below, colours above) until the
    // number of classes stops growing.
    std::vector<std::size_t> colour(n, 0);
    for (std::size_t classes = 1;;) {
      using Signature = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
      std::vector<Signature> sig(n);
      for (Elem x = 0; x < n; ++x) {
        std::vector<std::size_t> below, above;
        for (Elem y = 0; y < n; ++y) {
          if (y != x && p.leq(y, x)) {
            below.push_back(colour[y]);
          } else if (y != x && p.leq(x, y)) {
            above.push_back(colour[y]);
          }
        }
        std::sort(below.begin(), below.end());
        std::sort(above.begin(), above.end());
        sig[x] = {colour[x], std::move(below), std::move(above)};
      }
      std::vector<Signature> distinct(sig);
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (Elem x = 0; x < n; ++x) {
        colour[x] = static_cast<std::size_t>(
            std::lower_bound(distinct.begin(), distinct.end(), sig[x]) - distinct.begin());
      }
      if (distinct.size() == classes) {
        break;
      }
      classes = distinct.size();
    }

    std::vector<std::vector<Elem>> cells(*std::max_element(colour.begin(), colour.end()) + 1);
    for (Elem x = 0; x < n; ++x) {
      cells[colour[x]].push_back(x);
    }

    // Minimise the relation matrix over orderings that respect the cells.
    std::vector<Elem>          order;
    std::vector<std::uint64_t> best;
    std::function<void(std::size_t)> place = [&](std::size_t cell) {
      if (cell == cells.size()) {
        std::vector<std::uint64_t> form(n + 1, 0);
        form[0] = n;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (p.leq(order[i], order[j])) {
              form[i + 1] |= std::uint64_t{1} << j;
            }
          }
        }
        if (best.empty() || form < best) {
          best = std::move(form);
        }
        return;
      }
      std::vector<Elem> members = cells[cell];
      do {
        order.insert(order.end(), members.begin(), members.end());
        place(cell + 1);
        order.resize(order.size() - members.size());
      } while (std::next_permutation(members.begin(), members.end()));
    };
    place(0);
    return best;
  }

  bool isomorphic(Poset const& p, Poset const& q) {
    return p.size() == q.size() && canonical_form(p) == canonical_form(q);
  }

  namespace {
    // Order ideals of the poset on up[0 .. k-1].
    std::vector<ElemSet> down_closed_subsets(std::vector<ElemSet> const& up, std::size_t k) {
      std::vector<ElemSet> down(k);
      for (Elem x = 0; x < k; ++x) {
        for (Elem y : up[x].members()) {
          down[y].insert(x);
        }
      }
      std::vector<ElemSet> out;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        ElemSet const s(bits);
        bool          closed = true;
        for (Elem x : s.members()) {
          if (!down[x].subset_of(s)) {
            closed = false;
            break;
          }
        }
        if (closed) {
          out.push_back(s);
        }
      }
      return out;
    }

    std::vector<ElemSet> extend(std::vector<ElemSet> up, ElemSet ideal) {
      Elem const k = static_cast<Elem>(up.size());
      for (Elem x : ideal.members()) {
        up[x].insert(k);
      }
      up.push_back(ElemSet::singleton(k));
      return up;
    }

    std::vector<std::string> element_names(std::size_t n) {
      std::vector<std::string> names(n);
      for (std::size_t i = 0; i < n; ++i) {
        names[i] = "e" + std::to_string(i);
      }
      return names;
    }
  }  // namespace

  Catalog enumerate(std::size_t n, CatalogFilter filter, bool dedup, std::size_t budget) {
    if (budget == 0) {
      budget = dedup ? kDedupBudget : kLabeledBudget;
    }
    if (n == 0) {
      throw Error(ErrorKind::EmptyCarrier, "catalog size must be positive");
    }
    if (n > budget || n > kMaxCarrier) {
      throw Error(ErrorKind::BudgetExceeded,
                  "enumeration allowed up to " + std::to_string(budget) + " elements"
                      + (dedup ? " with dedup" : " without dedup") + ", got "
                      + std::to_string(n));
    }

    std::vector<std::vector<ElemSet>> level{{ElemSet::singleton(0)}};
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<std::vector<ElemSet>>     next;
      std::set<std::vector<std::uint64_t>> seen;
      for (auto const& up : level) {
        for (ElemSet ideal : down_closed_subsets(up, k)) {
          auto grown = extend(up, ideal);
          if (dedup) {
            auto form = canonical_form(Poset(element_names(k + 1), grown));
            if (!seen.insert(std::move(form)).second) {
              continue;
            }
          }
          next.push_back(std::move(grown));
        }
      }
      level = std::move(next);
    }

    Catalog catalog{n, filter, dedup, {}};
    auto const names = element_names(n);
    for (auto& up : level) {
      Poset p(names, std::move(up));
      if (filter != CatalogFilter::AllPosets) {
        if (!std::holds_alternative<LatticeOps>(as_lattice(p))) {
          continue;
        }
        if (filter == CatalogFilter::LatticesWithTop && !bounds(p).top) {
          continue;
        }
      }
      catalog.structures.push_back(std::move(p));
    }
    return catalog;
  }

}  // namespace ordalg
