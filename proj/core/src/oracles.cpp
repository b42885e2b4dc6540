#include "legfront/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "legfront/error.hpp"

namespace legfront::oracles {

BracketPolynomial BracketPolynomial::monomial(std::int64_t coeff, int exponent) {
  BracketPolynomial p;
  p.add(exponent, coeff);
  return p;
}

std::int64_t BracketPolynomial::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void BracketPolynomial::add(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BracketPolynomial& BracketPolynomial::operator+=(const BracketPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

BracketPolynomial operator*(const BracketPolynomial& a, const BracketPolynomial& b) {
  BracketPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  }
  return out;
}

std::string BracketPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t mag = c;
    if (first) {
      if (c < 0) {
        os << '-';
        mag = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      mag = c < 0 ? -c : c;
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'A';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

int crossing_sign(const CodeCrossing& c) {
  if (c.over_in == c.pd[3]) return 1;
  if (c.over_in == c.pd[1]) return -1;
  throw Error(ErrorCode::MalformedCode,
              "over_in " + std::to_string(c.over_in) + " is not an over slot");
}

std::unordered_map<int, std::size_t> label_components(const GenericCode& code) {
  std::unordered_map<int, std::size_t> comp;
  for (std::size_t k = 0; k < code.components.size(); ++k) {
    for (int label : code.components[k]) comp[label] = k;
  }
  return comp;
}

}  // namespace

int oracle_writhe(const GenericCode& code) {
  int w = 0;
  for (const CodeCrossing& c : code.crossings) w += crossing_sign(c);
  return w;
}

int oracle_linking(const GenericCode& code, std::size_t j, std::size_t k) {
  if (j >= code.components.size() || k >= code.components.size()) {
    throw Error(ErrorCode::UnknownComponent, "no such component");
  }
  if (j == k) throw Error(ErrorCode::SameComponent, "linking needs two components");
  const auto comp = label_components(code);
  auto lookup = [&](int label) {
    const auto it = comp.find(label);
    if (it == comp.end()) {
      throw Error(ErrorCode::MalformedCode,
                  "label " + std::to_string(label) + " is on no component");
    }
    return it->second;
  };
  int total = 0;
  for (const CodeCrossing& c : code.crossings) {
    const std::size_t over = lookup(c.over_in);
    const std::size_t under = lookup(c.pd[0]);
    if ((over == j && under == k) || (over == k && under == j)) {
      total += crossing_sign(c);
    }
  }
  if (total % 2 != 0) {
    throw Error(ErrorCode::MalformedCode, "odd count of mixed crossings");
  }
  return total / 2;
}

BracketPolynomial bracket_state_sum(const GenericCode& code, std::size_t max_crossings) {
  const std::size_t n = code.crossings.size();
  if (n > max_crossings) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " crossings exceeds the limit of " +
                                         std::to_string(max_crossings));
  }
  std::unordered_map<int, int> dense;
  for (const CodeCrossing& c : code.crossings) {
    for (int label : c.pd) dense.emplace(label, static_cast<int>(dense.size()));
  }
  std::size_t free_loops = 0;
  for (const auto& comp : code.components) {
    if (comp.empty()) ++free_loops;
  }
  if (n == 0 && free_loops == 0) {
    throw Error(ErrorCode::MalformedCode, "empty code");
  }

  // count[(a_minus_b, loops)]
  std::map<std::pair<int, std::size_t>, std::int64_t> count;
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < states; ++s) {
    Dsu dsu(dense.size());
    int balance = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& pd = code.crossings[i].pd;
      const int a = dense[pd[0]], b = dense[pd[1]], c = dense[pd[2]], d = dense[pd[3]];
      if ((s >> i) & 1U) {
        dsu.unite(a, d);
        dsu.unite(b, c);
        --balance;
      } else {
        dsu.unite(a, b);
        dsu.unite(c, d);
        ++balance;
      }
    }
    std::size_t loops = free_loops;
    for (int x = 0; x < static_cast<int>(dense.size()); ++x) {
      if (dsu.find(x) == x) ++loops;
    }
    ++count[{balance, loops}];
  }

  const BracketPolynomial delta =
      BracketPolynomial::monomial(-1, 2) + BracketPolynomial::monomial(-1, -2);
  std::vector<BracketPolynomial> delta_pow{BracketPolynomial::one()};
  BracketPolynomial out;
  for (const auto& [key, mult] : count) {
    const auto& [balance, loops] = key;
    while (delta_pow.size() < loops) delta_pow.push_back(delta_pow.back() * delta);
    out += BracketPolynomial::monomial(mult, balance) * delta_pow[loops - 1];
  }
  return out;
}

BracketPolynomial kauffman_bracket(const GenericCode& code, std::size_t max_crossings) {
  const BracketPolynomial raw = bracket_state_sum(code, max_crossings);
  const int w = oracle_writhe(code);
  const std::int64_t sign = (w % 2 == 0) ? 1 : -1;
  return BracketPolynomial::monomial(sign, -3 * w) * raw;
}

GenericCode knot_code_from_pd(const std::vector<std::array<int, 4>>& pd) {
  GenericCode code;
  const int edges = 2 * static_cast<int>(pd.size());
  auto next = [edges](int l) { return l % edges + 1; };
  std::set<int> under_in;
  for (const auto& x : pd) under_in.insert(x[0]);
  for (std::size_t i = 0; i < pd.size(); ++i) {
    const auto& x = pd[i];
    for (int label : x) {
      if (label < 1 || label > edges) {
        throw Error(ErrorCode::MalformedCode,
                    "label " + std::to_string(label) + " outside 1.." + std::to_string(edges));
      }
    }
    if (next(x[0]) != x[2]) {
      throw Error(ErrorCode::MalformedCode, "under strand of crossing " +
                                                std::to_string(i + 1) +
                                                " is not consecutive");
    }
    CodeCrossing c{};
    c.pd = x;
    // With two edges both directions look consecutive; an edge that already
    // enters as an under strand cannot enter again as the over strand.
    const bool from3 = next(x[3]) == x[1] && !under_in.contains(x[3]);
    const bool from1 = next(x[1]) == x[3] && !under_in.contains(x[1]);
    if (from3) {
      c.over_in = x[3];
    } else if (from1) {
      c.over_in = x[1];
    } else {
      throw Error(ErrorCode::MalformedCode, "over strand of crossing " +
                                                std::to_string(i + 1) +
                                                " is not consecutive");
    }
    c.event = i;
    c.sign = c.over_in == x[3] ? 1 : -1;
    code.crossings.push_back(c);
  }
  code.components.emplace_back();
  for (int l = 1; l <= edges; ++l) code.components.back().push_back(l);
  return code;
}

GenericCode parse_pd(const std::string& text) {
  static const std::regex outer(R"(^\s*PD\[(.*)\]\s*$)");
  static const std::regex quad(R"(X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\])");
  std::smatch m;
  if (!std::regex_match(text, m, outer)) {
    throw Error(ErrorCode::MalformedCode, "expected PD[...]");
  }
  const std::string body = m[1].str();
  std::vector<std::array<int, 4>> pd;
  std::string rest;
  auto it = std::sregex_iterator(body.begin(), body.end(), quad);
  std::size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    rest += body.substr(last, static_cast<std::size_t>(it->position()) - last);
    last = static_cast<std::size_t>(it->position() + it->length());
    pd.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]),
                  std::stoi((*it)[4])});
  }
  rest += body.substr(last);
  if (rest.find_first_not_of(" ,\t\n") != std::string::npos) {
    throw Error(ErrorCode::MalformedCode, "unexpected text in PD code");
  }
  return knot_code_from_pd(pd);
}

namespace {

// One pass of a component through a crossing of the grid picture.
struct Passage {
  int column, row;
  bool vertical;
  bool increasing;  // moving towards larger row (vertical) or column
};

}  // namespace

GenericCode grid_code(const GridDiagram& g) {
  const int n = g.size();
  auto crosses = [&](int c, int r) {
    const int rlo = std::min(g.x_row(c), g.o_row(c));
    const int rhi = std::max(g.x_row(c), g.o_row(c));
    const int clo = std::min(g.x_column(r), g.o_column(r));
    const int chi = std::max(g.x_column(r), g.o_column(r));
    return r > rlo && r < rhi && c > clo && c < chi;
  };

  struct Slots {
    int west = 0, east = 0, south = 0, north = 0;
    bool h_increasing = false, v_increasing = false;
    std::size_t v_comp = 0, h_comp = 0;
  };
  std::map<std::pair<int, int>, Slots> slots;

  GenericCode code;
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  int next_label = 1;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Passage> passages;
    int c = start;
    do {
      seen[static_cast<std::size_t>(c)] = true;
      // vertical edge of column c, X to O
      const int r0 = g.x_row(c), r1 = g.o_row(c);
      const int dr = r1 > r0 ? 1 : -1;
      for (int r = r0 + dr; r != r1; r += dr) {
        if (crosses(c, r)) passages.push_back({c, r, true, dr > 0});
      }
      // horizontal edge of row r1, O to X
      const int c1 = g.x_column(r1);
      const int dc = c1 > c ? 1 : -1;
      for (int cc = c + dc; cc != c1; cc += dc) {
        if (crosses(cc, r1)) passages.push_back({cc, r1, false, dc > 0});
      }
      c = c1;
    } while (c != start);

    const std::size_t comp = code.components.size();
    code.components.emplace_back();
    const int m = static_cast<int>(passages.size());
    for (int j = 0; j < m; ++j) code.components.back().push_back(next_label + j);
    for (int j = 0; j < m; ++j) {
      const Passage& p = passages[static_cast<std::size_t>(j)];
      const int before = next_label + (j + m - 1) % m;
      const int after = next_label + j;
      Slots& s = slots[{p.column, p.row}];
      if (p.vertical) {
        s.v_increasing = p.increasing;
        s.v_comp = comp;
        (p.increasing ? s.south : s.north) = before;
        (p.increasing ? s.north : s.south) = after;
      } else {
        s.h_increasing = p.increasing;
        s.h_comp = comp;
        (p.increasing ? s.west : s.east) = before;
        (p.increasing ? s.east : s.west) = after;
      }
    }
    next_label += m;
  }

  // Counter-clockwise in the (column, row) plane is E, N, W, S.
  for (const auto& [key, s] : slots) {
    CodeCrossing x{};
    x.pd = s.h_increasing ? std::array<int, 4>{s.west, s.south, s.east, s.north}
                          : std::array<int, 4>{s.east, s.north, s.west, s.south};
    x.over_in = s.v_increasing ? s.south : s.north;
    x.event = code.crossings.size();
    x.over_component = s.v_comp;
    x.under_component = s.h_comp;
    x.sign = x.over_in == x.pd[3] ? 1 : -1;
    code.crossings.push_back(x);
  }
  return code;
}

}  // namespace legfront::oracles
