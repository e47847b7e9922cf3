#include "alcovewalks/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace aw {

std::string vec_to_string(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

Vec parse_int_vector(const std::string& s) {
  Vec out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) fail(Errc::ParseError, "empty integer in vector '" + s + "'");
    std::size_t pos = 0;
    Int v = 0;
    try {
      v = std::stoll(cur, &pos);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad integer '" + cur + "'");
    }
    if (pos != cur.size()) fail(Errc::ParseError, "bad integer '" + cur + "'");
    out.push_back(v);
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  flush();
  return out;
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

namespace {

// Simple types are presented in the simple-root basis of X^*(T): the i-th
// simple root is e_i and the j-th simple coroot is the j-th column of the
// Cartan matrix C_ij = <alpha_i, alpha_j^vee>.
RootDatumSpec cartan_preset(const std::string& name, const std::vector<std::vector<Int>>& cartan) {
  RootDatumSpec s;
  s.name = name;
  s.rank = static_cast<int>(cartan.size());
  for (int i = 0; i < s.rank; ++i) {
    Vec root(s.rank, 0), coroot(s.rank, 0);
    root[i] = 1;
    for (int r = 0; r < s.rank; ++r) coroot[r] = cartan[r][i];
    s.simple_roots.push_back(root);
    s.simple_coroots.push_back(coroot);
  }
  return s;
}

RootDatumSpec gl_preset(int n) {
  RootDatumSpec s;
  s.name = "GL" + std::to_string(n);
  s.rank = n;
  for (int i = 0; i + 1 < n; ++i) {
    Vec v(n, 0);
    v[i] = 1;
    v[i + 1] = -1;
    s.simple_roots.push_back(v);
    s.simple_coroots.push_back(v);
  }
  return s;
}

}  // namespace

RootDatumSpec preset_spec(const std::string& name) {
  if (name == "A1") return cartan_preset(name, {{2}});
  if (name == "A2") return cartan_preset(name, {{2, -1}, {-1, 2}});
  if (name == "A3") return cartan_preset(name, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  if (name == "B2") return cartan_preset(name, {{2, -2}, {-1, 2}});
  if (name == "C2") return cartan_preset(name, {{2, -1}, {-2, 2}});
  if (name == "G2") return cartan_preset(name, {{2, -1}, {-3, 2}});
  if (name == "GL2") return gl_preset(2);
  if (name == "GL3") return gl_preset(3);
  if (name == "GL4") return gl_preset(4);
  if (name == "B2sc") {
    // SO5 in epsilon coordinates; the dual group is Sp4 = Spin5.
    RootDatumSpec s;
    s.name = name;
    s.rank = 2;
    s.simple_roots = {{1, -1}, {0, 1}};
    s.simple_coroots = {{1, -1}, {0, 2}};
    return s;
  }
  fail(Errc::InvalidArgument, "unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"A1", "A2", "A3", "B2", "B2sc", "C2", "G2", "GL2", "GL3", "GL4"};
}

RootDatumSpec dual_spec(const RootDatumSpec& spec) {
  RootDatumSpec d;
  d.name = spec.name.empty() ? std::string() : ("dual(" + spec.name + ")");
  if (spec.name.size() > 5 && spec.name.substr(0, 5) == "dual(") d.name = spec.name.substr(5, spec.name.size() - 6);
  d.rank = spec.rank;
  d.simple_roots = spec.simple_coroots;
  d.simple_coroots = spec.simple_roots;
  return d;
}

// ---------------------------------------------------------------------------
// Config file format
// ---------------------------------------------------------------------------

RootDatumSpec parse_datum_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  auto trim = [](std::string s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) fail(Errc::ParseError, "config line without '=': " + t);
    kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  if (kv.count("name")) return preset_spec(kv["name"]);
  if (!kv.count("rank") || !kv.count("simple_roots") || !kv.count("simple_coroots"))
    fail(Errc::ParseError, "config needs either 'name' or rank/simple_roots/simple_coroots");

  RootDatumSpec s;
  try {
    s.rank = std::stoi(kv["rank"]);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad rank '" + kv["rank"] + "'");
  }
  auto parse_list = [&](const std::string& v) {
    std::vector<Vec> out;
    std::string cur;
    for (char c : v + ";") {
      if (c == ';') {
        if (!cur.empty()) out.push_back(parse_int_vector(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    return out;
  };
  s.simple_roots = parse_list(kv["simple_roots"]);
  s.simple_coroots = parse_list(kv["simple_coroots"]);
  return s;
}

std::string datum_config_text(const RootDatumSpec& spec) {
  std::string out;
  if (!spec.name.empty() && spec.name.find('(') == std::string::npos) {
    out = "name = " + spec.name + "\n";
    return out;
  }
  out += "rank = " + std::to_string(spec.rank) + "\n";
  auto join = [](const std::vector<Vec>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ';';
      s += vec_to_string(vs[i]);
    }
    return s;
  };
  out += "simple_roots = " + join(spec.simple_roots) + "\n";
  out += "simple_coroots = " + join(spec.simple_coroots) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace {

struct MatHash {
  std::size_t operator()(const std::vector<Int>& v) const {
    std::size_t h = 14695981039346656037ull;
    for (Int x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

constexpr int kMaxPositiveRoots = 10000;
constexpr int kMaxWeylOrder = 100000;

// Finite type iff the symmetrized Cartan matrix is positive definite.
void check_finite_type_cartan(const std::vector<std::vector<Int>>& C) {
  int m = static_cast<int>(C.size());
  for (int i = 0; i < m; ++i) {
    if (C[i][i] != 2) fail(Errc::DualityMismatch, "<alpha_i, alpha_i^vee> != 2");
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (C[i][j] > 0) fail(Errc::NotFiniteType, "positive off-diagonal Cartan entry");
      if ((C[i][j] == 0) != (C[j][i] == 0)) fail(Errc::NotFiniteType, "asymmetric Cartan zero pattern");
    }
  }
  // Symmetrizer d_i > 0 with d_i C_ij = d_j C_ji, found componentwise.
  std::vector<Int> d(m, 0);
  for (int i = 0; i < m; ++i) {
    if (d[i] != 0) continue;
    d[i] = 1;
    std::deque<int> q{i};
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (int b = 0; b < m; ++b) {
        if (C[a][b] == 0 || d[b] != 0) continue;
        // d_b = d_a * C_ab / C_ba, kept integral by scaling the component.
        Int num = d[a] * C[a][b];
        Int den = C[b][a];
        if (num % den != 0) {
          Int g = std::abs(den);
          for (int t = 0; t < m; ++t) d[t] *= g;
          num = d[a] * C[a][b];
        }
        d[b] = num / den;
        if (d[b] <= 0) fail(Errc::NotFiniteType, "Cartan matrix not symmetrizable with positive symmetrizer");
        q.push_back(b);
      }
    }
  }
  // Sylvester criterion on B_ij = d_i C_ij via fraction-free elimination.
  std::vector<std::vector<Int>> B(m, std::vector<Int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) B[i][j] = d[i] * C[i][j];
  Int prev = 1;
  for (int k = 0; k < m; ++k) {
    // Bareiss step: after step k, B[k][k] = leading principal minor of order k+1.
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j) B[i][j] = (B[i][j] * B[k][k] - B[i][k] * B[k][j]) / prev;
    if (B[k][k] <= 0) fail(Errc::NotFiniteType, "Cartan matrix is not of finite type");
    prev = B[k][k];
  }
}

int rank_of_int_matrix(std::vector<Vec> rows) {
  int r = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Int a = rows[r][c], b = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] * a - rows[r][j] * b;
    }
    ++r;
  }
  return r;
}

}  // namespace

RootDatum build_root_datum(const RootDatumSpec& spec) {
  RootDatum R;
  R.spec = spec;
  R.rank = spec.rank;
  R.nsimple = static_cast<int>(spec.simple_roots.size());
  check(R.rank >= 1, Errc::InvalidArgument, "rank must be positive");
  check(spec.simple_coroots.size() == spec.simple_roots.size(), Errc::InvalidArgument,
        "simple roots and coroots must match in number");
  check(R.nsimple <= R.rank, Errc::InvalidArgument, "more simple roots than the rank allows");
  for (int i = 0; i < R.nsimple; ++i) {
    check(static_cast<int>(spec.simple_roots[i].size()) == R.rank, Errc::RankMismatch, "simple root of wrong rank");
    check(static_cast<int>(spec.simple_coroots[i].size()) == R.rank, Errc::RankMismatch,
          "simple coroot of wrong rank");
  }
  check(rank_of_int_matrix(spec.simple_roots) == R.nsimple, Errc::NotFiniteType,
        "simple roots are linearly dependent");
  check(rank_of_int_matrix(spec.simple_coroots) == R.nsimple, Errc::NotFiniteType,
        "simple coroots are linearly dependent");

  std::vector<std::vector<Int>> cartan(R.nsimple, std::vector<Int>(R.nsimple));
  for (int i = 0; i < R.nsimple; ++i)
    for (int j = 0; j < R.nsimple; ++j) cartan[i][j] = dot(spec.simple_roots[i], spec.simple_coroots[j]);
  check_finite_type_cartan(cartan);

  // Components of the Dynkin diagram.
  R.simple_comp.assign(R.nsimple, -1);
  R.ncomp = 0;
  for (int i = 0; i < R.nsimple; ++i) {
    if (R.simple_comp[i] >= 0) continue;
    int c = R.ncomp++;
    std::deque<int> q{i};
    R.simple_comp[i] = c;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (int b = 0; b < R.nsimple; ++b)
        if (R.simple_comp[b] < 0 && cartan[a][b] != 0) {
          R.simple_comp[b] = c;
          q.push_back(b);
        }
    }
  }

  // Positive roots by closure under simple reflections (which permute
  // the positive roots other than the reflecting simple root).
  struct Entry {
    Vec root, coroot, coords;
    int comp;
  };
  std::vector<Entry> entries;
  std::unordered_map<Vec, int, VecHash> seen;
  for (int i = 0; i < R.nsimple; ++i) {
    Vec coords(R.nsimple, 0);
    coords[i] = 1;
    seen.emplace(spec.simple_roots[i], static_cast<int>(entries.size()));
    entries.push_back({spec.simple_roots[i], spec.simple_coroots[i], coords, R.simple_comp[i]});
  }
  for (std::size_t head = 0; head < entries.size(); ++head) {
    for (int i = 0; i < R.nsimple; ++i) {
      Entry e = entries[head];
      if (e.root == spec.simple_roots[i]) continue;
      Int c1 = dot(e.root, spec.simple_coroots[i]);
      Int c2 = dot(spec.simple_roots[i], e.coroot);
      Entry f;
      f.root = vec_sub(e.root, vec_scaled(spec.simple_roots[i], c1));
      f.coroot = vec_sub(e.coroot, vec_scaled(spec.simple_coroots[i], c2));
      f.coords = e.coords;
      f.coords[i] -= c1;
      f.comp = e.comp;
      if (seen.emplace(f.root, static_cast<int>(entries.size())).second) {
        entries.push_back(std::move(f));
        if (entries.size() > kMaxPositiveRoots) fail(Errc::NotFiniteType, "root closure exceeded bound");
      }
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    Int ha = std::accumulate(a.coords.begin(), a.coords.end(), Int{0});
    Int hb = std::accumulate(b.coords.begin(), b.coords.end(), Int{0});
    return std::tie(a.comp, ha, a.root) < std::tie(b.comp, hb, b.root);
  });
  for (int idx = 0; idx < static_cast<int>(entries.size()); ++idx) {
    R.pos_roots.push_back(entries[idx].root);
    R.pos_coroots.push_back(entries[idx].coroot);
    R.root_simple_coords.push_back(entries[idx].coords);
    R.root_comp.push_back(entries[idx].comp);
    R.root_index.emplace(entries[idx].root, idx);
  }

  R.two_rho.assign(R.rank, 0);
  R.two_rho_check.assign(R.rank, 0);
  for (std::size_t i = 0; i < R.pos_roots.size(); ++i) {
    R.two_rho = vec_add(R.two_rho, R.pos_roots[i]);
    R.two_rho_check = vec_add(R.two_rho_check, R.pos_coroots[i]);
  }
  for (int i = 0; i < R.nsimple; ++i) {
    check(dot(R.two_rho, spec.simple_coroots[i]) == 2, Errc::DualityMismatch,
          "<2rho, alpha_i^vee> != 2 (inconsistent datum)");
    check(dot(spec.simple_roots[i], R.two_rho_check) == 2, Errc::DualityMismatch,
          "<alpha_i, 2rho^vee> != 2 (inconsistent datum)");
  }

  // Highest root per component: the dominant root of maximal height.
  R.highest_root.assign(R.ncomp, -1);
  for (int idx = 0; idx < static_cast<int>(R.pos_roots.size()); ++idx) {
    bool dom = true;
    for (int j = 0; j < R.nsimple && dom; ++j)
      if (dot(R.pos_roots[idx], spec.simple_coroots[j]) < 0) dom = false;
    if (!dom) continue;
    int c = R.root_comp[idx];
    auto height = [&](int k) {
      return std::accumulate(R.root_simple_coords[k].begin(), R.root_simple_coords[k].end(), Int{0});
    };
    if (R.highest_root[c] < 0 || height(idx) > height(R.highest_root[c])) R.highest_root[c] = idx;
  }
  for (int c = 0; c < R.ncomp; ++c)
    check(R.highest_root[c] >= 0, Errc::Internal, "component without highest root");

  // Finite Weyl group, breadth-first over right multiplication. BFS distance
  // is the Coxeter length, so the first word found is reduced.
  std::vector<Mat> refl(R.nsimple);
  for (int i = 0; i < R.nsimple; ++i) {
    Mat m = Mat::identity(R.rank);
    for (int r = 0; r < R.rank; ++r)
      for (int c = 0; c < R.rank; ++c) m.at(r, c) -= spec.simple_coroots[i][r] * spec.simple_roots[i][c];
    refl[i] = m;
  }
  std::unordered_map<std::vector<Int>, int, MatHash> mat_index;
  std::vector<Mat> mats{Mat::identity(R.rank)};
  std::vector<int> lengths{0};
  mat_index.emplace(mats[0].a, 0);
  std::vector<std::vector<int>> right_mult;
  right_mult.push_back(std::vector<int>(R.nsimple, -1));
  for (std::size_t head = 0; head < mats.size(); ++head) {
    for (int i = 0; i < R.nsimple; ++i) {
      if (right_mult[head][i] >= 0) continue;
      Mat m = mats[head].mul(refl[i]);
      auto it = mat_index.find(m.a);
      int idx;
      if (it == mat_index.end()) {
        idx = static_cast<int>(mats.size());
        mat_index.emplace(m.a, idx);
        mats.push_back(std::move(m));
        lengths.push_back(lengths[head] + 1);
        right_mult.push_back(std::vector<int>(R.nsimple, -1));
        if (mats.size() > kMaxWeylOrder) fail(Errc::NotFiniteType, "Weyl group closure exceeded bound");
      } else {
        idx = it->second;
      }
      right_mult[head][i] = idx;
      right_mult[idx][i] = static_cast<int>(head);
    }
  }

  int order = static_cast<int>(mats.size());
  std::vector<std::vector<int>> left_mult(order, std::vector<int>(R.nsimple));
  for (int w = 0; w < order; ++w)
    for (int i = 0; i < R.nsimple; ++i) left_mult[w][i] = mat_index.at(refl[i].mul(mats[w]).a);

  // Canonical reduced words by greedy smallest left descent.
  std::vector<std::vector<int>> words(order);
  {
    std::vector<int> by_len(order);
    std::iota(by_len.begin(), by_len.end(), 0);
    std::sort(by_len.begin(), by_len.end(), [&](int a, int b) { return lengths[a] < lengths[b]; });
    for (int w : by_len) {
      if (lengths[w] == 0) continue;
      for (int i = 0; i < R.nsimple; ++i) {
        int v = left_mult[w][i];
        if (lengths[v] < lengths[w]) {
          words[w] = words[v];
          words[w].insert(words[w].begin(), i);
          break;
        }
      }
    }
  }

  R.weyl.resize(order);
  for (int w = 0; w < order; ++w) {
    FiniteWeylElement e;
    e.mat = mats[w];
    e.word = words[w];
    e.length = lengths[w];
    e.right_mult = right_mult[w];
    e.left_mult = left_mult[w];
    Mat inv_m = Mat::identity(R.rank);
    for (auto it = words[w].rbegin(); it != words[w].rend(); ++it) inv_m = inv_m.mul(refl[*it]);
    e.inv = mat_index.at(inv_m.a);
    e.costar = inv_m.transposed();
    R.weyl[w] = std::move(e);
  }

  R.longest = 0;
  for (int w = 0; w < order; ++w)
    if (R.weyl[w].length > R.weyl[R.longest].length)
      R.longest = w;

  R.s_theta.assign(R.ncomp, -1);
  for (int c = 0; c < R.ncomp; ++c) {
    const Vec& th = R.pos_roots[R.highest_root[c]];
    const Vec& thv = R.pos_coroots[R.highest_root[c]];
    Mat m = Mat::identity(R.rank);
    for (int r = 0; r < R.rank; ++r)
      for (int cc = 0; cc < R.rank; ++cc) m.at(r, cc) -= thv[r] * th[cc];
    auto it = mat_index.find(m.a);
    check(it != mat_index.end(), Errc::Internal, "highest-root reflection not in W0");
    R.s_theta[c] = it->second;
  }

  // Base point p0 = (2rho^vee) / (2H) with H = 1 + max root height.
  Int maxht = 0;
  for (const Vec& c : R.root_simple_coords)
    maxht = std::max(maxht, std::accumulate(c.begin(), c.end(), Int{0}));
  R.p0_num = R.two_rho_check;
  R.p0_den = 2 * (maxht + 1);
  for (const Vec& beta : R.pos_roots) {
    Int v = dot(beta, R.p0_num);
    check(v > 0 && v < R.p0_den, Errc::Internal, "base point not interior to the base alcove");
  }

  R.w_theta_check.assign(order, std::vector<Vec>(R.ncomp));
  for (int w = 0; w < order; ++w)
    for (int c = 0; c < R.ncomp; ++c)
      R.w_theta_check[w][c] = R.weyl[w].mat.apply(R.pos_coroots[R.highest_root[c]]);

  return R;
}

RootDatum build_root_datum(const std::string& preset) { return build_root_datum(preset_spec(preset)); }

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

Vec RootDatum::act(int w, const Vec& cov) const { return weyl[w].mat.apply(cov); }

Vec RootDatum::act_weight(int w, const Vec& wt) const {
  return weyl[w].costar.apply(wt);
}

int RootDatum::mul(int a, int b) const {
  int r = a;
  for (int i : weyl[b].word) r = weyl[r].right_mult[i];
  return r;
}

int RootDatum::find_root(const Vec& r) const {
  auto it = root_index.find(r);
  return it == root_index.end() ? -1 : it->second;
}

bool RootDatum::is_dominant(const Vec& cov, const std::vector<int>& J) const {
  for (int j : J)
    if (dot(spec.simple_roots[j], cov) < 0) return false;
  return true;
}

std::vector<int> RootDatum::full_levi() const {
  std::vector<int> J(nsimple);
  std::iota(J.begin(), J.end(), 0);
  return J;
}

std::vector<int> RootDatum::levi_elements(const std::vector<int>& J) const {
  for (int j : J)
    check(0 <= j && j < nsimple, Errc::InvalidArgument, "Levi index out of range");
  std::vector<int> out{0};
  std::vector<char> in(weyl.size(), 0);
  in[0] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int j : J) {
      int v = weyl[out[head]].right_mult[j];
      if (!in[v]) {
        in[v] = 1;
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    const auto& ea = weyl[a];
    const auto& eb = weyl[b];
    return std::tie(ea.length, ea.word) < std::tie(eb.length, eb.word);
  });
  return out;
}

std::vector<int> RootDatum::levi_positive_roots(const std::vector<int>& J) const {
  std::vector<char> inJ(nsimple, 0);
  for (int j : J) inJ[j] = 1;
  std::vector<int> out;
  for (int idx = 0; idx < static_cast<int>(pos_roots.size()); ++idx) {
    bool ok = true;
    for (int i = 0; i < nsimple && ok; ++i)
      if (root_simple_coords[idx][i] != 0 && !inJ[i])
        ok = false;
    if (ok) out.push_back(idx);
  }
  return out;
}

Int pair(const RootDatum& R, const Vec& weight, const Vec& coweight) {
  check(static_cast<int>(weight.size()) == R.rank && static_cast<int>(coweight.size()) == R.rank,
        Errc::RankMismatch, "pair: rank mismatch");
  return dot(weight, coweight);
}

std::pair<Vec, int> dominant_rep(const RootDatum& R, const Vec& v, const std::vector<int>& J) {
  for (int u : R.levi_elements(J)) {
    Vec uv = R.act(u, v);
    if (R.is_dominant(uv, J)) return {uv, u};
  }
  fail(Errc::Internal, "orbit has no J-dominant element");
}

std::vector<int> min_coset_reps_stab(const RootDatum& R, const Vec& mu) {
  check(R.is_dominant(mu, R.full_levi()), Errc::NotDominant, "min_coset_reps_stab requires dominant mu");
  std::vector<int> stab_gens;
  for (int i = 0; i < R.nsimple; ++i)
    if (dot(R.spec.simple_roots[i], mu) == 0) stab_gens.push_back(i);
  std::vector<int> reps;
  for (int w = 0; w < static_cast<int>(R.weyl.size()); ++w) {
    bool minimal = true;
    for (int i : stab_gens) {
      int ws = R.weyl[w].right_mult[i];
      if (R.weyl[ws].length < R.weyl[w].length) {
        minimal = false;
        break;
      }
    }
    if (minimal) reps.push_back(w);
  }
  std::sort(reps.begin(), reps.end(), [&](int a, int b) {
    const auto& ea = R.weyl[a];
    const auto& eb = R.weyl[b];
    return std::tie(ea.length, ea.word) < std::tie(eb.length, eb.word);
  });
  std::size_t stab_order = R.levi_elements(stab_gens).size();
  check(reps.size() * stab_order == R.weyl.size(), Errc::Internal, "coset representative count mismatch");
  return reps;
}

namespace {

// Fraction-free Bareiss determinant of a small integer matrix.
Int int_det(std::vector<Vec> a) {
  int n = static_cast<int>(a.size());
  Int prev = 1, sign = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

std::optional<Vec> coroot_coords(const RootDatum& R, const Vec& v) {
  check(static_cast<int>(v.size()) == R.rank, Errc::RankMismatch, "coroot_coords: rank mismatch");
  int m = R.nsimple;
  // Pick m rows of the (rank x m) coroot-column matrix forming an invertible
  // square system, solve by Cramer, then verify against all rows.
  std::vector<int> rows;
  std::vector<Vec> picked;
  for (int r = 0; r < R.rank && static_cast<int>(rows.size()) < m; ++r) {
    Vec row(m);
    for (int j = 0; j < m; ++j) row[j] = R.spec.simple_coroots[j][r];
    std::vector<Vec> trial = picked;
    trial.push_back(row);
    if (rank_of_int_matrix(trial) == static_cast<int>(trial.size())) {
      picked = std::move(trial);
      rows.push_back(r);
    }
  }
  check(static_cast<int>(rows.size()) == m, Errc::Internal, "coroot matrix rank defect");

  std::vector<Vec> A(m, Vec(m));
  Vec b(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) A[i][j] = R.spec.simple_coroots[j][rows[i]];
    b[i] = v[rows[i]];
  }
  Int D = int_det(A);
  check(D != 0, Errc::Internal, "selected coroot system is singular");
  Vec c(m);
  for (int j = 0; j < m; ++j) {
    std::vector<Vec> Aj = A;
    for (int i = 0; i < m; ++i) Aj[i][j] = b[i];
    Int Dj = int_det(Aj);
    if (Dj % D != 0) return std::nullopt;
    c[j] = Dj / D;
  }
  // Verify the full (possibly overdetermined) system.
  Vec recon(R.rank, 0);
  for (int j = 0; j < m; ++j) recon = vec_add(recon, vec_scaled(R.spec.simple_coroots[j], c[j]));
  if (recon != v) return std::nullopt;
  return c;
}

std::optional<Int> dominance_leq(const RootDatum& R, const Vec& v1, const Vec& v2) {
  Vec diff = vec_sub(v2, v1);
  auto c = coroot_coords(R, diff);
  if (!c) return std::nullopt;
  for (Int x : *c)
    if (x < 0) return std::nullopt;
  Int twice = dot(R.two_rho, diff);
  check(twice % 2 == 0, Errc::Internal, "odd <2rho, coroot combination>");
  Int ht = twice / 2;
  check(ht == std::accumulate(c->begin(), c->end(), Int{0}), Errc::Internal, "height mismatch");
  return ht;
}

}  // namespace aw
