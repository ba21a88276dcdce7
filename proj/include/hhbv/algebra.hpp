#pragma once

// Finite-dimensional associative unital algebras with exact scalars.
//
// Two constructions: raw structure constants (verified exhaustively), and a
// quiver with relations truncated at a nilpotency bound L.  The quiver route
// enumerates all paths of length <= L in degree-lexicographic order, spans the
// relation ideal by p*r*q products whose longest surviving term has length
// <= L, checks that every length-L path falls inside that span (otherwise the
// bound is too small to certify the quotient), and takes the earliest
// independent paths as the basis.  Both routes end in the same representation:
// a dense multiplication table of sparse coordinate vectors, which every later
// stage (radical, socle, Hochschild complexes) consumes uniformly.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hhbv/linalg.hpp"

namespace hhbv {

struct QuiverArrow {
  std::string name, source, target;
};

struct RelationTerm {
  FieldElement coeff;
  std::vector<std::string> path;  // arrow names, first-traversed first
};
using Relation = std::vector<RelationTerm>;

struct QuiverPresentation {
  FieldRef field = nullptr;
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<Relation> relations;
  int nilpotency_bound = 0;
};

// basis-vector provenance for quiver-born algebras
struct PathInfo {
  int source = 0, target = 0;   // vertex indices
  std::vector<int> arrows;      // arrow indices, empty for a vertex
  std::string label;
  int length() const { return static_cast<int>(arrows.size()); }
};

class Algebra {
 public:
  static Algebra from_structure_constants(FieldRef F,
                                          std::vector<std::string> labels,
                                          SVec unit,
                                          std::vector<std::vector<SVec>> table);
  static Algebra from_quiver(const QuiverPresentation& pres);

  FieldRef field() const { return F_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SVec& unit() const { return unit_; }
  const SVec& mul_basis(int i, int j) const {
    return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  SVec mul(const SVec& x, const SVec& y) const {
    SVec acc;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) {
        FieldElement c = a * b;
        if (!c.is_zero()) acc = svec_axpy(acc, c, mul_basis(i, j));
      }
    return acc;
  }

  // matrix of left (x * -) / right (- * x) multiplication
  Matrix left_mult(const SVec& x) const {
    Matrix L(F_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      SVec acc;
      for (const auto& [i, a] : x) acc = svec_axpy(acc, a, mul_basis(i, j));
      L.set_col(j, std::move(acc));
    }
    return L;
  }
  Matrix right_mult(const SVec& x) const {
    Matrix R(F_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      SVec acc;
      for (const auto& [i, a] : x) acc = svec_axpy(acc, a, mul_basis(j, i));
      R.set_col(j, std::move(acc));
    }
    return R;
  }

  std::string vec_str(const SVec& v) const {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [i, a] : v) {
      if (!out.empty()) out += " + ";
      std::string cs = a.str();
      if (cs == "1")
        out += labels_[static_cast<std::size_t>(i)];
      else
        out += "(" + cs + ")*" + labels_[static_cast<std::size_t>(i)];
    }
    return out;
  }

  // full exhaustive check of associativity and the two-sided unit; throws a
  // typed error naming a witness triple on failure
  void verify() const;

  Subspace full_space() const {
    Subspace s(F_, dim_);
    for (int i = 0; i < dim_; ++i) s.insert(svec_unit(F_, i));
    return s;
  }

  // {x : xb = bx for all b}
  Subspace center() const {
    Matrix C(F_, dim_ * dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
      SVec col;
      for (int j = 0; j < dim_; ++j) {
        SVec comm = svec_sub(mul_basis(i, j), mul_basis(j, i), F_);
        for (const auto& [k, a] : comm) col.emplace_back(j * dim_ + k, a);
      }
      C.set_col(i, std::move(col));
    }
    return rank_kernel_image(C).kernel;
  }

  // Jacobson radical.  Quiver-born: the span of positive-length basis paths.
  // Structure constants over a characteristic-zero field: the kernel of the
  // regular trace form (x,y) -> tr(L_{xy}).  Otherwise unavailable.
  Subspace radical() const {
    if (quiver_born_) {
      Subspace s(F_, dim_);
      for (int k = 0; k < dim_; ++k)
        if (paths_[static_cast<std::size_t>(k)].length() >= 1)
          s.insert(svec_unit(F_, k));
      return s;
    }
    if (F_->characteristic() != 0)
      throw hhbv_error("radical-unavailable",
                       "radical computation needs a quiver presentation or "
                       "characteristic zero");
    std::vector<FieldElement> tr;  // tr(L_{b_k})
    for (int k = 0; k < dim_; ++k) {
      FieldElement t = F_->zero();
      for (int m = 0; m < dim_; ++m) t += svec_get(mul_basis(k, m), m, F_);
      tr.push_back(t);
    }
    Matrix G(F_, dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        FieldElement g = F_->zero();
        for (const auto& [k, a] : mul_basis(i, j))
          g += a * tr[static_cast<std::size_t>(k)];
        G.set(i, j, g);
      }
    return rank_kernel_image(G).kernel;
  }

  // {x : x * J = 0}, the socle of the right regular module
  Subspace socle_right() const {
    Subspace J = radical();
    const auto& jb = J.basis();
    if (jb.empty()) return full_space();
    Matrix S(F_, dim_ * static_cast<int>(jb.size()), dim_);
    for (int i = 0; i < dim_; ++i) {
      SVec col;
      for (std::size_t t = 0; t < jb.size(); ++t) {
        SVec prod = mul(svec_unit(F_, i), jb[t]);
        for (const auto& [k, a] : prod)
          col.emplace_back(static_cast<int>(t) * dim_ + k, a);
      }
      S.set_col(i, std::move(col));
    }
    return rank_kernel_image(S).kernel;
  }

  // representatives of A / k.1, used as the reduced slots of bar complexes
  std::vector<SVec> complement_of_unit() const {
    Subspace one(F_, dim_, {unit_});
    return quotient_representatives(full_space(), one);
  }

  // same algebra with scalars pushed through an embedding into E
  Algebra base_change(FieldRef E) const {
    auto emb = field_embedding(F_, E);
    auto map_vec = [&](const SVec& v) {
      SVec w;
      for (const auto& [i, a] : v) w.emplace_back(i, emb(a));
      return w;
    };
    Algebra B;
    B.F_ = E;
    B.dim_ = dim_;
    B.labels_ = labels_;
    B.unit_ = map_vec(unit_);
    B.table_.resize(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
      B.table_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(dim_));
      for (int j = 0; j < dim_; ++j)
        B.table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            map_vec(mul_basis(i, j));
    }
    B.quiver_born_ = quiver_born_;
    B.paths_ = paths_;
    B.vertex_names_ = vertex_names_;
    B.arrow_names_ = arrow_names_;
    B.verify();
    return B;
  }

  bool quiver_born() const { return quiver_born_; }
  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& arrow_names() const { return arrow_names_; }
  const PathInfo& basis_path(int k) const {
    if (!quiver_born_)
      throw hhbv_error("no-quiver", "basis paths need a quiver presentation");
    return paths_[static_cast<std::size_t>(k)];
  }

 private:
  Algebra() = default;

  FieldRef F_ = nullptr;
  int dim_ = 0;
  std::vector<std::string> labels_;
  SVec unit_;
  std::vector<std::vector<SVec>> table_;  // table_[i][j] = b_i * b_j

  bool quiver_born_ = false;
  std::vector<PathInfo> paths_;  // per basis vector, quiver-born only
  std::vector<std::string> vertex_names_;
  std::vector<std::string> arrow_names_;
};

inline void Algebra::verify() const {
  for (int i = 0; i < dim_; ++i) {
    SVec bi = svec_unit(F_, i);
    if (mul(unit_, bi) != bi || mul(bi, unit_) != bi)
      throw hhbv_error("unit-fails",
                       "unit fails on basis element " +
                           labels_[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const SVec& ij = mul_basis(i, j);
      for (int k = 0; k < dim_; ++k) {
        SVec left = mul(ij, svec_unit(F_, k));
        SVec right = mul(svec_unit(F_, i), mul_basis(j, k));
        if (left != right)
          throw hhbv_error(
              "not-associative",
              "associativity fails at (" + labels_[static_cast<std::size_t>(i)] +
                  ", " + labels_[static_cast<std::size_t>(j)] + ", " +
                  labels_[static_cast<std::size_t>(k)] + "): (ab)c = " +
                  vec_str(left) + " but a(bc) = " + vec_str(right));
      }
    }
}

inline Algebra Algebra::from_structure_constants(
    FieldRef F, std::vector<std::string> labels, SVec unit,
    std::vector<std::vector<SVec>> table) {
  const int d = static_cast<int>(labels.size());
  if (d == 0) throw hhbv_error("bad-algebra", "empty basis");
  {
    std::map<std::string, int> seen;
    for (int i = 0; i < d; ++i) {
      const auto& l = labels[static_cast<std::size_t>(i)];
      if (l.empty()) throw hhbv_error("bad-algebra", "empty basis label");
      if (!seen.emplace(l, i).second)
        throw hhbv_error("bad-algebra", "duplicate basis label: " + l);
    }
  }
  if (static_cast<int>(table.size()) != d)
    throw hhbv_error("bad-algebra", "structure constant table is not d x d");
  auto check_vec = [&](const SVec& v) {
    int prev = -1;
    for (const auto& [i, a] : v) {
      if (i <= prev || i >= d)
        throw hhbv_error("bad-algebra", "coordinate index out of range");
      if (a.field() != F) throw hhbv_error("bad-algebra", "scalar from wrong field");
      if (a.is_zero()) throw hhbv_error("bad-algebra", "explicit zero coordinate");
      prev = i;
    }
  };
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != d)
      throw hhbv_error("bad-algebra", "structure constant table is not d x d");
    for (const auto& v : row) check_vec(v);
  }
  check_vec(unit);
  if (unit.empty()) throw hhbv_error("bad-algebra", "unit vector is zero");

  Algebra A;
  A.F_ = F;
  A.dim_ = d;
  A.labels_ = std::move(labels);
  A.unit_ = std::move(unit);
  A.table_ = std::move(table);
  A.verify();
  return A;
}

inline Algebra Algebra::from_quiver(const QuiverPresentation& pres) {
  FieldRef F = pres.field;
  if (!F) throw hhbv_error("bad-algebra", "quiver presentation has no field");
  const int L = pres.nilpotency_bound;
  if (L < 1) throw hhbv_error("quiver-invalid", "nilpotency bound must be >= 1");
  const int V = static_cast<int>(pres.vertices.size());
  if (V == 0) throw hhbv_error("quiver-invalid", "quiver has no vertices");

  std::map<std::string, int> vtx, arr;
  for (int v = 0; v < V; ++v) {
    const auto& n = pres.vertices[static_cast<std::size_t>(v)];
    if (n.empty()) throw hhbv_error("quiver-invalid", "empty vertex name");
    if (!vtx.emplace(n, v).second)
      throw hhbv_error("quiver-invalid", "duplicate vertex name: " + n);
  }
  const int NA = static_cast<int>(pres.arrows.size());
  for (int a = 0; a < NA; ++a) {
    const auto& ar = pres.arrows[static_cast<std::size_t>(a)];
    if (ar.name.empty()) throw hhbv_error("quiver-invalid", "empty arrow name");
    if (vtx.count(ar.name))
      throw hhbv_error("quiver-invalid",
                       "arrow name collides with a vertex: " + ar.name);
    if (!arr.emplace(ar.name, a).second)
      throw hhbv_error("quiver-invalid", "duplicate arrow name: " + ar.name);
    if (!vtx.count(ar.source) || !vtx.count(ar.target))
      throw hhbv_error("quiver-invalid",
                       "arrow " + ar.name + " has an unknown endpoint");
  }

  struct Path {
    int source, target;
    std::vector<int> arrows;
  };
  std::vector<Path> paths;
  std::map<std::vector<int>, int> by_arrows;  // positive length only
  for (int v = 0; v < V; ++v) paths.push_back({v, v, {}});
  std::vector<int> arrow_order(static_cast<std::size_t>(NA));
  for (int a = 0; a < NA; ++a) arrow_order[static_cast<std::size_t>(a)] = a;
  std::sort(arrow_order.begin(), arrow_order.end(), [&](int x, int y) {
    return pres.arrows[static_cast<std::size_t>(x)].name <
           pres.arrows[static_cast<std::size_t>(y)].name;
  });
  std::size_t layer_begin = 0, layer_end = paths.size();
  for (int len = 1; len <= L; ++len) {
    for (std::size_t p = layer_begin; p < layer_end; ++p) {
      for (int a : arrow_order) {
        const auto& ar = pres.arrows[static_cast<std::size_t>(a)];
        if (vtx[ar.source] != paths[p].target) continue;
        Path np{paths[p].source, vtx[ar.target], paths[p].arrows};
        np.arrows.push_back(a);
        by_arrows.emplace(np.arrows, static_cast<int>(paths.size()));
        paths.push_back(std::move(np));
        if (paths.size() > 200000)
          throw hhbv_error("too-large", "path count exceeds 200000; the quiver "
                                        "is too big for this nilpotency bound");
      }
    }
    layer_begin = layer_end;
    layer_end = paths.size();
  }
  const int P = static_cast<int>(paths.size());
  auto path_label = [&](const Path& p) {
    if (p.arrows.empty()) return pres.vertices[static_cast<std::size_t>(p.source)];
    std::string s;
    for (int a : p.arrows) {
      if (!s.empty()) s += "*";
      s += pres.arrows[static_cast<std::size_t>(a)].name;
    }
    return s;
  };

  // resolve relation terms to paths
  struct Term {
    FieldElement coeff;
    int path;
  };
  std::vector<std::vector<Term>> rels;
  for (const auto& rel : pres.relations) {
    std::vector<Term> terms;
    for (const auto& t : rel) {
      if (t.coeff.field() != F)
        throw hhbv_error("quiver-invalid", "relation scalar from wrong field");
      if (t.coeff.is_zero()) continue;
      if (t.path.empty())
        throw hhbv_error("quiver-invalid",
                         "relation term must be a path of length >= 1");
      std::vector<int> seq;
      for (const auto& name : t.path) {
        auto it = arr.find(name);
        if (it == arr.end())
          throw hhbv_error("quiver-invalid", "unknown arrow in relation: " + name);
        seq.push_back(it->second);
      }
      for (std::size_t i = 1; i < seq.size(); ++i) {
        const auto& prev = pres.arrows[static_cast<std::size_t>(seq[i - 1])];
        const auto& cur = pres.arrows[static_cast<std::size_t>(seq[i])];
        if (prev.target != cur.source)
          throw hhbv_error("quiver-invalid",
                           "relation term is not a composable path: " +
                               prev.name + " then " + cur.name);
      }
      if (static_cast<int>(seq.size()) > L)
        throw hhbv_error("quiver-invalid",
                         "relation term longer than the nilpotency bound");
      auto it = by_arrows.find(seq);
      if (it == by_arrows.end())
        throw hhbv_error("internal", "relation path not enumerated");
      terms.push_back({t.coeff, it->second});
    }
    if (!terms.empty()) rels.push_back(std::move(terms));
  }

  // span of p * r * q with every surviving term of length <= L
  Echelon ideal(F, P);
  for (const auto& rel : rels) {
    int minlen = L + 1;
    for (const auto& t : rel)
      minlen = std::min(minlen,
                        static_cast<int>(paths[static_cast<std::size_t>(t.path)]
                                             .arrows.size()));
    for (int pi = 0; pi < P; ++pi) {
      const Path& p = paths[static_cast<std::size_t>(pi)];
      int plen = static_cast<int>(p.arrows.size());
      if (plen + minlen > L) continue;
      for (int qi = 0; qi < P; ++qi) {
        const Path& q = paths[static_cast<std::size_t>(qi)];
        int qlen = static_cast<int>(q.arrows.size());
        if (plen + minlen + qlen > L) continue;
        std::map<int, FieldElement> acc;
        bool overlong = false;
        for (const auto& t : rel) {
          const Path& w = paths[static_cast<std::size_t>(t.path)];
          if (p.target != w.source || w.target != q.source) continue;
          int total = plen + static_cast<int>(w.arrows.size()) + qlen;
          if (total > L) {
            overlong = true;  // a surviving term sticks out past the bound
            break;
          }
          int idx;
          if (total == 0) {
            idx = p.source;
          } else {
            std::vector<int> seq = p.arrows;
            seq.insert(seq.end(), w.arrows.begin(), w.arrows.end());
            seq.insert(seq.end(), q.arrows.begin(), q.arrows.end());
            idx = by_arrows.at(seq);
          }
          auto [it, fresh] = acc.emplace(idx, t.coeff);
          if (!fresh) it->second += t.coeff;
        }
        if (overlong || acc.empty()) continue;
        SVec gen;
        for (auto& [i, c] : acc)
          if (!c.is_zero()) gen.emplace_back(i, c);
        if (!gen.empty()) ideal.insert(std::move(gen));
      }
    }
  }

  // the bound certifies the truncation only if every length-L path is spanned
  for (int i = 0; i < P; ++i) {
    if (static_cast<int>(paths[static_cast<std::size_t>(i)].arrows.size()) != L)
      continue;
    if (!ideal.contains(svec_unit(F, i)))
      throw hhbv_error("nilpotency-bound",
                       "nilpotency bound too small: path " +
                           path_label(paths[static_cast<std::size_t>(i)]) +
                           " of length " + std::to_string(L) +
                           " does not vanish");
  }

  // earliest independent paths represent the quotient; coordinates of any
  // path vector come from the tails of this relative echelon
  Echelon coords(F, P);
  for (const auto& row : ideal.rows()) coords.insert(row);
  std::vector<int> rep_path;
  for (int i = 0; i < P; ++i) {
    if (coords.insert(svec_unit(F, i),
                      svec_unit(F, static_cast<int>(rep_path.size()))))
      rep_path.push_back(i);
  }
  const int d = static_cast<int>(rep_path.size());
  auto to_basis = [&](const SVec& pathvec) {
    SVec tail;
    SVec rem = coords.reduce(pathvec, &tail);
    if (!rem.empty())
      throw hhbv_error("internal", "path vector escaped the spanning set");
    return svec_scale(tail, -F->one());
  };

  Algebra A;
  A.F_ = F;
  A.dim_ = d;
  A.quiver_born_ = true;
  A.vertex_names_ = pres.vertices;
  for (int a : arrow_order)
    A.arrow_names_.push_back(pres.arrows[static_cast<std::size_t>(a)].name);
  for (int k = 0; k < d; ++k) {
    const Path& p = paths[static_cast<std::size_t>(rep_path[static_cast<std::size_t>(k)])];
    PathInfo info;
    info.source = p.source;
    info.target = p.target;
    info.arrows = p.arrows;
    info.label = path_label(p);
    A.labels_.push_back(info.label);
    A.paths_.push_back(std::move(info));
  }
  {
    SVec one;
    for (int v = 0; v < V; ++v) one = svec_add(one, svec_unit(F, v), F);
    A.unit_ = to_basis(one);
  }
  A.table_.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    A.table_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(d));
    const Path& p =
        paths[static_cast<std::size_t>(rep_path[static_cast<std::size_t>(i)])];
    for (int j = 0; j < d; ++j) {
      const Path& q =
          paths[static_cast<std::size_t>(rep_path[static_cast<std::size_t>(j)])];
      if (p.target != q.source) continue;  // product is zero
      int total = static_cast<int>(p.arrows.size() + q.arrows.size());
      if (total > L) continue;  // lands in the vanishing power of the radical
      int idx;
      if (total == 0) {
        idx = p.source;
      } else {
        std::vector<int> seq = p.arrows;
        seq.insert(seq.end(), q.arrows.begin(), q.arrows.end());
        idx = by_arrows.at(seq);
      }
      A.table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          to_basis(svec_unit(F, idx));
    }
  }
  A.verify();
  return A;
}

}  // namespace hhbv
