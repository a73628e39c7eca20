#include <algorithm>
#include <sstream>

#include "evoalg/classify.hpp"

namespace evoalg {

namespace {

using P = const Tuple&;

struct Row {
  const char* id;
  std::vector<std::string> params;
  std::vector<const char*> rows; // whitespace-separated cells: 0, 1 or a parameter name
  std::optional<Constraint> constraint;
  OrbitRule rule;
};

Constraint poly(const char* text, std::function<Scalar(const Tuple&)> f) { return Constraint{text, std::move(f)}; }

Scalar one_of(P v) { return v[0].field().one(); }

FamilySpec build(const Row& r) {
  FamilySpec f;
  f.id = r.id;
  f.dim = r.rows.size();
  f.param_names = r.params;
  f.constraint = r.constraint;
  f.rule = r.rule;
  f.graph = DiGraph(f.dim);
  for (std::size_t row = 0; row < f.dim; ++row) {
    std::istringstream in(r.rows[row]);
    std::string tok;
    std::size_t col = 0;
    while (in >> tok) {
      Cell c;
      if (tok == "0") {
        c.kind = Cell::Kind::zero;
      } else if (tok == "1") {
        c.kind = Cell::Kind::one;
      } else {
        auto it = std::find(f.param_names.begin(), f.param_names.end(), tok);
        if (it == f.param_names.end()) throw Error("family table: unknown parameter " + tok);
        c.kind = Cell::Kind::param;
        c.param = static_cast<std::size_t>(it - f.param_names.begin());
      }
      if (c.kind != Cell::Kind::zero) {
        ++f.e;
        if (row == col) ++f.l;
        // column col holds e_col^2, so a nonzero (row, col) is the edge col -> row
        f.graph.add_edge(col, row);
      }
      f.pattern.push_back(c);
      ++col;
    }
    if (col != f.dim) throw Error(std::string("family table: ragged row in ") + r.id);
  }
  return f;
}

std::vector<FamilySpec> build_all() {
  const std::vector<std::string> L{"lambda"}, LM{"lambda", "mu"}, LMD{"lambda", "mu", "delta"},
      LMDN{"lambda", "mu", "delta", "nu"}, LMDNX{"lambda", "mu", "delta", "nu", "xi"},
      LMDNXG{"lambda", "mu", "delta", "nu", "xi", "gamma"};
  const OrbitRule eq = EqualityRule{};
  auto group = [](std::vector<ExponentMatrix> gens, std::size_t order) -> OrbitRule {
    return MatrixGroupRule{std::move(gens), order};
  };
  // parameter order in every tuple below is the order of the name list
  const std::vector<Row> rows = {
      // dimension 2
      {"II^{0,2}", L, {"0 lambda", "1 0"}, std::nullopt, InductiveLimitRule{2, 3}},
      {"II^{1,3}", L, {"1 lambda", "1 0"}, std::nullopt, eq},
      {"II^{2,4}", LM, {"1 lambda", "mu 1"},
       poly("lambda*mu - 1", [](P v) { return v[0] * v[1] - one_of(v); }),
       group({matrices::swap2()}, 2)},

      // dimension 3, no loops
      {"III^{0,3}", L, {"0 0 lambda", "1 0 0", "0 1 0"}, std::nullopt, InductiveLimitRule{2, 7}},
      {"III^{0,4}", LM, {"0 lambda mu", "1 0 0", "0 1 0"}, std::nullopt, ScalingRule{{3, 7}}},
      {"III^{0,5}", {"lambda", "mu", "gamma"}, {"0 lambda mu", "1 0 gamma", "0 1 0"}, std::nullopt,
       ScalingRule{{3, 7, 6}}},
      {"III^{0,6}", {"lambda", "mu", "gamma", "delta"}, {"0 lambda mu", "1 0 gamma", "delta 1 0"},
       poly("mu + lambda*delta*gamma", [](P v) { return v[1] + v[0] * v[3] * v[2]; }),
       ScalingRule{{3, 7, 6, -2}}},

      // one loop
      {"III^{1,4}", L, {"1 0 lambda", "1 0 0", "0 1 0"}, std::nullopt, eq},
      {"_1III^{1,5}", LM, {"1 mu lambda", "1 0 0", "0 1 0"}, std::nullopt, eq},
      {"_2III^{1,5}", LM, {"1 0 lambda", "1 0 0", "mu 1 0"}, std::nullopt, eq},
      {"_3III^{1,5}", LM, {"1 0 lambda", "1 0 mu", "0 1 0"},
       poly("lambda - mu", [](P v) { return v[0] - v[1]; }), eq},
      {"_4III^{1,5}", LM, {"1 lambda 0", "1 0 mu", "0 1 0"}, std::nullopt, eq},
      {"_1III^{1,6}", LMD, {"1 lambda mu", "1 0 delta", "0 1 0"},
       poly("mu - delta", [](P v) { return v[1] - v[2]; }), eq},
      {"_2III^{1,6}", LMD, {"1 lambda 0", "1 0 mu", "delta 1 0"},
       poly("lambda*delta - 1", [](P v) { return v[0] * v[2] - one_of(v); }), eq},
      {"_3III^{1,6}", LMD, {"1 mu delta", "lambda 0 1", "1 0 0"}, std::nullopt, eq},
      {"III^{1,7}", LMDN, {"1 lambda mu", "1 0 delta", "nu 1 0"},
       poly("mu - delta + lambda*delta*nu", [](P v) { return v[1] - v[2] + v[0] * v[2] * v[3]; }),
       group({matrices::m1()}, 2)},

      // two loops
      {"III^{2,5}", LM, {"1 0 mu", "lambda 1 0", "0 1 0"}, std::nullopt, eq},
      {"_1III^{2,6}", LMD, {"1 0 delta", "lambda 1 0", "mu 1 0"},
       poly("lambda - mu", [](P v) { return v[0] - v[1]; }), eq},
      {"_2III^{2,6}", LMD, {"1 mu delta", "lambda 1 0", "0 1 0"}, std::nullopt, eq},
      {"_3III^{2,6}", LMD, {"1 mu 0", "lambda 1 delta", "0 1 0"}, std::nullopt, eq},
      {"_4III^{2,6}", LMD, {"1 0 mu", "0 1 delta", "lambda 1 0"},
       poly("lambda*mu + delta", [](P v) { return v[0] * v[1] + v[2]; }), group({matrices::m2()}, 2)},
      {"_1III^{2,7}", LMDN, {"1 mu delta", "lambda 1 nu", "0 1 0"},
       poly("lambda*delta - nu", [](P v) { return v[0] * v[2] - v[3]; }), eq},
      {"_2III^{2,7}", LMDN, {"1 delta 0", "lambda 1 nu", "mu 1 0"},
       poly("mu*delta*nu - nu", [](P v) { return v[1] * v[2] * v[3] - v[3]; }), eq},
      {"_3III^{2,7}", LMDN, {"1 0 delta", "lambda 1 nu", "mu 1 0"},
       poly("delta*(lambda - mu) - nu", [](P v) { return v[2] * (v[0] - v[1]) - v[3]; }), eq},
      {"III^{2,8}", LMDNX, {"1 delta nu", "lambda 1 xi", "mu 1 0"},
       poly("xi*(delta*mu - 1) - nu*(mu - lambda)",
            [](P v) { return v[4] * (v[2] * v[1] - one_of(v)) - v[3] * (v[1] - v[0]); }),
       group({matrices::m3()}, 2)},

      // three loops
      {"III^{3,6}", LMD, {"1 0 mu", "lambda 1 0", "0 1 delta"},
       poly("lambda*mu + delta", [](P v) { return v[0] * v[1] + v[2]; }), group({matrices::m4()}, 3)},
      {"_1III^{3,7}", LMDN, {"1 0 delta", "lambda 1 0", "mu 1 nu"},
       poly("nu + delta*(lambda - mu)", [](P v) { return v[3] + v[2] * (v[0] - v[1]); }), eq},
      {"_2III^{3,7}", LMDN, {"1 mu 0", "lambda 1 delta", "0 1 nu"},
       poly("lambda*mu*nu - nu + delta", [](P v) { return v[0] * v[1] * v[3] - v[3] + v[2]; }),
       group({matrices::m5()}, 2)},
      {"III^{3,8}", LMDNX, {"1 delta 0", "lambda 1 xi", "mu 1 nu"},
       poly("xi*(delta*mu - 1) - nu*(delta*lambda - 1)",
            [](P v) { return v[4] * (v[2] * v[1] - one_of(v)) - v[3] * (v[2] * v[0] - one_of(v)); }),
       eq},
      {"III^{3,9}", LMDNXG, {"1 delta nu", "lambda 1 xi", "mu 1 gamma"},
       poly("xi*(delta*mu - 1) + nu*(lambda - mu) - gamma*(delta*lambda - 1)",
            [](P v) {
              return v[4] * (v[2] * v[1] - one_of(v)) + v[3] * (v[0] - v[1]) -
                     v[5] * (v[2] * v[0] - one_of(v));
            }),
       group({matrices::m6(), matrices::m7()}, 6)},
  };
  std::vector<FamilySpec> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(build(r));
  return out;
}

} // namespace

const std::vector<FamilySpec>& families() {
  static const std::vector<FamilySpec> table = [] {
    auto t = build_all();
    // classification relies on each canonical graph naming one family
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j)
        if (t[i].dim == t[j].dim && graphs_isomorphic(t[i].graph, t[j].graph))
          throw Error("family table: " + t[i].id + " and " + t[j].id + " have isomorphic graphs");
    return t;
  }();
  return table;
}

const FamilySpec& family(std::string_view id) {
  for (const auto& f : families())
    if (f.id == id) return f;
  throw DomainError("unknown family '" + std::string(id) + "'");
}

} // namespace evoalg
