#include <functional>
#include <map>
#include <stdexcept>

#include "verifier.hpp"

namespace kingmesh {

namespace {

// Closed forms at one order, plus the ring generators.
struct Forms {
  explicit Forms(int order)
      : N(order),
        one(USeries::one(order)),
        t(USeries::t(order)),
        ut(USeries::monomial(UPoly::u(), 1, order)),
        t2(USeries::monomial(1, 2, order)),
        u(UPoly::u()),
        A(build_base(BaseSeries::A, order)),
        B(build_base(BaseSeries::B, order)),
        C(build_base(BaseSeries::C, order)),
        Atu(build_base(BaseSeries::ATu, order)),
        Btu(build_base(BaseSeries::BTu, order)),
        Ctu(build_base(BaseSeries::CTu, order)),
        g(gf::sfp_avoiders(order)) {}

  USeries P(std::string_view nr) const { return build_P(nr, N); }
  USeries E(std::string_view nr) const { return build_E(nr, N); }

  int N;
  USeries one, t, ut, t2;
  UPoly u;
  USeries A, B, C, Atu, Btu, Ctu;
  USeries g;  // (1+t)A/(1+t+tA)
};

using Builder = std::function<EquationSides(int order)>;

struct Equation {
  std::string_view id;
  std::string_view subject;
  Builder build;
};

EquationSides at(int order, const std::function<EquationSides(const Forms&)>& f) { return f(Forms(order)); }

// Builds at order+1 and truncates, for equations that divide by t once.
EquationSides at_one_more(int order, const std::function<EquationSides(const Forms&)>& f) {
  const EquationSides s = f(Forms(order + 1));
  return {s.lhs.truncated(order), s.rhs.truncated(order)};
}

// E*(t,u) from E*(t,u) = t(E(ut,u) - E*(ut,u)), solved coefficient by coefficient.
USeries pattern16_star_from_recursion(const USeries& e) {
  USeries star(e.order());
  for (int n = 1; n <= e.order(); ++n) star.coeff(n) = (e.coeff(n - 1) - star.coeff(n - 1)).shifted(n - 1);
  return star;
}

// E*(t,u) = (t + ut(E-1))/(1+ut), from E* = t + ut(E-1-E*).
USeries star_from_first_last(const Forms& f, const USeries& e) {
  return (f.t + f.ut * (e - f.one)) / (f.one + f.ut);
}

const std::vector<Equation>& registry() {
  static const std::vector<Equation> eqs = {
      {"EQ_B", "B+tB=A", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.B + f.t * f.B, f.A}; }); }},
      {"EQ_C", "C=A-t-2t(B-1)+t^2(C-1)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.C, f.A - f.t - 2 * f.t * (f.B - f.one) + f.t2 * (f.C - f.one)}; }); }},
      {"EQ_SFP_AVOID", "P+tPB=A with P=A(t,0)", [](int N) { return at(N, [](const Forms& f) {
         const USeries P = ps_eval_u(f.Atu, 0);
         return EquationSides{P + f.t * P * f.B, f.A}; }); }},
      {"EQ_SFP_DIST", "P+utPB(t,u)=A(t,u)", [](int N) { return at(N, [](const Forms& f) {
         const USeries P = ps_eval_u(f.Atu, 0);
         return EquationSides{P + f.ut * P * f.Btu, f.Atu}; }); }},
      {"EQ_SFP_B", "B(t,u)+utB(t,u)=A(t,u)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.Btu + f.ut * f.Btu, f.Atu}; }); }},
      {"EQ_SFP_C", "C(t,u)=A(t,u)-ut-2ut(B(t,u)-1)+(ut)^2(C(t,u)-1)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.Ctu, f.Atu - f.ut - 2 * f.ut * (f.Btu - f.one) + f.ut * f.ut * (f.Ctu - f.one)}; }); }},

      {"EQ_P12_AVOID", "P=A-t(B-1)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.P("12"), f.A - f.t * (f.B - f.one)}; }); }},
      {"EQ_P12_DIST", "E=P+t(B(ut)-1)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.E("12"), f.P("12") + f.t * (ps_subst_ut(f.B, 1) - f.one)}; }); }},

      {"EQ_P13_AVOID", "P=A-t^2(C-1)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.P("13"), f.A - f.t2 * (f.C - f.one)}; }); }},
      {"EQ_P13_DIST", "E=P+ut^2(C-1)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.E("13"), f.P("13") + f.u * f.t2 * (f.C - f.one)}; }); }},

      {"EQ_P16_AVOID", "P=A-t(B-1)(1+t)A/(1+t+tA)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.P("16"), f.A - f.t * (f.B - f.one) * f.g}; }); }},
      {"EQ_P16_DIST", "E=P+(E*-t)(1+t)A/(1+t+tA), E* from its recursion", [](int N) { return at(N, [](const Forms& f) {
         const USeries E = f.E("16");
         const USeries star = pattern16_star_from_recursion(E);
         return EquationSides{E, f.P("16") + (star - f.t) * f.g}; }); }},
      {"EQ_P16_STAR", "E*=t(E(ut,u)-E*(ut,u)), E*=(1+t+tA)E/((1+t)A)-1", [](int N) { return at(N, [](const Forms& f) {
         const USeries E = f.E("16");
         const USeries star = E / f.g - f.one;
         return equations::pattern16_star(E, star); }); }},
      {"EQ_P16_ITER", "E=g(1+t+t h(ut) E(ut,u)), g=(1+t)A/(1+t+tA), h=(A-1-t)/((1+t)A)", [](int N) {
         return at(N, [](const Forms& f) {
           const USeries E = f.E("16");
           const USeries h = gf::pattern16_ratio(f.N);
           return EquationSides{E, f.g * (f.one + f.t + f.t * ps_subst_ut(h, 1) * ps_subst_ut(E, 1))}; }); }},

      {"EQ_P17_AVOID", "P=B+t(1+t)A/(1+t+tA)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.P("17"), f.B + f.t * f.g}; }); }},
      {"EQ_P17_DIST", "E=B+tB(t,u)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.E("17"), f.B + f.t * f.Btu}; }); }},

      {"EQ_P19_AVOID", "P=A-t(B-1)-t(A-1)(B-1)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.P("19"), f.A - f.t * (f.B - f.one) - f.t * (f.A - f.one) * (f.B - f.one)}; }); }},
      {"EQ_P19_DIST", "E=P+ut(B-1)+ut(A-1)(B-1)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.E("19"),
                              f.P("19") + f.ut * (f.B - f.one) + f.ut * (f.A - f.one) * (f.B - f.one)}; }); }},

      {"EQ_P20_AVOID", "P=A-(A-B-t)(A-B)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.P("20"), f.A - (f.A - f.B - f.t) * (f.A - f.B)}; }); }},
      {"EQ_P20_DIST", "E=P+u(A-B-t)(A-B)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.E("20"), f.P("20") + f.u * (f.A - f.B - f.t) * (f.A - f.B)}; }); }},

      {"EQ_P22_AVOID", "P=A-2t(A-B-t)A-(A-B-t)^2A", [](int N) { return at(N, [](const Forms& f) {
         const USeries d = f.A - f.B - f.t;
         return EquationSides{f.P("22"), f.A - 2 * f.t * d * f.A - d * d * f.A}; }); }},
      {"EQ_P22_DIST", "E=P+2ut(A-B-t)A+u(A-B-t)^2A", [](int N) { return at(N, [](const Forms& f) {
         const USeries d = f.A - f.B - f.t;
         return EquationSides{f.E("22"), f.P("22") + 2 * f.ut * d * f.A + f.u * d * d * f.A}; }); }},

      {"EQ_P27_AVOID", "P=A-(t^2B^2(1+t)A/(1+t+tA)-t^2B)", [](int N) { return at(N, [](const Forms& f) {
         return EquationSides{f.P("27"), f.A - (f.t2 * f.B * f.B * f.g - f.t2 * f.B)}; }); }},
      {"EQ_P27_DIST", "E=P+ut^2(A/(1+t))((1+t)A/(1+t+tA))B(t,u)-ut^2B", [](int N) { return at(N, [](const Forms& f) {
         const USeries occ = f.u * f.t2 * (f.A / (f.one + f.t)) * f.g * f.Btu - f.u * f.t2 * f.B;
         return EquationSides{f.E("27"), f.P("27") + occ}; }); }},

      {"EQ_P28_AVOID", "P=A-t^2PA(C-1)", [](int N) { return at(N, [](const Forms& f) {
         const USeries P = f.P("28");
         return EquationSides{P, f.A - f.t2 * P * f.A * (f.C - f.one)}; }); }},
      {"EQ_P28_DIST", "E=P+ut^2P(C-1)E", [](int N) { return at(N, [](const Forms& f) {
         const USeries P = f.P("28");
         const USeries E = f.E("28");
         return EquationSides{E, P + f.u * f.t2 * P * (f.C - f.one) * E}; }); }},

      {"EQ_P33_AVOID", "P=A-t^2((1+t)A/(1+t+tA))B(C(t,0)-1)", [](int N) { return at(N, [](const Forms& f) {
         const USeries c0 = ps_eval_u(f.Ctu, 0);
         return EquationSides{f.P("33"), f.A - f.t2 * f.g * f.B * (c0 - f.one)}; }); }},
      {"EQ_P33_DIST", "E=P+ut^2((1+t)A/(1+t+tA))B(t,u)(C(t,0)-1)", [](int N) { return at(N, [](const Forms& f) {
         const USeries c0 = ps_eval_u(f.Ctu, 0);
         return EquationSides{f.E("33"), f.P("33") + f.u * f.t2 * f.g * f.Btu * (c0 - f.one)}; }); }},

      {"EQ_P55_AVOID", "P+(B-1)(P-1)(t+t^2)=A", [](int N) { return at(N, [](const Forms& f) {
         const USeries P = f.P("55");
         return EquationSides{P + (f.B - f.one) * (P - f.one) * (f.t + f.t2), f.A}; }); }},
      {"EQ_P55_DIST", "E=P+u(E*-1)(P-1)(t+t^2), E*=E-tE*", [](int N) { return at(N, [](const Forms& f) {
         const USeries P = f.P("55");
         const USeries E = f.E("55");
         const USeries star = E / (f.one + f.t);
         return EquationSides{E, P + f.u * (star - f.one) * (P - f.one) * (f.t + f.t2)}; }); }},

      {"EQ_P63_AVOID", "P+(P-1)(B-1)(1+t)=A", [](int N) { return at(N, [](const Forms& f) {
         const USeries P = f.P("63");
         return EquationSides{P + (P - f.one) * (f.B - f.one) * (f.one + f.t), f.A}; }); }},
      {"EQ_P63_DIST", "E=P+(E*-t)(P-1)/t+(E*-t)(P-1), E*=t+ut(E-1-E*)", [](int N) { return at_one_more(N, [](const Forms& f) {
         const USeries P = f.P("63");
         const USeries E = f.E("63");
         const USeries glued = (star_from_first_last(f, E) - f.t) * (P - f.one);
         const int n = f.N - 1;
         return EquationSides{E.truncated(n), P.truncated(n) + glued.shifted_down(1) + glued.truncated(n)}; }); }},
      {"EQ_P63_STAR", "E*=t+ut(E-1-E*), E* from the distribution equation", [](int N) { return at_one_more(N, [](const Forms& f) {
         const USeries P = f.P("63");
         const USeries E = f.E("63");
         // (E*-t)(P-1)(1+t)/t = E-P, both E-P and P-1 are multiples of t.
         const int n = f.N - 1;
         const USeries q = (E - P).shifted_down(1) / ((P - f.one).shifted_down(1) * (USeries::one(n) + USeries::t(n)));
         const USeries star = USeries::t(n) + q.shifted_up(1);
         const Forms g(n);
         return EquationSides{star, g.t + g.ut * (E.truncated(n) - g.one - star)}; }); }},

      {"EQ_P64_AVOID", "P=A-((P-1)(A-1)-t^2B)", [](int N) { return at(N, [](const Forms& f) {
         const USeries P = f.P("64");
         return EquationSides{P, f.A - ((P - f.one) * (f.A - f.one) - f.t2 * f.B)}; }); }},
      {"EQ_P64_DIST", "E=P+u(P-1)(E-1)-utE*, E*=t+ut(E-E*-1)", [](int N) { return at(N, [](const Forms& f) {
         const USeries P = f.P("64");
         const USeries E = f.E("64");
         const USeries star = star_from_first_last(f, E);
         return EquationSides{E, P + f.u * (P - f.one) * (E - f.one) - f.ut * star}; }); }},
      {"EQ_P64_STAR", "ut*[E*=t+ut(E-E*-1)] with utE*=P+u(P-1)(E-1)-E", [](int N) { return at(N, [](const Forms& f) {
         const USeries P = f.P("64");
         const USeries E = f.E("64");
         const USeries ut_star = P + f.u * (P - f.one) * (E - f.one) - E;
         const USeries uutt = USeries::monomial(UPoly::monomial(1, 2), 2, f.N);
         return EquationSides{ut_star, f.u * f.t2 + uutt * (E - f.one) - f.ut * ut_star}; }); }},
  };
  return eqs;
}

const std::map<std::string_view, std::string_view>& aliases() {
  static const std::map<std::string_view, std::string_view> m = {
      {"EQ_P28", "EQ_P28_DIST"},
      {"EQ_P55", "EQ_P55_AVOID"},
      {"EQ_P63", "EQ_P63_AVOID"},
  };
  return m;
}

const Equation& lookup(std::string_view id) {
  const std::string_view canonical = canonical_equation_id(id);
  for (const auto& e : registry())
    if (e.id == canonical) return e;
  throw std::invalid_argument("unregistered equation '" + std::string(id) + "'");
}

}  // namespace

std::span<const std::string_view> equation_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> v;
    for (const auto& e : registry()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string_view canonical_equation_id(std::string_view id) {
  if (auto it = aliases().find(id); it != aliases().end()) return it->second;
  for (const auto& e : registry())
    if (e.id == id) return e.id;
  throw std::invalid_argument("unregistered equation '" + std::string(id) + "'");
}

std::string_view equation_subject(std::string_view id) { return lookup(id).subject; }

EquationSides equation_sides(std::string_view id, int order) {
  if (order < 1) throw std::invalid_argument("equation checks need order >= 1");
  return lookup(id).build(order);
}

namespace equations {

EquationSides pattern16_star(const USeries& e, const USeries& e_star) {
  const USeries inner = ps_subst_ut(e, 1) - ps_subst_ut(e_star, 1);
  return {e_star, inner.shifted_up(1)};
}

}  // namespace equations

CheckReport residual_report(std::string id, std::string subject, const EquationSides& sides) {
  CheckReport r{std::move(id), std::move(subject), CheckStatus::Pass, std::nullopt, {}};
  if (sides.lhs.order() != sides.rhs.order()) throw SeriesError("residual_report: order mismatch");
  const int n = first_difference(sides.lhs, sides.rhs);
  if (n >= 0) {
    r.status = CheckStatus::Fail;
    r.witness = Witness{n, sides.lhs.coeff(n), sides.rhs.coeff(n)};
    r.detail = "nonzero residual at t^" + std::to_string(n);
  } else {
    r.detail = "zero residual through t^" + std::to_string(sides.lhs.order());
  }
  return r;
}

}  // namespace kingmesh
