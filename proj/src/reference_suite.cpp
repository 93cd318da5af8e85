#include "convcode/reference_suite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "convcode/code.hpp"
#include "convcode/distances.hpp"
#include "convcode/equivalence.hpp"
#include "convcode/examples.hpp"
#include "convcode/wam.hpp"

namespace convcode {

namespace {

using Table = std::vector<std::vector<std::string>>;
using IntTable = std::vector<std::vector<long>>;  // -1 stands for infinity

class Suite {
 public:
  Suite(std::string example, std::filesystem::path dir, const Budgets& budgets, std::vector<SuiteCheck>& out)
      : example_(std::move(example)), dir_(std::move(dir)), budgets_(budgets), out_(out) {}

  PolyMatrix matrix(const std::string& name) const { return example_matrix(name, dir_); }
  ConvCode code(const std::string& name) const { return ConvCode::from_encoder(matrix(name)); }
  const Budgets& budgets() const { return budgets_; }

  void check(int criterion, const std::string& description, bool passed, const std::string& detail = {}) {
    out_.push_back({example_, criterion, description, passed, passed ? std::string{} : detail});
  }

  /// Runs `body`; an exception counts as a failed check.
  void guarded(int criterion, const std::string& description, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(criterion, description, false, std::string("exception: ") + e.what());
    }
  }

 private:
  std::string example_;
  std::filesystem::path dir_;
  Budgets budgets_;
  std::vector<SuiteCheck>& out_;
};

Table render(const WAM& w) {
  Table t(w.size(), std::vector<std::string>(w.size()));
  for (std::size_t x = 0; x < w.size(); ++x)
    for (std::size_t y = 0; y < w.size(); ++y) t[x][y] = w(x, y).to_string();
  return t;
}

std::string render(const Table& t) {
  std::ostringstream os;
  for (const auto& row : t) {
    os << "[";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << row[i];
    os << "]";
  }
  return os.str();
}

IntTable to_ints(const DelayMatrix& m) {
  IntTable out;
  for (const auto& row : m) {
    out.emplace_back();
    for (const auto& v : row) out.back().push_back(v.is_finite() ? static_cast<long>(v.value()) : -1);
  }
  return out;
}

std::string render(const IntTable& t) {
  std::ostringstream os;
  for (const auto& row : t) {
    os << "[";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << (row[i] < 0 ? "inf" : std::to_string(row[i]));
    os << "]";
  }
  return os.str();
}

std::string render(const DistanceProfile& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.values.size(); ++i) os << (i ? " " : "") << p.values[i];
  return os.str();
}

void check_wam(Suite& s, int criterion, const std::string& label, const WAM& w, const Table& expected) {
  const Table got = render(w);
  s.check(criterion, label, got == expected, render(got));
}

void check_delays(Suite& s, int criterion, const std::string& label, const DelayMatrix& m, const IntTable& expected) {
  const IntTable got = to_ints(m);
  s.check(criterion, label, got == expected, render(got));
}

void check_profile(Suite& s, int criterion, const std::string& label, const DistanceProfile& p,
                   const std::function<long(std::size_t)>& expected) {
  bool ok = true;
  for (std::size_t j = p.jmin; j <= p.jmax(); ++j) {
    const long e = expected(j);
    const InfInt v = p.at(j);
    ok = ok && (e < 0 ? v.is_inf() : v == InfInt{static_cast<std::uint64_t>(e)});
  }
  s.check(criterion, label, ok, render(p));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// G = (1, z, z, 1+z) and G' = (1, 1, 1, 1+z) over GF(2).
void example_3_1(Suite& s) {
  const ConvCode c = s.code("exa3.1_G");
  const ConvCode cp = s.code("exa3.1_Gp");
  const WAM w = wam(c.encoder(), s.budgets());
  const WAM wp = wam(cp.encoder(), s.budgets());
  check_wam(s, 1, "WAM of G is ((1, W^2), (W^3, W^3))", w, {{"1", "W^2"}, {"W^3", "W^3"}});
  check_wam(s, 1, "WAM of G' is ((1, W^4), (W, W^3))", wp, {{"1", "W^4"}, {"W", "W^3"}});

  const std::size_t jmax = 10;
  const auto dc = column_distances(w, jmax);
  const auto dcp = column_distances(wp, jmax);
  s.check(2, "d^c_0 = 2 for G and 4 for G'", dc.at(0) == InfInt{2} && dcp.at(0) == InfInt{4},
          render(dc) + " / " + render(dcp));
  check_profile(s, 2, "d^c_j = 5 for G, j = 1..10", dc, [](std::size_t j) { return j == 0 ? 2L : 5L; });
  check_profile(s, 2, "d^c_j = 5 for G', j = 1..10", dcp, [](std::size_t j) { return j == 0 ? 4L : 5L; });
  const auto d = free_distance(w, s.budgets());
  const auto dp = free_distance(wp, s.budgets());
  s.check(2, "dist = 5 for both codes", d == 5 && dp == 5, std::to_string(d) + " / " + std::to_string(dp));

  const auto m = tilde_delay_powers(w, jmax);
  const auto mp = tilde_delay_powers(wp, jmax);
  check_delays(s, 2, "M_1 = ((inf, 2), (3, 3))", m[0], {{-1, 2}, {3, 3}});
  check_delays(s, 2, "M'_1 = ((inf, 4), (1, 3))", mp[0], {{-1, 4}, {1, 3}});
  bool closed = true;
  std::string bad;
  for (std::size_t j = 2; j <= jmax; ++j) {
    IntTable e, ep;
    if (j % 2 == 0) {
      const long h = 5 * static_cast<long>(j) / 2;
      e = {{h, h}, {h + 1, h}};
      ep = {{h, h + 2}, {h - 1, h}};
    } else {
      const long h = 5 * static_cast<long>(j - 1) / 2;
      e = {{h + 3, h + 2}, {h + 3, h + 3}};
      ep = {{h + 3, h + 4}, {h + 1, h + 3}};
    }
    if (to_ints(m[j - 1]) != e || to_ints(mp[j - 1]) != ep) {
      closed = false;
      bad += "j=" + std::to_string(j) + ": " + render(to_ints(m[j - 1])) + " / " + render(to_ints(mp[j - 1])) + "; ";
    }
  }
  s.check(2, "closed forms of M_j and M'_j for j = 2..10", closed, bad);

  const auto ac = active_distances(w, DistanceFamily::active_column, jmax);
  const auto acp = active_distances(wp, DistanceFamily::active_column, jmax);
  const auto as = active_distances(w, DistanceFamily::active_segment, jmax);
  const auto asp = active_distances(wp, DistanceFamily::active_segment, jmax);
  bool even_differ = true, seg_differ = true;
  for (std::size_t j = 0; j <= jmax; ++j) {
    if (j % 2 == 0) even_differ = even_differ && ac.at(j) != acp.at(j);
    seg_differ = seg_differ && as.at(j) != asp.at(j);
  }
  s.check(2, "active column distances differ for every even j <= 10", even_differ, render(ac) + " / " + render(acp));
  s.check(2, "active segment distances differ for every j <= 10", seg_differ, render(as) + " / " + render(asp));
  s.check(2, "same weight enumerator (Omega_1..Omega_8)", omega_series(w, 8) == omega_series(wp, 8));
}

const Table kLambda32 = {{"1+W", "W^3+W^4", "W^5+W^6", "W^2+W^3"},
                         {"W+W^2", "W^4+W^5", "W^4+W^5", "W+W^2"},
                         {"W+W^2", "W^4+W^5", "W^6+W^7", "W^3+W^4"},
                         {"W^2+W^3", "W^5+W^6", "W^5+W^6", "W^2+W^3"}};
const Table kLambda32p = {{"1+W", "W^2+W^3", "W^5+W^6", "W^3+W^4"},
                          {"W^2+W^3", "W^4+W^5", "W^5+W^6", "W^3+W^4"},
                          {"W+W^2", "W^3+W^4", "W^6+W^7", "W^4+W^5"},
                          {"W+W^2", "W^3+W^4", "W^4+W^5", "W^2+W^3"}};

void example_3_2(Suite& s) {
  const ConvCode c = s.code("exa3.2_G");
  const ConvCode cp = s.code("exa3.2_Gp");
  const WAM w = wam(s.matrix("exa3.2_G"), s.budgets());
  const WAM wp = wam(s.matrix("exa3.2_Gp"), s.budgets());
  check_wam(s, 1, "WAM of G equals the printed 4x4 matrix", w, kLambda32);
  check_wam(s, 1, "WAM of G' equals the printed 4x4 matrix", wp, kLambda32p);
  check_profile(s, 2, "all column distances are 1 (j <= 8)", column_distances(w, 8), [](std::size_t) { return 1L; });
  s.check(2, "dist = 1 for both codes", free_distance(w) == 1 && free_distance(wp) == 1);

  const bool strong = code_strongly_isometric(c, cp, s.budgets()).has_value();
  s.check(4, "strongly isometric: yes", strong, yes_no(strong));
  const bool same_wam = wam_equivalent(w, wp, s.budgets()).has_value();
  s.check(4, "same WAM: no", !same_wam, yes_no(same_wam));
  const bool me = code_me(c, cp, s.budgets()).has_value();
  s.check(4, "ME: no", !me, yes_no(me));
  s.check(4, "same weight enumerator (Omega_1..Omega_8)", omega_series(w, 8) == omega_series(wp, 8));
}

void appendix(Suite& s) {
  const WAM w = wam(s.matrix("exa3.2_G"), s.budgets());
  const WAM wp = wam(s.matrix("exa3.2_Gp"), s.budgets());
  const std::size_t jmax = 10;
  const auto m = tilde_delay_powers(w, jmax);
  const auto mp = tilde_delay_powers(wp, jmax);
  check_delays(s, 2, "M_1", m[0], {{-1, 3, 5, 2}, {1, 4, 4, 1}, {1, 4, 6, 3}, {2, 5, 5, 2}});
  check_delays(s, 2, "M_2", m[1], {{4, 7, 7, 4}, {3, 4, 6, 3}, {5, 4, 6, 3}, {4, 5, 7, 4}});
  check_delays(s, 2, "M_3", m[2], {{6, 7, 9, 6}, {5, 6, 8, 5}, {5, 8, 8, 5}, {6, 7, 9, 6}});
  check_delays(s, 2, "M'_1", mp[0], {{-1, 2, 5, 3}, {2, 4, 5, 3}, {1, 3, 6, 4}, {1, 3, 4, 2}});
  check_delays(s, 2, "M'_2", mp[1], {{4, 6, 7, 5}, {4, 4, 7, 5}, {5, 3, 6, 4}, {3, 3, 6, 4}});
  check_delays(s, 2, "M'_3", mp[2], {{6, 6, 9, 7}, {6, 6, 9, 7}, {5, 7, 8, 6}, {5, 5, 8, 6}});
  bool closed = true;
  std::string bad;
  for (std::size_t j = 4; j <= jmax; ++j) {
    const long t = 2 * static_cast<long>(j);
    const IntTable e = {{t, t + 1, t + 3, t}, {t - 1, t, t + 2, t - 1}, {t - 1, t, t + 2, t - 1}, {t, t + 1, t + 3, t}};
    const IntTable ep = {{t, t, t + 3, t + 1}, {t, t, t + 3, t + 1}, {t - 1, t - 1, t + 2, t}, {t - 1, t - 1, t + 2, t}};
    if (to_ints(m[j - 1]) != e || to_ints(mp[j - 1]) != ep) {
      closed = false;
      bad += "j=" + std::to_string(j) + ": " + render(to_ints(m[j - 1])) + " / " + render(to_ints(mp[j - 1])) + "; ";
    }
  }
  s.check(2, "closed forms of M_j and M'_j for j = 4..10", closed, bad);

  for (const auto* label : {"G", "G'"}) {
    const WAM& x = std::string(label) == "G" ? w : wp;
    check_profile(s, 2, std::string("a^c_j = 2(j+1) for ") + label + ", j = 0..8",
                  active_distances(x, DistanceFamily::active_column, 8),
                  [](std::size_t j) { return 2L * static_cast<long>(j + 1); });
    check_profile(s, 2, std::string("a^s_j = 2j+1 for ") + label + ", j = 0..8",
                  active_distances(x, DistanceFamily::active_segment, 8),
                  [](std::size_t j) { return 2L * static_cast<long>(j) + 1; });
  }
}

const Table kLambda33 = {{"1+W^6", "W^3+W^5", "W^3+W^5", "W^2+W^4"},
                         {"W+W^7", "W^4+W^6", "W^4+W^6", "W^3+W^5"},
                         {"W^2+W^4", "W^3+W^5", "W^3+W^5", "W^2+W^4"},
                         {"W^3+W^5", "W^4+W^6", "W^4+W^6", "W^3+W^5"}};
const Table kLambda33bar = {{"1+W^6", "W^3+W^5", "W^2+W^4", "W^3+W^5"},
                            {"W+W^7", "W^4+W^6", "W^3+W^5", "W^4+W^6"},
                            {"W^3+W^5", "W^4+W^6", "W^3+W^5", "W^4+W^6"},
                            {"W^2+W^4", "W^3+W^5", "W^2+W^4", "W^3+W^5"}};

void example_3_3(Suite& s) {
  const PolyMatrix g = s.matrix("exa3.3_G");
  const PolyMatrix gbar = s.matrix("exa3.3_Gbar");
  const ConvCode c = ConvCode::from_encoder(g);
  const ConvCode cbar = ConvCode::from_encoder(gbar);
  const WAM w = wam(g, s.budgets());
  const WAM wbar = wam(gbar, s.budgets());
  check_wam(s, 1, "WAM of G equals the printed 4x4 matrix", w, kLambda33);
  check_wam(s, 1, "WAM of Gbar equals the printed 4x4 matrix", wbar, kLambda33bar);
  const FMatrix t = FMatrix::from_rows(g.field(), {{1, 1}, {0, 1}});
  s.check(1, "T = ((1,1),(0,1)) satisfies Lambda(XT, YT) = Lambdabar(X, Y)", wam_related_by(wbar, w, t));
  const auto found = wam_equivalent(wbar, w, s.budgets());
  s.check(1, "state isomorphism search finds a valid witness", found && wam_related_by(wbar, w, *found),
          found ? found->to_string() : "none");

  const auto zme = matrix_zme(g, gbar);
  const bool cols = zme && zme->exponents[6] == -1 && zme->exponents[7] == 1 && zme->apply(g) == gbar;
  s.check(4, "G and Gbar are zME, columns 7 and 8 scaled by z^-1 and z", cols);
  const bool strong = code_strongly_isometric(c, cbar, s.budgets()).has_value();
  s.check(4, "strongly isometric: yes", strong, yes_no(strong));
  const bool same_wam = found.has_value();
  s.check(4, "same WAM: yes", same_wam, yes_no(same_wam));
  const bool me = code_me(c, cbar, s.budgets()).has_value();
  s.check(4, "ME: no", !me, yes_no(me));

  std::size_t options = 0, total = 0;
  bool any_me = false;
  reduced_encoder_orbit(
      g,
      [&](const PolyMatrix& u, const PolyMatrix& ug) {
        ++total;
        const bool v_is_t = u(0, 0) == Poly::constant(g.field(), 1) && u(0, 1) == Poly::constant(g.field(), 1) &&
                            u(1, 0).is_zero() && u(1, 1) == Poly::constant(g.field(), 1);
        if (v_is_t) {
          ++options;
          any_me = any_me || matrix_me(ug, gbar).has_value();
        }
        return false;
      },
      s.budgets());
  s.check(4, "16 orbit members with V = T, none ME to Gbar", options == 16 && !any_me,
          std::to_string(options) + " options, ME found: " + yes_no(any_me));
  s.check(4, "reduced-encoder orbit has 96 members", total == 96, std::to_string(total));

  const bool dual_iso = code_isometric(c.dual(), cbar.dual(), s.budgets()).has_value();
  s.check(4, "dual codes isometric: no", !dual_iso, yes_no(dual_iso));
}

void example_4_2(Suite& s) {
  const ConvCode c = s.code("exa4.2_G");
  const ConvCode cbar = s.code("exa4.2_Gbar");
  const WAM w = wam(c.encoder(), s.budgets());
  const WAM wbar = wam(cbar.encoder(), s.budgets());
  const bool same_wam = wam_equivalent(w, wbar, s.budgets()).has_value();
  s.check(4, "same WAM: yes", same_wam, yes_no(same_wam));
  const bool iso = code_isometric(c, cbar, s.budgets()).has_value();
  s.check(4, "isometric: no", !iso, yes_no(iso));
  const bool me = code_me(c, cbar, s.budgets()).has_value();
  s.check(4, "ME: no", !me, yes_no(me));
}

void example_4_3(Suite& s) {
  const PolyMatrix g = s.matrix("exa4.3_G");
  const PolyMatrix gbar = s.matrix("exa4.3_Gbar");
  const PolyMatrix gp = s.matrix("exa4.3_Gp");
  const PolyMatrix gt1 = s.matrix("exa4.3_Gt1");
  const PolyMatrix gt2 = s.matrix("exa4.3_Gt2");
  const Field& f = g.field();
  const ConvCode c = ConvCode::from_encoder(g);
  const ConvCode cbar = ConvCode::from_encoder(gbar);

  s.check(4, "G reduced, Gbar not reduced", is_reduced(g) && !is_reduced(gbar));
  s.check(4, "degree 4 and Forney indices 2, 2 for both codes",
          c.degree() == 4 && cbar.degree() == 4 && c.forney_indices() == std::vector<int>{2, 2} &&
              cbar.forney_indices() == std::vector<int>{2, 2});
  s.check(4, "G' is a reduced encoder of the second code",
          is_reduced(gp) && ConvCode::from_encoder(gp) == cbar);
  const PolyMatrix u1 = PolyMatrix::from_constant(FMatrix::from_rows(f, {{1, 0}, {1, 1}}));
  const PolyMatrix u2 = PolyMatrix::from_constant(FMatrix::from_rows(f, {{1, 1}, {1, 0}}));
  s.check(4, "Gt1 = ((1,0),(1,1)) G' and Gt2 = ((1,1),(1,0)) G'", u1 * gp == gt1 && u2 * gp == gt2);

  const auto zme = matrix_zme(g, gbar);
  s.check(4, "G and Gbar are zME", zme && zme->apply(g) == gbar);
  const auto paired = paired_isometry(g, gbar, s.budgets());
  s.check(4, "uG -> uGbar preserves weights", paired.isometric);
  const bool iso = code_isometric(c, cbar, s.budgets()).has_value();
  s.check(4, "isometric: yes", iso, yes_no(iso));
  const bool strong = code_strongly_isometric(c, cbar, s.budgets()).has_value();
  s.check(4, "strongly isometric: no", !strong, yes_no(strong));

  const PolyVector u = {Poly(f, {1, 1}), Poly(f)};
  const std::size_t w0 = weight(g.left_mul(u));
  const std::size_t w1 = weight(gt1.left_mul(u));
  const std::size_t w2 = weight(gt2.left_mul(u));
  s.check(4, "u = (z+1, 0): wt(uG) = 4, wt(uGt1) = 6, wt(uGt2) = 8", w0 == 4 && w1 == 6 && w2 == 8,
          std::to_string(w0) + "/" + std::to_string(w1) + "/" + std::to_string(w2));
  const auto p1 = paired_isometry(g, gt1, s.budgets());
  s.check(4, "uG -> uGt1 is not weight preserving", !p1.isometric);
}

void example_4_3p(Suite& s) {
  const ConvCode c = s.code("exa4.3p_G");
  const ConvCode cbar = s.code("exa4.3p_Gbar");
  const bool strong = code_strongly_isometric(c, cbar, s.budgets()).has_value();
  s.check(4, "primal codes strongly isometric: yes", strong, yes_no(strong));
  const bool me = code_me(c, cbar, s.budgets()).has_value();
  s.check(4, "primal codes ME: no", !me, yes_no(me));
  const ConvCode h = s.code("exa4.3p_H");
  const ConvCode hbar = s.code("exa4.3p_Hbar");
  s.check(5, "dual(im(1, z, 1+z)) = im H", c.dual() == h, c.dual().canonical().to_string());
  s.check(5, "dual(im(z, z, 1+z)) = im Hbar", cbar.dual() == hbar, cbar.dual().canonical().to_string());
  const bool dual_iso = code_isometric(c.dual(), cbar.dual(), s.budgets()).has_value();
  s.check(4, "dual codes isometric: no", !dual_iso, yes_no(dual_iso));
  const Field& f = c.field();
  const Poly one = Poly::constant(f, 1), zero(f), z = Poly::z(f);
  const ConvCode chat = ConvCode::from_encoder(PolyMatrix::from_rows({{one, one, zero}, {z, one, one}}));
  s.check(4, "delay normalization of the second dual is im((1,1,0),(z,1,1))", delay_normalized(hbar) == chat);
}

void active_row_pair(Suite& s) {
  const PolyMatrix g = s.matrix("rem2.3_G");
  const PolyMatrix gp = s.matrix("rem2.3_Gp");
  s.check(3, "G and G' generate the same code", ConvCode::from_encoder(g) == ConvCode::from_encoder(gp));
  const auto a = active_row_distances(g, 1, s.budgets());
  const auto ap = active_row_distances(gp, 1, s.budgets());
  s.check(3, "a^r_1(G) = 3 and a^r_1(G') = 2", a.at(1) == InfInt{3} && ap.at(1) == InfInt{2},
          a.at(1).to_string() + " / " + ap.at(1).to_string());
}

/// phi(sum v_t z^t) = sum v_t M_t z^t with M_t cycling through I, S^2, alpha^2 S.
PolyVector phi(const PolyVector& v) {
  const Field& f = v.front().field();
  const Elem a2 = f.mul(f.alpha(), f.alpha());
  const FMatrix s = FMatrix::from_rows(f, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const FMatrix ms[3] = {FMatrix::identity(f, 3), s * s,
                         FMatrix::from_rows(f, {{0, a2, 0}, {0, 0, a2}, {a2, 0, 0}})};
  std::vector<FVector> coeffs;
  for (int t = 0; t <= degree(v); ++t) coeffs.push_back(ms[t % 3].left_mul(coefficient(v, static_cast<std::size_t>(t))));
  return from_coefficients(f, v.size(), coeffs);
}

void gf4_5_1(Suite& s) {
  const PolyMatrix g = s.matrix("exa5.1_G");
  const PolyMatrix gbar = s.matrix("exa5.1_Gbar");
  const Field& f = g.field();
  const Elem a2 = f.mul(f.alpha(), f.alpha());
  bool relation = true;
  std::string bad;
  for (std::size_t t = 0; t <= 8; ++t) {
    const PolyVector shifted_lhs = phi(scaled(g.row(0), Poly::monomial(f, 1, t)));
    const PolyVector rhs = scaled(gbar.row(0), Poly::monomial(f, t % 3 == 2 ? a2 : Elem{1}, t));
    if (shifted_lhs != rhs) {
      relation = false;
      bad += "t=" + std::to_string(t) + " ";
    }
  }
  s.check(7, "phi(z^t G) = a^2 z^t Gbar for t = 2 mod 3, z^t Gbar otherwise (t = 0..8)", relation, bad);
  const WAM w = wam(g, s.budgets());
  const WAM wbar = wam(gbar, s.budgets());
  const auto om = omega_series(w, 6);
  const auto ombar = omega_series(wbar, 6);
  s.check(7, "Omega_1..Omega_6 agree", om == ombar);
  const ConvCode c = ConvCode::from_encoder(g);
  const ConvCode cbar = ConvCode::from_encoder(gbar);
  const bool iso = code_isometric(c, cbar, s.budgets()).has_value();
  s.check(7, "codes are not zME", !iso, yes_no(iso));
  const bool same_wam = wam_equivalent(w, wbar, s.budgets()).has_value();
  s.check(7, "WAMs differ", !same_wam, yes_no(same_wam));
}

struct Entry {
  const char* name;
  std::vector<std::string> aliases;
  void (*run)(Suite&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {"exa3.1", {}, example_3_1},          {"exa3.2", {}, example_3_2},
      {"exa3.3", {}, example_3_3},          {"exa3.4/4.3", {"exa3.4", "exa4.3"}, example_4_3},
      {"exa4.2", {}, example_4_2},          {"exa4.3'", {"exa4.3p"}, example_4_3p},
      {"rem2.3", {}, active_row_pair},           {"appendix", {}, appendix},
      {"gf4-5.1", {"exa5.1"}, gf4_5_1},
  };
  return list;
}

}  // namespace

std::vector<std::string> reference_example_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.emplace_back(e.name);
  return out;
}

std::vector<SuiteCheck> run_reference_suite(const std::optional<std::string>& filter,
                                            const std::filesystem::path& data_dir, const Budgets& budgets) {
  std::vector<const Entry*> selected;
  for (const auto& e : entries()) {
    const bool match = !filter || *filter == e.name ||
                       std::find(e.aliases.begin(), e.aliases.end(), *filter) != e.aliases.end();
    if (match) selected.push_back(&e);
  }
  if (selected.empty()) throw std::invalid_argument("unknown example: " + *filter);
  std::vector<SuiteCheck> out;
  for (const Entry* e : selected) {
    Suite s(e->name, data_dir, budgets, out);
    s.guarded(0, "example completes", [&] { e->run(s); });
  }
  return out;
}

}  // namespace convcode
