#include "enriq/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace enriq {

const char* to_string(CMKind k) {
  switch (k) {
    case CMKind::Generic: return "generic";
    case CMKind::Gauss: return "gauss";
    case CMKind::Eisenstein: return "eisenstein";
  }
  return "?";
}

CMKind parse_cm_kind(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "generic") return CMKind::Generic;
  if (s == "gauss") return CMKind::Gauss;
  if (s == "eisenstein") return CMKind::Eisenstein;
  throw std::invalid_argument("unknown curve kind '" + name +
                              "' (expected generic|gauss|eisenstein)");
}

std::int64_t unit_group_order(CMKind kind) {
  switch (kind) {
    case CMKind::Generic: return 2;
    case CMKind::Gauss: return 4;
    case CMKind::Eisenstein: return 6;
  }
  return 2;
}

IntMatrix unit_group_generator(CMKind kind) {
  IntMatrix g(2, 2);
  switch (kind) {
    case CMKind::Generic:
      g << -1, 0, 0, -1;
      break;
    case CMKind::Gauss:
      g << 0, -1, 1, 0;  // i on basis (1, i)
      break;
    case CMKind::Eisenstein:
      g << 1, -1, 1, 0;  // 1 + w on basis (1, w); (1+w)^2 = w
      break;
  }
  return g;
}

IntMatrix multiplier_matrix(CMKind kind, std::int64_t e) {
  std::int64_t o = unit_group_order(kind);
  e = ((e % o) + o) % o;
  IntMatrix g = unit_group_generator(kind);
  IntMatrix p = int_identity(2);
  for (std::int64_t i = 0; i < e; ++i) p = p * g;
  return p;
}

std::int64_t parse_unit(CMKind kind, const std::string& name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto eis = [&](const std::string& t) -> std::int64_t {
    if (t == "1") return 0;
    if (t == "-w2" || t == "-omega2") return 1;
    if (t == "w" || t == "omega") return 2;
    if (t == "-1") return 3;
    if (t == "w2" || t == "omega2") return 4;
    if (t == "-w" || t == "-omega") return 5;
    return -1;
  };
  std::int64_t e = -1;
  switch (kind) {
    case CMKind::Generic:
      if (s == "1") e = 0;
      else if (s == "-1") e = 1;
      break;
    case CMKind::Gauss:
      if (s == "1") e = 0;
      else if (s == "i") e = 1;
      else if (s == "-1") e = 2;
      else if (s == "-i") e = 3;
      break;
    case CMKind::Eisenstein:
      e = eis(s);
      break;
  }
  if (e < 0)
    throw std::invalid_argument("unit '" + name + "' does not exist on a " +
                                std::string(to_string(kind)) + " curve");
  return e;
}

std::string unit_name(CMKind kind, std::int64_t e) {
  std::int64_t o = unit_group_order(kind);
  e = ((e % o) + o) % o;
  switch (kind) {
    case CMKind::Generic: {
      static const char* names[] = {"1", "-1"};
      return names[e];
    }
    case CMKind::Gauss: {
      static const char* names[] = {"1", "i", "-1", "-i"};
      return names[e];
    }
    case CMKind::Eisenstein: {
      static const char* names[] = {"1", "-w2", "w", "-1", "w2", "-w"};
      return names[e];
    }
  }
  return "?";
}

SurfaceAffineAuto make_surface_auto(CMKind curve1, CMKind curve2,
                                    std::int64_t mult1, std::int64_t mult2,
                                    TorsionVector translation) {
  if (translation.size() != 4)
    throw std::invalid_argument("make_surface_auto: translation must have 4 coordinates");
  std::int64_t o1 = unit_group_order(curve1), o2 = unit_group_order(curve2);
  mult1 = ((mult1 % o1) + o1) % o1;
  mult2 = ((mult2 % o2) + o2) % o2;
  IntMatrix linear = IntMatrix::Zero(4, 4);
  linear.block(0, 0, 2, 2) = multiplier_matrix(curve1, mult1);
  linear.block(2, 2, 2, 2) = multiplier_matrix(curve2, mult2);
  return {curve1, curve2, mult1, mult2, std::move(translation), std::move(linear)};
}

SurfaceAffineAuto compose(const SurfaceAffineAuto& f, const SurfaceAffineAuto& g) {
  if (f.curve1 != g.curve1 || f.curve2 != g.curve2)
    throw std::invalid_argument("compose: automorphisms live on different surfaces");
  TorsionVector t = torsion_add(torsion_apply(f.linear, g.translation), f.translation);
  return make_surface_auto(f.curve1, f.curve2, f.mult1 + g.mult1, f.mult2 + g.mult2,
                           std::move(t));
}

SurfaceAffineAuto auto_power(const SurfaceAffineAuto& f, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("auto_power: k must be >= 0");
  SurfaceAffineAuto out = make_surface_auto(
      f.curve1, f.curve2, 0, 0, TorsionVector(f.translation.modulus, IntVector::Zero(4)));
  for (std::int64_t i = 0; i < k; ++i) out = compose(f, out);
  return out;
}

TorsionVector apply_auto(const SurfaceAffineAuto& f, const TorsionVector& x) {
  if (x.size() != 4) throw std::invalid_argument("apply_auto: point must have 4 coordinates");
  return torsion_add(torsion_apply(f.linear, x),
                     torsion_lift(f.translation, lcm(f.translation.modulus, x.modulus)));
}

std::optional<std::int64_t> auto_order(const SurfaceAffineAuto& f, std::int64_t cap) {
  if (cap < 1) throw std::invalid_argument("auto_order: cap must be >= 1");
  IntMatrix id = int_identity(4);
  IntMatrix p = f.linear;
  TorsionVector s = f.translation;
  for (std::int64_t k = 1; k <= cap; ++k) {
    if (p == id && s.is_zero()) return k;
    s = torsion_add(torsion_apply(f.linear, s), f.translation);
    p = f.linear * p;
  }
  return std::nullopt;
}

FixedPointDecision fixed_points_exist_on_surface(const SurfaceAffineAuto& f) {
  IntMatrix a = f.linear - int_identity(4);
  SNFDecomposition snf = smith_normal_form(a);
  Int c = 1;
  for (Eigen::Index i = 0; i < 4; ++i)
    if (snf.d(i, i) != 0) c = snf.d(i, i);  // chain is ascending, take the last
  const Int& n = f.translation.modulus;
  TorsionVector rhs(n * c, -f.translation.coords * c);
  std::optional<TorsionVector> sol = solve_linear_mod(a, rhs);
  return {sol.has_value(), std::move(sol)};
}

bool has_unit_eigenvalue(const SurfaceAffineAuto& f) {
  return determinant(IntMatrix(f.linear - int_identity(4))) == 0;
}

bool preserves_kummer_fiber(const SurfaceAffineAuto& f, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("preserves_kummer_fiber: n must be >= 1");
  return torsion_scale(n + 1, f.translation).is_zero();
}

RootOfUnity symplectic_multiplier(const SurfaceAffineAuto& f) {
  std::int64_t o1 = unit_group_order(f.curve1), o2 = unit_group_order(f.curve2);
  std::int64_t l = lcm64(o1, o2);
  std::int64_t e = (f.mult1 * (l / o1) + f.mult2 * (l / o2)) % l;
  if (e == 0) return {0, 1};
  std::int64_t g = gcd64(e, l);
  return {e / g, l / g};
}

const char* to_string(KummerTemplate t) {
  switch (t) {
    case KummerTemplate::Involution: return "involution";
    case KummerTemplate::OrderThree: return "order-3";
    case KummerTemplate::OrderFour: return "order-4";
  }
  return "?";
}

namespace {

TorsionVector factor_part(const TorsionVector& t, int which) {
  IntVector c(2);
  c << t.coords[2 * which], t.coords[2 * which + 1];
  return TorsionVector(t.modulus, c);
}

}  // namespace

FreenessReport freeness_predicate(const SurfaceAffineAuto& f, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("freeness_predicate: n must be >= 1");
  if (!preserves_kummer_fiber(f, n))
    throw std::domain_error("freeness_predicate: Kummer fiber is not preserved");
  TorsionVector u = factor_part(f.translation, 0);
  TorsionVector v = factor_part(f.translation, 1);
  IntMatrix m1 = multiplier_matrix(f.curve1, f.mult1);
  IntMatrix m2 = multiplier_matrix(f.curve2, f.mult2);
  IntMatrix id2 = int_identity(2);

  if (m1 == IntMatrix(-id2) && m2 == id2 && n % 2 == 1 &&
      torsion_scale(2, v).is_zero()) {
    bool free = !torsion_scale((n + 1) / 2, u).is_zero();
    return {KummerTemplate::Involution, free, "((n+1)/2) u != 0"};
  }
  if (m1 == id2 && f.curve2 == CMKind::Eisenstein &&
      m2 == multiplier_matrix(CMKind::Eisenstein, 2) && (n + 1) % 3 == 0 &&
      torsion_scale(3, u).is_zero()) {
    std::int64_t m = (n + 1) / 3;
    TorsionVector w = torsion_apply(IntMatrix(id2 + id2 + m2), v);
    bool free = !torsion_scale(m, w).is_zero();
    return {KummerTemplate::OrderThree, free, "m (2 + w) v != 0 with m = (n+1)/3"};
  }
  if (m1 == id2 && f.curve2 == CMKind::Gauss &&
      m2 == unit_group_generator(CMKind::Gauss) && (n + 1) % 4 == 0 &&
      torsion_scale(4, u).is_zero()) {
    std::int64_t m = (n + 1) / 4;
    TorsionVector w = torsion_apply(IntMatrix(id2 + m2), v);
    bool free = !torsion_scale(2 * m, u).is_zero() || !torsion_scale(2 * m, w).is_zero();
    return {KummerTemplate::OrderFour, free,
            "2m u != 0 or 2m (1+i) v != 0 with m = (n+1)/4"};
  }
  throw std::domain_error(
      "unsupported construction: f matches none of the involution / order-3 / "
      "order-4 templates");
}

namespace {

struct PointCoder {
  std::int64_t level;
  std::array<std::int64_t, 4> decode(std::int64_t code) const {
    std::array<std::int64_t, 4> p{};
    for (int i = 3; i >= 0; --i) {
      p[static_cast<std::size_t>(i)] = code % level;
      code /= level;
    }
    return p;
  }
  std::int64_t encode(const std::array<std::int64_t, 4>& p) const {
    std::int64_t code = 0;
    for (int i = 0; i < 4; ++i) code = code * level + p[static_cast<std::size_t>(i)];
    return code;
  }
};

}  // namespace

std::vector<FixedConfiguration> brute_force_fixed_configurations(
    const SurfaceAffineAuto& f, std::int64_t n, std::int64_t level,
    std::int64_t budget) {
  if (n < 1) throw std::invalid_argument("brute_force_fixed_configurations: n must be >= 1");
  if (level < 1)
    throw std::invalid_argument("brute_force_fixed_configurations: level must be >= 1");
  if (!preserves_kummer_fiber(f, n))
    throw std::domain_error("brute_force_fixed_configurations: Kummer fiber not preserved");
  Int lvl(static_cast<long>(level));
  if (lvl % f.translation.modulus != 0)
    throw std::invalid_argument(
        "brute_force_fixed_configurations: level must be a multiple of the "
        "translation modulus");

  // Sum-zero multisets are enumerated through their n smallest points, the
  // last one being determined; the work is C(level^4 + n - 1, n) candidates.
  Int points_count = lvl * lvl * lvl * lvl;
  Int candidates;
  {
    Int top = points_count + (n - 1);
    mpz_bin_ui(candidates.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(n));
  }
  if (candidates > budget)
    throw std::runtime_error(
        "brute_force_fixed_configurations: enumeration size " +
        candidates.get_str() + " exceeds budget " + std::to_string(budget));

  std::int64_t npoints = to_int64(points_count, "brute_force_fixed_configurations");
  PointCoder coder{level};

  // Image table of f on A[level], computed once with exact arithmetic.
  std::array<std::array<std::int64_t, 4>, 4> lin{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          to_int64(f.linear(i, j), "linear entry");
  std::array<std::int64_t, 4> shift{};
  {
    TorsionVector lifted = torsion_lift(f.translation, lvl);
    for (int i = 0; i < 4; ++i) shift[static_cast<std::size_t>(i)] =
        to_int64(lifted.coords[i], "translation coordinate");
  }
  std::vector<std::int64_t> image(static_cast<std::size_t>(npoints));
  for (std::int64_t code = 0; code < npoints; ++code) {
    std::array<std::int64_t, 4> x = coder.decode(code);
    std::array<std::int64_t, 4> y{};
    for (int i = 0; i < 4; ++i) {
      std::int64_t acc = shift[static_cast<std::size_t>(i)];
      for (int j = 0; j < 4; ++j)
        acc += lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               x[static_cast<std::size_t>(j)];
      acc %= level;
      if (acc < 0) acc += level;
      y[static_cast<std::size_t>(i)] = acc;
    }
    image[static_cast<std::size_t>(code)] = coder.encode(y);
  }

  std::vector<FixedConfiguration> out;
  std::vector<std::int64_t> chosen(static_cast<std::size_t>(n));
  std::vector<std::int64_t> multiset(static_cast<std::size_t>(n + 1));
  std::vector<std::int64_t> mapped(static_cast<std::size_t>(n + 1));

  auto emit_candidate = [&](const std::array<std::int64_t, 4>& sums) {
    std::array<std::int64_t, 4> lastp{};
    for (int i = 0; i < 4; ++i) {
      std::int64_t r = (-sums[static_cast<std::size_t>(i)]) % level;
      if (r < 0) r += level;
      lastp[static_cast<std::size_t>(i)] = r;
    }
    std::int64_t last = coder.encode(lastp);
    if (last < chosen.back()) return;  // counted once, via its n smallest points
    for (std::size_t i = 0; i < chosen.size(); ++i) multiset[i] = chosen[i];
    multiset.back() = last;
    for (std::size_t i = 0; i < multiset.size(); ++i)
      mapped[i] = image[static_cast<std::size_t>(multiset[i])];
    std::sort(mapped.begin(), mapped.end());
    if (mapped != multiset) return;
    FixedConfiguration cfg;
    cfg.level = level;
    cfg.reduced = true;
    for (std::size_t i = 0; i < multiset.size(); ++i) {
      cfg.points.push_back(coder.decode(multiset[i]));
      if (i > 0 && multiset[i] == multiset[i - 1]) cfg.reduced = false;
    }
    out.push_back(std::move(cfg));
  };

  auto rec = [&](auto&& self, std::size_t depth, std::int64_t start,
                 std::array<std::int64_t, 4> sums) -> void {
    if (depth == chosen.size()) {
      emit_candidate(sums);
      return;
    }
    for (std::int64_t code = start; code < npoints; ++code) {
      chosen[depth] = code;
      std::array<std::int64_t, 4> s = sums;
      std::array<std::int64_t, 4> p = coder.decode(code);
      for (int i = 0; i < 4; ++i)
        s[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i)];
      self(self, depth + 1, code, s);
    }
  };
  rec(rec, 0, 0, {0, 0, 0, 0});
  return out;
}

KummerReport kummer_quotient_classification(const KummerScenario& sc) {
  if (sc.n < 1)
    throw std::invalid_argument("kummer_quotient_classification: n must be >= 1");
  if (!preserves_kummer_fiber(sc.f, sc.n))
    throw std::domain_error(
        "kummer_quotient_classification: the translation is not (n+1)-torsion, "
        "the Kummer fiber is not preserved");
  std::int64_t nmod = to_int64(sc.f.translation.modulus, "translation modulus");
  std::optional<std::int64_t> d = auto_order(sc.f, 12 * nmod);
  if (!d) throw std::logic_error("kummer_quotient_classification: order exceeds 12 N");

  RootOfUnity mult = symplectic_multiplier(sc.f);
  if (*d % mult.order != 0)
    throw std::logic_error("kummer_quotient_classification: multiplier order does not "
                           "divide the automorphism order");
  std::int64_t k = (mult.exponent * (*d / mult.order)) % *d;

  KummerReport rep;
  rep.order = *d;
  rep.multiplier = {k, *d};
  if (gcd64(k, *d) != 1)
    throw std::domain_error(nonprimitive_multiplier_diagnostic(*d, k));
  rep.index = canonical_index(sc.n, *d);
  try {
    rep.freeness = freeness_predicate(sc.f, sc.n);
  } catch (const std::domain_error&) {
    rep.freeness = std::nullopt;
  }
  rep.note =
      "the induced fiber automorphism is assigned the order of the surface "
      "automorphism; a possible order drop on the fiber is not verified";
  return rep;
}

TorsionVector parse_torsion_pair(const std::string& text) {
  std::vector<std::pair<Int, Int>> fracs;  // (numerator, denominator)
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::string clean;
    for (char c : tok)
      if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
    if (clean.empty()) throw std::invalid_argument("empty torsion coordinate in '" + text + "'");
    std::string::size_type slash = clean.find('/');
    try {
      Int num, den;
      if (slash == std::string::npos) {
        num = Int(clean);
        den = 1;
      } else {
        num = Int(clean.substr(0, slash));
        den = Int(clean.substr(slash + 1));
      }
      if (den < 1) throw std::invalid_argument("nonpositive denominator");
      Int g = gcd(num, den);
      if (g > 1) { num /= g; den /= g; }
      fracs.emplace_back(num, den);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("cannot parse torsion coordinate '" + tok +
                                  "' (expected a/N)");
    }
  }
  if (fracs.size() != 2)
    throw std::invalid_argument("torsion point '" + text + "' must have exactly 2 coordinates");
  Int n = lcm(fracs[0].second, fracs[1].second);
  IntVector c(2);
  c << fracs[0].first * (n / fracs[0].second), fracs[1].first * (n / fracs[1].second);
  return TorsionVector(n, c);
}

TorsionVector combine_translation(const TorsionVector& u, const TorsionVector& v) {
  if (u.size() != 2 || v.size() != 2)
    throw std::invalid_argument("combine_translation: u and v must have 2 coordinates");
  Int n = lcm(u.modulus, v.modulus);
  TorsionVector lu = torsion_lift(u, n), lv = torsion_lift(v, n);
  IntVector c(4);
  c << lu.coords[0], lu.coords[1], lv.coords[0], lv.coords[1];
  return TorsionVector(n, c);
}

std::string format_torsion(const TorsionVector& t) {
  std::string out;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    if (i > 0) out += ",";
    out += t.coords[i].get_str() + "/" + t.modulus.get_str();
  }
  return out;
}

}  // namespace enriq
