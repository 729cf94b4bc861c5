#include "tbk/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "tbk/errors.hpp"

namespace tbk {

namespace {

constexpr unsigned shift_of(std::size_t var) {
  return MultiPoly::kBitsPerVar * static_cast<unsigned>(MultiPoly::kMaxVars - 1 - var);
}

constexpr MultiPoly::Key kFieldMask = MultiPoly::kMaxDegree;

}  // namespace

VarSet::VarSet(std::initializer_list<std::string> names)
    : VarSet(std::vector<std::string>(names)) {}

VarSet::VarSet(std::vector<std::string> names) {
  if (names.size() > MultiPoly::kMaxVars)
    throw InvalidArgument("at most " + std::to_string(MultiPoly::kMaxVars) + " variables supported");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw InvalidArgument("duplicate variable '" + names[i] + "'");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t VarSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InvalidArgument("unknown variable '" + std::string(name) + "'");
}

MultiPoly::MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(const VarSet& vars, const Integer& c) {
  MultiPoly p(vars);
  if (c != 0) p.terms_.push_back({0, c});
  return p;
}

MultiPoly MultiPoly::variable(const VarSet& vars, std::string_view name) {
  Exponents e(vars.size(), 0);
  e[vars.index_of(name)] = 1;
  return monomial(vars, e, 1);
}

MultiPoly MultiPoly::monomial(const VarSet& vars, std::span<const std::uint32_t> exps,
                              const Integer& coeff) {
  MultiPoly p(vars);
  if (coeff != 0) p.terms_.push_back({p.make_key(exps), coeff});
  return p;
}

MultiPoly MultiPoly::from_terms(const VarSet& vars,
                                const std::vector<std::pair<Exponents, Integer>>& terms) {
  MultiPoly p(vars);
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (const auto& [e, c] : terms) raw.push_back({p.make_key(e), c});
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  for (auto& t : raw) {
    if (!p.terms_.empty() && p.terms_.back().key == t.key)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().coeff == 0) p.terms_.pop_back();
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0);
}

Integer MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw InvalidArgument("polynomial is not constant");
  return terms_[0].coeff;
}

std::uint32_t MultiPoly::exponent(Key key, std::size_t var) const {
  return static_cast<std::uint32_t>((key >> shift_of(var)) & kFieldMask);
}

MultiPoly::Exponents MultiPoly::exponents(Key key) const {
  Exponents e(nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent(key, i);
  return e;
}

MultiPoly::Key MultiPoly::make_key(std::span<const std::uint32_t> exps) const {
  if (exps.size() != nvars())
    throw InvalidArgument("exponent vector length does not match variable count");
  Key k = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > kMaxDegree) throw InvalidArgument("exponent exceeds 65535");
    k |= static_cast<Key>(exps[i]) << shift_of(i);
  }
  return k;
}

Integer MultiPoly::coefficient(std::span<const std::uint32_t> exps) const {
  Key k = make_key(exps);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, Key key) { return t.key < key; });
  if (it != terms_.end() && it->key == k) return it->coeff;
  return 0;
}

int MultiPoly::degree(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(exponent(t.key, var)));
  return d;
}

int MultiPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = static_cast<int>(kMaxDegree);
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(exponent(t.key, var)));
  return d;
}

const MultiPoly::Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  return terms_.back();
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (!(vars_ == other.vars_)) throw InvalidArgument("polynomials over different variable sets");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void MultiPoly::add_scaled(const MultiPoly& rhs, int sign) {
  check_compatible(rhs);
  if (rhs.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->key < b->key)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->key < a->key) {
      out.push_back({b->key, sign > 0 ? b->coeff : Integer(-b->coeff)});
      ++b;
    } else {
      Term t{a->key, std::move(a->coeff)};
      if (sign > 0)
        t.coeff += b->coeff;
      else
        t.coeff -= b->coeff;
      if (t.coeff != 0) out.push_back(std::move(t));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  add_scaled(rhs, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (a.degree(v) + b.degree(v) > static_cast<int>(MultiPoly::kMaxDegree))
      throw InvalidArgument("product exponent exceeds 65535");

  // Keys add component-wise without carries once the degree check passed.
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const MultiPoly& single = a.terms_.size() == 1 ? a : b;
    const MultiPoly& other = a.terms_.size() == 1 ? b : a;
    const auto& s = single.terms_[0];
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) r.terms_.push_back({t.key + s.key, t.coeff * s.coeff});
    return r;
  }

  std::unordered_map<MultiPoly::Key, Integer> acc;
  acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 16);
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Integer& slot = acc[x.key + y.key];
      mpz_addmul(slot.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) r.terms_.push_back({k, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const MultiPoly::Term& s, const MultiPoly::Term& t) { return s.key < t.key; });
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(vars_);
  const Key unit = Key{1} << shift_of(var);
  for (const auto& t : terms_) {
    auto e = exponent(t.key, var);
    if (e == 0) continue;
    r.terms_.push_back({t.key - unit, t.coeff * e});
  }
  // Subtracting the same unit from every surviving key preserves order.
  return r;
}

MultiPoly MultiPoly::evaluate(std::size_t var, const Integer& value) const {
  std::vector<std::pair<Exponents, Integer>> out;
  out.reserve(terms_.size());
  Integer power;
  for (const auto& t : terms_) {
    auto e = exponents(t.key);
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), e[var]);
    e[var] = 0;
    out.emplace_back(std::move(e), t.coeff * power);
  }
  return from_terms(vars_, out);
}

MultiPoly MultiPoly::shifted(std::size_t var, std::uint32_t shift) const {
  if (shift == 0 || terms_.empty()) return *this;
  if (static_cast<std::uint64_t>(degree(var)) + shift > kMaxDegree)
    throw InvalidArgument("exponent exceeds 65535");
  MultiPoly r = *this;
  const Key add = static_cast<Key>(shift) << shift_of(var);
  for (auto& t : r.terms_) t.key += add;
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  int d = degree(var);
  if (d < 0) return {};
  std::vector<MultiPoly> out(static_cast<std::size_t>(d) + 1, MultiPoly(vars_));
  const Key mask = ~(kFieldMask << shift_of(var));
  // Keys within one bucket share the masked field, so masking keeps them sorted.
  for (const auto& t : terms_) out[exponent(t.key, var)].terms_.push_back({t.key & mask, t.coeff});
  return out;
}

MultiPoly MultiPoly::from_coefficients(const VarSet& vars, std::size_t var,
                                       const std::vector<MultiPoly>& coeffs) {
  MultiPoly r(vars);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    r += coeffs[k].shifted(var, static_cast<std::uint32_t>(k));
  }
  return r;
}

MultiPoly MultiPoly::with_vars(const VarSet& target) const {
  std::vector<std::optional<std::size_t>> map(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    map[i] = target.find(vars_[i]);
    if (!map[i] && degree(i) > 0)
      throw InvalidArgument("variable '" + vars_[i] + "' missing from target variable set");
  }
  std::vector<std::pair<Exponents, Integer>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target.size(), 0);
    for (std::size_t i = 0; i < nvars(); ++i)
      if (map[i]) e[*map[i]] = exponent(t.key, i);
    out.emplace_back(std::move(e), t.coeff);
  }
  return from_terms(target, out);
}

Integer MultiPoly::integer_content() const {
  if (terms_.empty()) throw InvalidArgument("content of the zero polynomial");
  Integer g = 0;
  for (const auto& t : terms_) {
    g = gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g;
}

std::pair<MultiPoly, MultiPoly::Exponents> MultiPoly::strip_monomial() const {
  Exponents low(nvars(), 0);
  if (terms_.empty()) return {*this, low};
  Key sub = 0;
  for (std::size_t v = 0; v < nvars(); ++v) {
    low[v] = static_cast<std::uint32_t>(min_degree(v));
    sub |= static_cast<Key>(low[v]) << shift_of(v);
  }
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.key -= sub;
  return {r, low};
}

MultiPoly MultiPoly::normalized_sign() const {
  if (terms_.empty() || terms_.back().coeff > 0) return *this;
  return -*this;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    std::ostringstream mono;
    bool any = false;
    for (std::size_t v = 0; v < nvars(); ++v) {
      auto e = exponent(it->key, v);
      if (e == 0) continue;
      if (any) mono << "*";
      mono << vars_[v];
      if (e > 1) mono << "^" << e;
      any = true;
    }
    if (!any)
      os << c;
    else if (c == 1)
      os << mono.str();
    else
      os << c << "*" << mono.str();
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Division

namespace {

std::optional<MultiPoly> divide_impl(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (f.is_zero()) return MultiPoly(f.vars());
  const VarSet& vars = f.vars();

  for (std::size_t v = 0; v < f.nvars(); ++v)
    if (f.degree(v) < g.degree(v) || f.min_degree(v) < g.min_degree(v)) return std::nullopt;

  if (g.is_constant()) {
    const Integer c = g.constant_value();
    std::vector<std::pair<MultiPoly::Exponents, Integer>> out;
    out.reserve(f.size());
    Integer q;
    for (const auto& t : f.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
      mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
      out.emplace_back(f.exponents(t.key), q);
    }
    return MultiPoly::from_terms(vars, out);
  }

  // Long division in the first variable that g actually involves, with exact
  // recursive division of the coefficients.
  std::size_t var = 0;
  while (g.degree(var) <= 0) ++var;

  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  const std::size_t n = fc.size() - 1;
  const std::size_t m = gc.size() - 1;
  if (n < m) return std::nullopt;

  std::vector<MultiPoly> qc(n - m + 1, MultiPoly(vars));
  for (std::size_t k = n - m + 1; k-- > 0;) {
    const MultiPoly& top = fc[k + m];
    if (top.is_zero()) continue;
    auto q = divide_impl(top, gc[m]);
    if (!q) return std::nullopt;
    for (std::size_t j = 0; j <= m; ++j)
      if (!gc[j].is_zero()) fc[k + j] -= *q * gc[j];
    qc[k] = std::move(*q);
  }
  for (std::size_t j = 0; j < m; ++j)
    if (!fc[j].is_zero()) return std::nullopt;
  return MultiPoly::from_coefficients(vars, var, qc);
}

}  // namespace

std::optional<MultiPoly> try_divexact(const MultiPoly& f, const MultiPoly& g) {
  if (!(f.vars() == g.vars())) throw InvalidArgument("polynomials over different variable sets");
  return divide_impl(f, g);
}

MultiPoly divexact(const MultiPoly& f, const MultiPoly& g) {
  auto q = try_divexact(f, g);
  if (!q) throw ComputationError("inexact polynomial division");
  return *std::move(q);
}

MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  if (g.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
  const int n = f.degree(var);
  const int m = g.degree(var);
  if (n < m) return f;
  auto r = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  const MultiPoly& lc = gc.back();
  for (int k = n; k >= m; --k) {
    MultiPoly c = r[static_cast<std::size_t>(k)];
    for (auto& x : r)
      if (!x.is_zero()) x = x * lc;
    if (!c.is_zero())
      for (int j = 0; j <= m; ++j)
        if (!gc[static_cast<std::size_t>(j)].is_zero())
          r[static_cast<std::size_t>(k - m + j)] -= c * gc[static_cast<std::size_t>(j)];
    r.pop_back();
  }
  return MultiPoly::from_coefficients(f.vars(), var, r);
}

// ---------------------------------------------------------------------------
// GCD

namespace {

std::optional<std::size_t> first_var(const MultiPoly& f) {
  for (std::size_t v = 0; v < f.nvars(); ++v)
    if (f.degree(v) > 0) return v;
  return std::nullopt;
}

MultiPoly primitive_in(const MultiPoly& f, std::size_t var) {
  return divexact(f, content_in(f, var));
}

Integer max_norm(const MultiPoly& f) {
  Integer m = 0;
  for (const auto& t : f.terms())
    if (mpz_cmpabs(t.coeff.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coeff);
  return m;
}

// Rebuilds a polynomial in `var` from its value h at var = xi, reading the
// coefficients as balanced base-xi digits.
std::optional<MultiPoly> interpolate_digits(MultiPoly h, const Integer& xi, std::size_t var, int max_degree) {
  MultiPoly out(h.vars());
  const Integer half = xi / 2;
  for (std::uint32_t i = 0; !h.is_zero(); ++i) {
    if (static_cast<int>(i) > max_degree) return std::nullopt;
    std::vector<std::pair<MultiPoly::Exponents, Integer>> digit;
    for (const auto& t : h.terms()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit.emplace_back(h.exponents(t.key), r);
    }
    MultiPoly g = MultiPoly::from_terms(h.vars(), digit);
    h -= g;
    h = divexact(h, MultiPoly::constant(h.vars(), xi));
    out += g.shifted(var, i);
  }
  return out;
}

// Heuristic gcd: evaluate one variable at a large integer, recurse, and lift
// the result back by balanced digit expansion. A candidate is accepted only
// when it divides both inputs exactly; nullopt means every attempt failed.
std::optional<MultiPoly> heuristic_gcd(const MultiPoly& f, const MultiPoly& g) {
  const VarSet& vars = f.vars();
  if (f.is_zero() || g.is_zero()) return gcd(f, g);
  std::optional<std::size_t> var;
  for (std::size_t v = f.nvars(); v-- > 0;)
    if (f.degree(v) > 0 || g.degree(v) > 0) {
      var = v;
      break;
    }
  const Integer cf = f.integer_content();
  const Integer cg = g.integer_content();
  const Integer c = gcd(cf, cg);
  if (!var) return MultiPoly::constant(vars, c);
  const MultiPoly a = divexact(f, MultiPoly::constant(vars, cf));
  const MultiPoly b = divexact(g, MultiPoly::constant(vars, cg));
  const int max_degree = std::min(a.degree(*var), b.degree(*var));
  if (max_degree <= 0) return std::nullopt;

  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const MultiPoly ea = a.evaluate(*var, xi);
    const MultiPoly eb = b.evaluate(*var, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      if (auto h = heuristic_gcd(ea, eb)) {
        if (auto cand = interpolate_digits(*h, xi, *var, max_degree)) {
          if (!cand->is_zero()) {
            MultiPoly p = divexact(*cand, MultiPoly::constant(vars, cand->integer_content()));
            if (try_divexact(a, p) && try_divexact(b, p)) return (c * p).normalized_sign();
          }
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

MultiPoly content_in(const MultiPoly& f, std::size_t var) {
  MultiPoly g(f.vars());
  for (auto& c : f.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
  if (!(f.vars() == g.vars())) throw InvalidArgument("polynomials over different variable sets");
  if (f.is_zero()) return g.normalized_sign();
  if (g.is_zero()) return f.normalized_sign();
  if (f.is_constant() || g.is_constant()) {
    Integer c = f.is_constant() ? f.constant_value() : g.constant_value();
    const MultiPoly& other = f.is_constant() ? g : f;
    return MultiPoly::constant(f.vars(), gcd(c, other.integer_content()));
  }

  if (auto h = heuristic_gcd(f, g)) return *h;

  // Main variable: the first one that occurs in either input.
  auto vf = first_var(f);
  auto vg = first_var(g);
  std::size_t var = std::min(vf.value_or(MultiPoly::kMaxVars), vg.value_or(MultiPoly::kMaxVars));
  if (f.degree(var) <= 0) return gcd(f, content_in(g, var));
  if (g.degree(var) <= 0) return gcd(content_in(f, var), g);

  MultiPoly cf = content_in(f, var);
  MultiPoly cg = content_in(g, var);
  MultiPoly c = gcd(cf, cg);
  MultiPoly a = divexact(f, cf);
  MultiPoly b = divexact(g, cg);
  if (a.degree(var) < b.degree(var)) std::swap(a, b);

  // Most gcds met in practice have one argument dividing the other.
  if (try_divexact(a, b)) return (c * b).normalized_sign();

  while (true) {
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree(var) <= 0) {
      b = MultiPoly::constant(f.vars(), 1);
      break;
    }
    a = std::move(b);
    b = primitive_in(r, var);
  }
  return (c * b).normalized_sign();
}

namespace {

MultiPoly squarefree_part_impl(const MultiPoly& f) {
  auto var = first_var(f);
  if (!var) return MultiPoly::constant(f.vars(), 1);
  MultiPoly c = content_in(f, *var);
  MultiPoly p = divexact(f, c);
  MultiPoly reduced = divexact(p, gcd(p, p.derivative(*var)));
  return (reduced * squarefree_part_impl(c)).normalized_sign();
}

void merge_factor(std::vector<std::pair<MultiPoly, unsigned>>& out, MultiPoly factor, unsigned mult) {
  if (factor.is_constant()) return;
  for (auto& [g, m] : out)
    if (m == mult) {
      g = (g * factor).normalized_sign();
      return;
    }
  out.emplace_back(factor.normalized_sign(), mult);
}

void decompose(const MultiPoly& f, std::vector<std::pair<MultiPoly, unsigned>>& out) {
  auto var = first_var(f);
  if (!var) return;
  MultiPoly c = content_in(f, *var);
  MultiPoly p = divexact(f, c);

  // Yun's algorithm in the main variable.
  MultiPoly dp = p.derivative(*var);
  MultiPoly a = gcd(p, dp);
  MultiPoly b = divexact(p, a);
  MultiPoly cc = divexact(dp, a);
  MultiPoly d = cc - b.derivative(*var);
  for (unsigned k = 1; b.degree(*var) > 0; ++k) {
    MultiPoly ak = gcd(b, d);
    b = divexact(b, ak);
    cc = divexact(d, ak);
    d = cc - b.derivative(*var);
    merge_factor(out, ak, k);
  }
  decompose(c, out);
}

}  // namespace

std::vector<std::pair<MultiPoly, unsigned>> squarefree_decomposition(const MultiPoly& f) {
  if (f.is_zero()) throw InvalidArgument("squarefree decomposition of zero");
  std::vector<std::pair<MultiPoly, unsigned>> out;
  decompose(f, out);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

MultiPoly poly_cleanup(const MultiPoly& f, CleanupMode mode) {
  if (f.is_zero()) throw InvalidArgument("cleanup of the zero polynomial");
  switch (mode) {
    case CleanupMode::content:
      return MultiPoly::constant(f.vars(), f.integer_content());
    case CleanupMode::primitive_part:
      return divexact(f, MultiPoly::constant(f.vars(), f.integer_content()));
    case CleanupMode::squarefree_part:
      return squarefree_part_impl(f);
  }
  throw InvalidArgument("unknown cleanup mode");
}

// ---------------------------------------------------------------------------
// Resultants

namespace {

MultiPoly lead_coeff(const MultiPoly& f, std::size_t var) { return f.coefficients_in(var).back(); }

bool odd(int d) { return d % 2 != 0; }

}  // namespace

MultiPoly resultant_subresultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  if (!(f.vars() == g.vars())) throw InvalidArgument("polynomials over different variable sets");
  const VarSet& vars = f.vars();
  if (f.is_zero() || g.is_zero()) return MultiPoly(vars);
  int df = f.degree(var);
  int dg = g.degree(var);
  if (df == 0 && dg == 0) throw InvalidArgument("resultant variable occurs in neither input");
  if (dg == 0) return g.pow(static_cast<unsigned>(df));
  if (df == 0) return f.pow(static_cast<unsigned>(dg));

  MultiPoly a = f;
  MultiPoly b = g;
  int sign = 1;
  if (df < dg) {
    std::swap(a, b);
    if (odd(df) && odd(dg)) sign = -1;
  }
  MultiPoly one = MultiPoly::constant(vars, 1);
  MultiPoly gg = one;
  MultiPoly h = one;
  while (true) {
    const int da = a.degree(var);
    const int db = b.degree(var);
    const int delta = da - db;
    if (odd(da) && odd(db)) sign = -sign;
    MultiPoly r = pseudo_remainder(a, b, var);
    a = std::move(b);
    b = divexact(r, gg * h.pow(static_cast<unsigned>(delta)));
    gg = lead_coeff(a, var);
    if (delta == 1) {
      h = gg;
    } else if (delta > 1) {
      h = divexact(gg.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (b.is_zero()) return MultiPoly(vars);
    if (b.degree(var) <= 0) break;
  }
  const int da = a.degree(var);
  MultiPoly lb = lead_coeff(b, var);
  MultiPoly res = divexact(lb.pow(static_cast<unsigned>(da)), h.pow(static_cast<unsigned>(da - 1)));
  return sign < 0 ? -res : res;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw InvalidArgument("determinant of an empty matrix");
  const VarSet vars = m[0][0].vars();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(vars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly(vars);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divexact(t, prev);
      }
      m[i][k] = MultiPoly(vars);
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly resultant_sylvester(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  if (!(f.vars() == g.vars())) throw InvalidArgument("polynomials over different variable sets");
  const VarSet& vars = f.vars();
  if (f.is_zero() || g.is_zero()) return MultiPoly(vars);
  const int df = f.degree(var);
  const int dg = g.degree(var);
  if (df == 0 && dg == 0) throw InvalidArgument("resultant variable occurs in neither input");
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  const std::size_t m = static_cast<std::size_t>(df);
  const std::size_t n = static_cast<std::size_t>(dg);
  const std::size_t size = m + n;
  std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, MultiPoly(vars)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = fc[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = gc[n - j];
  return bareiss_determinant(std::move(s));
}

MultiPoly poly_resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
  auto idx = f.vars().find(var);
  if (!idx || (f.degree(*idx) <= 0 && g.degree(*idx) <= 0))
    throw InvalidArgument("resultant variable '" + std::string(var) + "' occurs in neither input");
  return resultant_subresultant(f, g, *idx);
}

}  // namespace tbk
