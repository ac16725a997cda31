#include "koenig/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace koenig {

double budget_scale() {
  static const double scale = [] {
    const char* raw = std::getenv("KOENIG_BUDGET");
    if (raw == nullptr) return 1.0;
    char* end = nullptr;
    double v = std::strtod(raw, &end);
    if (end == raw || !(v > 0.0)) return 1.0;
    return v;
  }();
  return scale;
}

std::uint64_t scaled_budget(std::uint64_t base) {
  double v = static_cast<double>(base) * budget_scale();
  if (v < 1.0) return 1;
  if (v > 1.8e19) return UINT64_MAX;
  return static_cast<std::uint64_t>(v);
}

// Monomial ------------------------------------------------------------------

Monomial Monomial::variable(std::size_t num_vars, VarIndex i, Exponent power) {
  if (i >= num_vars) throw PreconditionError("variable index out of range");
  Monomial m(num_vars);
  m.exps_[i] = power;
  return m;
}

Monomial Monomial::product_of(std::size_t num_vars, std::span<const VarIndex> vars) {
  Monomial m(num_vars);
  for (VarIndex v : vars) {
    if (v >= num_vars) throw PreconditionError("variable index out of range");
    m.exps_[v] = 1;
  }
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

void check_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw PreconditionError("monomials live in rings with different numbers of variables (" +
                            std::to_string(a.num_vars()) + " vs " +
                            std::to_string(b.num_vars()) + ")");
  }
}

bool Monomial::divides(const Monomial& other) const {
  check_same_ambient(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  check_same_ambient(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::vector<VarIndex> Monomial::support() const {
  std::vector<VarIndex> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) s.push_back(i);
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_ambient(*this, other);
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_ambient(*this, other);
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw PreconditionError("monomial quotient: not divisible");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

// Orders --------------------------------------------------------------------

MonomialOrder MonomialOrder::lex(std::size_t n) {
  MonomialOrder o{OrderKind::lex, std::vector<VarIndex>(n)};
  std::iota(o.priority.begin(), o.priority.end(), VarIndex{0});
  return o;
}

MonomialOrder MonomialOrder::degrevlex(std::size_t n) {
  MonomialOrder o = lex(n);
  o.kind = OrderKind::degrevlex;
  return o;
}

MonomialOrder MonomialOrder::with_priority(OrderKind kind, std::vector<VarIndex> priority) {
  MonomialOrder o{kind, std::move(priority)};
  o.validate();
  return o;
}

void MonomialOrder::validate() const {
  std::vector<bool> seen(priority.size(), false);
  for (VarIndex v : priority) {
    if (v >= priority.size() || seen[v])
      throw PreconditionError("variable priority is not a permutation");
    seen[v] = true;
  }
}

void WeightOrder::validate() const {
  tiebreak.validate();
  if (weights.size() != tiebreak.num_vars())
    throw PreconditionError("weight vector length differs from the number of variables");
  for (auto w : weights)
    if (w <= 0) throw PreconditionError("weights must be strictly positive");
}

TermOrder::TermOrder(MonomialOrder order) : tiebreak_(std::move(order)) { tiebreak_.validate(); }

TermOrder::TermOrder(WeightOrder order)
    : weights_(std::move(order.weights)), tiebreak_(std::move(order.tiebreak)) {
  WeightOrder{weights_, tiebreak_}.validate();
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  check_same_ambient(a, b);
  if (a.num_vars() != num_vars())
    throw PreconditionError("monomial and order have different numbers of variables");
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  if (!weights_.empty()) {
    // Weights are positive 64-bit; exponents 32-bit. 128 bits avoid overflow.
    __extension__ using Wide = __int128;
    Wide wa = 0, wb = 0;
    for (std::size_t i = 0; i < ea.size(); ++i) {
      wa += static_cast<Wide>(weights_[i]) * ea[i];
      wb += static_cast<Wide>(weights_[i]) * eb[i];
    }
    if (wa != wb) return wa < wb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const auto& prio = tiebreak_.priority;
  if (tiebreak_.kind == OrderKind::lex) {
    for (VarIndex v : prio) {
      if (ea[v] != eb[v]) return ea[v] < eb[v] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  for (auto it = prio.rbegin(); it != prio.rend(); ++it) {
    VarIndex v = *it;
    if (ea[v] != eb[v]) return ea[v] > eb[v] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const TermOrder& order) {
  return order.compare(a, b);
}

// Binomial ------------------------------------------------------------------

Binomial Binomial::monomial(Monomial m) { return Binomial(std::move(m), std::nullopt); }

Binomial Binomial::difference(Monomial lead, Monomial trail) {
  check_same_ambient(lead, trail);
  if (lead == trail) throw PreconditionError("u - u is the zero element");
  return Binomial(std::move(lead), std::move(trail));
}

Monomial Binomial::initial_term(const TermOrder& order) const {
  if (!trail_ || order.greater(lead_, *trail_)) return lead_;
  return *trail_;
}

Binomial Binomial::normalized(const TermOrder& order) const {
  if (!trail_ || order.greater(lead_, *trail_)) return *this;
  return Binomial(*trail_, lead_);
}

bool Binomial::is_homogeneous() const { return !trail_ || lead_.degree() == trail_->degree(); }

bool Binomial::same_element(const Binomial& other) const {
  if (*this == other) return true;
  return trail_ && other.trail_ && lead_ == *other.trail_ && *trail_ == other.lead_;
}

Monomial initial_term(const Binomial& f, const TermOrder& order) { return f.initial_term(order); }

LinearForm LinearForm::var(VarIndex i) { return LinearForm{Kind::variable, i, i}; }

LinearForm LinearForm::diff(VarIndex a, VarIndex b) {
  if (a == b) throw PreconditionError("difference of a variable with itself");
  return LinearForm{Kind::difference, std::min(a, b), std::max(a, b)};
}

Binomial LinearForm::to_binomial(std::size_t num_vars) const {
  if (kind == Kind::variable) return Binomial::monomial(Monomial::variable(num_vars, anchor));
  return Binomial::difference(Monomial::variable(num_vars, other), Monomial::variable(num_vars, anchor));
}

// IdealPresentation -----------------------------------------------------------

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

IdealPresentation::IdealPresentation(std::size_t n, std::vector<Binomial> gens,
                                     std::vector<std::string> var_names)
    : num_vars(n), names(std::move(var_names)) {
  if (names.empty()) names = default_variable_names(n);
  for (auto& g : gens) {
    bool dup = std::any_of(generators.begin(), generators.end(),
                           [&](const Binomial& h) { return h.same_element(g); });
    if (!dup) generators.push_back(std::move(g));
  }
  validate();
}

bool IdealPresentation::is_monomial() const {
  return std::all_of(generators.begin(), generators.end(), [](const Binomial& g) { return g.is_monomial(); });
}

bool IdealPresentation::is_homogeneous() const {
  return std::all_of(generators.begin(), generators.end(), [](const Binomial& g) { return g.is_homogeneous(); });
}

std::vector<Monomial> IdealPresentation::monomial_generators() const {
  if (!is_monomial()) throw PreconditionError("ideal is not monomial");
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.lead());
  return out;
}

void IdealPresentation::validate() const {
  if (names.size() != num_vars) throw PreconditionError("variable name count differs from ambient n");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.num_vars() != num_vars || (g.trail() && g.trail()->num_vars() != num_vars))
      throw PreconditionError("generator has the wrong number of variables");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[j].same_element(g)) throw PreconditionError("duplicate generator");
  }
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

IdealPresentation monomial_ideal(std::size_t n, std::vector<Monomial> gens, std::vector<std::string> names) {
  std::vector<Binomial> bs;
  for (auto& m : minimal_monomials(std::move(gens))) bs.push_back(Binomial::monomial(std::move(m)));
  return IdealPresentation(n, std::move(bs), std::move(names));
}

bool monomials_regular_sequence(std::span<const Monomial> ms) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!ms[i].coprime(ms[j])) return false;
  return true;
}

// Parser ----------------------------------------------------------------------

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Term {
  int sign = 1;
  bool is_zero = false;
  Monomial mono;
  std::size_t pos = 0;
};

class IdealParser {
 public:
  IdealParser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  IdealPresentation run() {
    std::vector<Binomial> gens;
    for (;;) {
      skip_blanks();
      if (at_end()) break;
      if (is_separator(peek())) {
        ++pos_;
        continue;
      }
      gens.push_back(generator());
      skip_blanks();
      if (!at_end() && !is_separator(peek()))
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
    return IdealPresentation(names_.size(), std::move(gens), names_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  static bool is_separator(char c) { return c == ',' || c == ';' || c == '\n'; }

  void skip_blanks() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  Binomial generator() {
    const std::size_t start = pos_;
    std::vector<Term> terms;
    terms.push_back(term(true));
    for (;;) {
      skip_blanks();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      terms.push_back(term(false));
    }
    std::erase_if(terms, [](const Term& t) { return t.is_zero; });
    if (terms.size() > 2) throw ParseError("more than two terms in a generator", terms[2].pos);
    if (terms.empty()) throw ParseError("zero generator", start);
    if (terms.size() == 1) return Binomial::monomial(std::move(terms[0].mono));
    if (terms[0].sign == terms[1].sign)
      throw ParseError("coefficient outside {+1, -1}: a binomial must be a difference u - v", terms[1].pos);
    if (terms[0].mono == terms[1].mono) throw ParseError("generator u - u is zero", start);
    Term& plus = terms[0].sign > 0 ? terms[0] : terms[1];
    Term& minus = terms[0].sign > 0 ? terms[1] : terms[0];
    return Binomial::difference(std::move(plus.mono), std::move(minus.mono));
  }

  Term term(bool first) {
    skip_blanks();
    Term t;
    t.pos = pos_;
    t.mono = Monomial(names_.size());
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      t.sign = peek() == '-' ? -1 : 1;
      ++pos_;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos_);
    }
    bool need_factor = true;
    while (need_factor) {
      skip_blanks();
      factor(t);
      skip_blanks();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    return t;
  }

  void factor(Term& t) {
    if (at_end()) throw ParseError("unexpected end of input, expected a variable", pos_);
    const std::size_t fpos = pos_;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto value = integer();
      if (value == 0) {
        t.is_zero = true;
      } else if (value != 1) {
        throw ParseError("coefficient outside {+1, -1}", fpos);
      }
      return;
    }
    if (!is_ident_start(c)) throw ParseError(std::string("unexpected character '") + c + "'", fpos);
    while (!at_end() && is_ident_char(peek())) ++pos_;
    std::string name(text_.substr(fpos, pos_ - fpos));
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw ParseError("unknown variable '" + name + "'", fpos);
    std::uint64_t power = 1;
    skip_blanks();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_blanks();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected an exponent after '^'", pos_);
      power = integer();
    }
    auto idx = static_cast<VarIndex>(it - names_.begin());
    std::vector<Exponent> e(t.mono.exponents().begin(), t.mono.exponents().end());
    std::uint64_t total = e[idx] + power;
    if (total > 1'000'000) throw ParseError("exponent too large", fpos);
    e[idx] = static_cast<Exponent>(total);
    t.mono = Monomial(std::move(e));
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 1'000'000'000ULL) throw ParseError("integer too large", start);
      ++pos_;
    }
    return v;
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

// Natural ordering: alphabetic prefix, then numeric suffix by value.
bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    std::string num = s.substr(k);
    return std::pair<std::string, std::string>(s.substr(0, k), num);
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na < nb;
}

}  // namespace

IdealPresentation parse_ideal(std::string_view text, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& n = names[i];
    if (n.empty() || !is_ident_start(n[0]) || !std::all_of(n.begin(), n.end(), is_ident_char))
      throw ParseError("invalid variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names[j] == n) throw ParseError("duplicate variable name '" + n + "'");
  }
  return IdealParser(text, names).run();
}

std::vector<std::string> infer_variable_names(std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (is_ident_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      std::string name(text.substr(i, j - i));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  std::sort(names.begin(), names.end(), natural_less);
  return names;
}

// Printing ----------------------------------------------------------------------

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& f, const std::vector<std::string>& names) {
  std::string out = to_string(f.lead(), names);
  if (f.trail()) out += " - " + to_string(*f.trail(), names);
  return out;
}

std::string to_string(const LinearForm& l, const std::vector<std::string>& names) {
  auto name = [&](VarIndex i) { return i < names.size() ? names[i] : "x" + std::to_string(i + 1); };
  if (l.is_variable()) return name(l.anchor);
  return name(l.other) + " - " + name(l.anchor);
}

std::string to_string(const IdealPresentation& ideal) {
  std::string out;
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators[i], ideal.names);
  }
  return out;
}

// JSON ----------------------------------------------------------------------------

void to_json(nlohmann::json& j, const Monomial& m) {
  j = nlohmann::json::array();
  for (auto e : m.exponents()) j.push_back(e);
}

void from_json(const nlohmann::json& j, Monomial& m) {
  m = Monomial(j.get<std::vector<Exponent>>());
}

void to_json(nlohmann::json& j, const LinearForm& l) {
  if (l.is_variable()) {
    j = nlohmann::json{{"var", l.anchor}};
  } else {
    j = nlohmann::json{{"diff", {l.anchor, l.other}}};
  }
}

void from_json(const nlohmann::json& j, LinearForm& l) {
  if (j.contains("var")) {
    l = LinearForm::var(j.at("var").get<VarIndex>());
  } else {
    auto d = j.at("diff").get<std::vector<VarIndex>>();
    if (d.size() != 2) throw ParseError("a difference needs two indices");
    l = LinearForm::diff(d[0], d[1]);
  }
}

void to_json(nlohmann::json& j, const MonomialOrder& o) {
  j = nlohmann::json{{"kind", o.kind == OrderKind::lex ? "lex" : "degrevlex"}, {"priority", o.priority}};
}

void from_json(const nlohmann::json& j, MonomialOrder& o) {
  auto kind = j.at("kind").get<std::string>();
  if (kind != "lex" && kind != "degrevlex") throw ParseError("unknown order kind '" + kind + "'");
  o = MonomialOrder::with_priority(kind == "lex" ? OrderKind::lex : OrderKind::degrevlex,
                                   j.at("priority").get<std::vector<VarIndex>>());
}

void to_json(nlohmann::json& j, const TermOrder& o) {
  j = nlohmann::json(o.tiebreak());
  if (o.has_weights()) j["weights"] = o.weights();
}

void to_json(nlohmann::json& j, const IdealPresentation& ideal) {
  j = nlohmann::json{{"num_vars", ideal.num_vars}, {"names", ideal.names}, {"generators", ideal.generators}};
}

void from_json(const nlohmann::json& j, IdealPresentation& ideal) {
  auto n = j.at("num_vars").get<std::size_t>();
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  ideal = IdealPresentation(n, j.at("generators").get<std::vector<Binomial>>(), std::move(names));
}

}  // namespace koenig

namespace nlohmann {

koenig::Binomial adl_serializer<koenig::Binomial>::from_json(const json& j) {
  auto lead = j.at("lead").get<koenig::Monomial>();
  if (!j.contains("trail") || j.at("trail").is_null()) return koenig::Binomial::monomial(std::move(lead));
  return koenig::Binomial::difference(std::move(lead), j.at("trail").get<koenig::Monomial>());
}

void adl_serializer<koenig::Binomial>::to_json(json& j, const koenig::Binomial& f) {
  j = json{{"lead", f.lead()}};
  j["trail"] = f.trail() ? json(*f.trail()) : json(nullptr);
}

}  // namespace nlohmann
