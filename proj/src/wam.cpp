#include "convcode/wam.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "convcode/errors.hpp"

namespace convcode {

WAM::WAM(const Field& f, std::size_t delta) : field_(&f), delta_(delta) {
  const std::uint64_t n = checked_power(f.order(), delta, kHardMaxFieldOrder * 64ULL);
  if (n > kHardMaxFieldOrder * 64ULL) throw BudgetExceeded("WAM: too many states");
  rows_.resize(static_cast<std::size_t>(n));
}

const WPoly& WAM::operator()(std::size_t x, std::size_t y) const {
  static const WPoly zero;
  const auto& r = rows_.at(x);
  auto it = std::lower_bound(r.begin(), r.end(), y, [](const Entry& e, std::size_t c) { return e.first < c; });
  return it != r.end() && it->first == y ? it->second : zero;
}

void WAM::set(std::size_t x, std::size_t y, WPoly value) {
  auto& r = rows_.at(x);
  if (y >= rows_.size()) throw std::out_of_range("WAM: column out of range");
  auto it = std::lower_bound(r.begin(), r.end(), y, [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == y) {
    if (value.is_zero())
      r.erase(it);
    else
      it->second = std::move(value);
  } else if (!value.is_zero()) {
    r.insert(it, {y, std::move(value)});
  }
}

std::string WAM::to_string() const {
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < size(); ++s) {
    std::string l;
    for (Elem e : vector_at(*field_, delta_, s)) l += field_->format(e);
    labels.push_back(l.empty() ? "-" : l);
  }
  std::vector<std::vector<std::string>> cells(size(), std::vector<std::string>(size()));
  std::size_t width = 1;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y) {
      cells[x][y] = (*this)(x, y).to_string();
      width = std::max(width, cells[x][y].size());
    }
  std::size_t label_width = 1;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  width = std::max(width, label_width);
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  os << pad("", label_width);
  for (std::size_t y = 0; y < size(); ++y) os << "  " << pad(labels[y], width);
  os << "\n";
  for (std::size_t x = 0; x < size(); ++x) {
    os << pad(labels[x], label_width);
    for (std::size_t y = 0; y < size(); ++y) os << "  " << pad(cells[x][y], width);
    os << "\n";
  }
  return os.str();
}

WAM wam(const PolyMatrix& g, const Budgets& budgets) {
  const std::uint64_t q = g.field().order();
  // Check the state budget before building the realization.
  int delta = 0;
  for (int d : g.row_degrees()) delta += std::max(d, 0);
  if (checked_power(q, static_cast<std::uint64_t>(delta), budgets.states) > budgets.states)
    throw BudgetExceeded("WAM: q^delta exceeds the state budget of " + std::to_string(budgets.states));
  return wam(ccf(g), budgets);
}

WAM wam(const Realization& r, const Budgets& budgets) {
  const Field& f = r.field();
  const std::uint64_t q = f.order();
  const std::size_t delta = r.state_dim();
  const std::size_t k = r.inputs();
  if (checked_power(q, delta, budgets.states) > budgets.states)
    throw BudgetExceeded("WAM: q^delta exceeds the state budget of " + std::to_string(budgets.states));
  if (checked_power(q, delta + k, budgets.enumeration) > budgets.enumeration)
    throw BudgetExceeded("WAM: q^(delta+k) transitions exceed the enumeration budget");

  WAM out(f, delta);
  // Input contributions uB and uD are shared by all states.
  std::vector<FVector> ub;
  std::vector<FVector> ud;
  FVector u(k, 0);
  do {
    ub.push_back(r.B.left_mul(u));
    ud.push_back(r.D.left_mul(u));
  } while (next_vector(f, u));

  FVector x(delta, 0);
  std::size_t xi = 0;
  do {
    const FVector xa = r.A.left_mul(x);
    const FVector xc = r.C.left_mul(x);
    std::map<std::size_t, WPoly> row;
    for (std::size_t i = 0; i < ub.size(); ++i) {
      const std::size_t y = vector_index(f, add(f, xa, ub[i]));
      row[y].add_term(hamming_weight(add(f, xc, ud[i])));
    }
    for (auto& [y, p] : row) out.set(xi, y, std::move(p));
    ++xi;
  } while (next_vector(f, x));
  return out;
}

WAM tilde(const WAM& w) {
  WAM out(w);
  out.set(0, 0, WPoly());
  return out;
}

WAM hat(const WAM& w) {
  if (w(0, 0).coeff(0) < 1) throw std::invalid_argument("WAM entry (0,0) lacks the constant term 1");
  WAM out(w);
  out.set(0, 0, w(0, 0) - WPoly::one());
  return out;
}

std::uint64_t general_linear_order(std::uint64_t q, std::uint64_t d, std::uint64_t limit) {
  const std::uint64_t qd = checked_power(q, d, limit);
  if (qd > limit) return limit + 1;
  std::uint64_t order = 1;
  std::uint64_t qi = 1;
  for (std::uint64_t i = 0; i < d; ++i) {
    const std::uint64_t factor = qd - qi;
    if (order > limit / factor) return limit + 1;
    order *= factor;
    qi *= q;
  }
  return order;
}

namespace {

// Invariant of a state under any WAM-preserving relabeling: sorted outgoing
// entries, sorted incoming entries and the loop entry.
struct Fingerprint {
  std::vector<WPoly> out;
  std::vector<WPoly> in;
  WPoly loop;
  bool operator==(const Fingerprint& o) const { return out == o.out && in == o.in && loop == o.loop; }
};

std::vector<Fingerprint> fingerprints(const WAM& w) {
  std::vector<Fingerprint> fp(w.size());
  for (std::size_t x = 0; x < w.size(); ++x)
    for (const auto& [y, p] : w.row(x)) {
      fp[x].out.push_back(p);
      fp[y].in.push_back(p);
      if (x == y) fp[x].loop = p;
    }
  for (auto& f : fp) {
    std::sort(f.out.begin(), f.out.end());
    std::sort(f.in.begin(), f.in.end());
  }
  return fp;
}

class StateIsomorphismSearch {
 public:
  StateIsomorphismSearch(const WAM& w, const WAM& w2)
      : w_(w), w2_(w2), f_(w.field()), q_(f_.order()), d_(w.delta()), fp_(fingerprints(w)), fp2_(fingerprints(w2)) {}

  std::optional<FMatrix> run() {
    rows_.assign(d_, FVector(d_, 0));
    images_.assign(w_.size(), 0);
    in_span_.assign(w_.size(), false);
    in_span_[0] = true;
    span_ = {0};
    if (!(fp_[0] == fp2_[0])) return std::nullopt;
    if (!check_span()) return std::nullopt;
    if (assign(0)) {
      FMatrix t(f_, d_, d_);
      for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) t(i, j) = rows_[i][j];
      return t;
    }
    return std::nullopt;
  }

 private:
  // Row i of T is the image of the i-th unit vector.
  bool assign(std::size_t i) {
    if (i == d_) return true;
    const std::size_t unit = vector_index(f_, unit_vector(i));
    FVector cand(d_, 0);
    do {
      const std::size_t ci = vector_index(f_, cand);
      if (ci == 0 || image_used(ci)) continue;
      if (!(fp_[unit] == fp2_[ci])) continue;
      rows_[i] = cand;
      const std::vector<std::size_t> saved_span = span_;
      if (extend_span(i) && check_span() && assign(i + 1)) return true;
      for (std::size_t s : span_)
        if (std::find(saved_span.begin(), saved_span.end(), s) == saved_span.end()) in_span_[s] = false;
      span_ = saved_span;
    } while (next_vector(f_, cand));
    return false;
  }

  FVector unit_vector(std::size_t i) const {
    FVector e(d_, 0);
    e[i] = 1;
    return e;
  }

  bool image_used(std::size_t ci) const {
    for (std::size_t s : span_)
      if (images_[s] == ci) return true;
    return false;
  }

  // Adds all states x + c e_i (x in the current span, c != 0); false if an
  // image collides (T singular) or a fingerprint mismatches.
  bool extend_span(std::size_t i) {
    const std::vector<std::size_t> old = span_;
    std::vector<bool> image_taken(w2_.size(), false);
    for (std::size_t s : old) image_taken[images_[s]] = true;
    for (Elem c = 1; c < q_; ++c) {
      for (std::size_t s : old) {
        FVector x = vector_at(f_, d_, s);
        x[i] = c;
        const std::size_t xi = vector_index(f_, x);
        const FVector img = add(f_, vector_at(f_, d_, images_[s]), scale(f_, c, rows_[i]));
        const std::size_t ii = vector_index(f_, img);
        if (image_taken[ii]) return false;
        image_taken[ii] = true;
        images_[xi] = ii;
        in_span_[xi] = true;
        span_.push_back(xi);
        if (!(fp_[xi] == fp2_[ii])) return false;
      }
    }
    return true;
  }

  // Entries among states of the current span agree after relabeling.
  bool check_span() const {
    std::vector<bool> image_in_span(w2_.size(), false);
    for (std::size_t s : span_) image_in_span[images_[s]] = true;
    for (std::size_t x : span_) {
      std::size_t count = 0;
      for (const auto& [y, p] : w_.row(x)) {
        if (!in_span_[y]) continue;
        ++count;
        if (!(w2_(images_[x], images_[y]) == p)) return false;
      }
      std::size_t count2 = 0;
      for (const auto& [y2, p2] : w2_.row(images_[x]))
        if (image_in_span[y2]) ++count2;
      if (count != count2) return false;
    }
    return true;
  }

  const WAM& w_;
  const WAM& w2_;
  const Field& f_;
  Elem q_;
  std::size_t d_;
  std::vector<Fingerprint> fp_;
  std::vector<Fingerprint> fp2_;
  std::vector<FVector> rows_;
  std::vector<std::size_t> images_;
  std::vector<bool> in_span_;
  std::vector<std::size_t> span_;
};

}  // namespace

bool wam_related_by(const WAM& w, const WAM& w2, const FMatrix& t) {
  if (&w.field() != &w2.field() || w.delta() != w2.delta() || t.rows() != w.delta() || t.cols() != w.delta())
    return false;
  if (!t.is_invertible()) return false;
  const Field& f = w.field();
  std::vector<std::size_t> img(w.size());
  for (std::size_t s = 0; s < w.size(); ++s) img[s] = vector_index(f, t.left_mul(vector_at(f, w.delta(), s)));
  for (std::size_t x = 0; x < w.size(); ++x) {
    if (w.row(x).size() != w2.row(img[x]).size()) return false;
    for (const auto& [y, p] : w.row(x))
      if (!(w2(img[x], img[y]) == p)) return false;
  }
  return true;
}

std::optional<FMatrix> wam_equivalent(const WAM& w, const WAM& w2, const Budgets& budgets) {
  if (&w.field() != &w2.field()) throw std::invalid_argument("wam_equivalent: WAMs over different fields");
  if (w.delta() != w2.delta()) throw std::invalid_argument("wam_equivalent: WAMs of different state dimension");
  const FMatrix id = FMatrix::identity(w.field(), w.delta());
  if (wam_related_by(w, w2, id)) return id;
  if (general_linear_order(w.field().order(), w.delta(), budgets.linear_group) > budgets.linear_group)
    throw BudgetExceeded("wam_equivalent: GL_delta(q) exceeds the search budget");
  auto t = StateIsomorphismSearch(w, w2).run();
  if (t && !wam_related_by(w, w2, *t)) throw std::logic_error("wam_equivalent: search produced an invalid witness");
  return t;
}

}  // namespace convcode
