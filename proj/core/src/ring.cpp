#include "milnor/ring.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace milnor {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

RingContext::RingContext(std::uint32_t prime, std::uint32_t rank) : prime_(prime), rank_(rank) {
  if (!is_prime(prime))
    throw RangeError("prime must be a prime number, got " + std::to_string(prime));
  if (rank < 1 || rank > kMaxRank)
    throw RangeError("rank must be in 1.." + std::to_string(kMaxRank) + ", got " +
                     std::to_string(rank));
}

Coeff RingContext::reduce(std::int64_t c) const noexcept {
  auto r = c % static_cast<std::int64_t>(prime_);
  if (r < 0)
    r += prime_;
  return static_cast<Coeff>(r);
}

Coeff RingContext::inverse(Coeff a) const {
  if (a % prime_ == 0)
    throw RangeError("zero has no inverse mod " + std::to_string(prime_));
  // Fermat: a^(l-2).
  Coeff result = 1;
  Coeff base = a % prime_;
  for (std::uint32_t e = prime_ - 2; e != 0; e >>= 1) {
    if (e & 1U)
      result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::string to_string(const Bidegree& b) {
  return "(" + std::to_string(b.m) + "," + std::to_string(b.w) + ")";
}

// ---- Monomial --------------------------------------------------------------

Monomial::Monomial(Exponent tau, std::vector<Exponent> ys, std::uint64_t ext)
    : tau_(tau), ys_(std::move(ys)), ext_(ext) {
  if (ys_.size() > kMaxRank)
    throw RangeError("monomial rank exceeds " + std::to_string(kMaxRank));
  if (ys_.size() < 64 && (ext_ >> ys_.size()) != 0)
    throw RangeError("exterior generator index exceeds rank");
  if (tau_ > kMaxExponent)
    throw RangeError("tau exponent too large");
  for (auto d : ys_)
    if (d > kMaxExponent)
      throw RangeError("y exponent too large");
}

std::uint32_t Monomial::ext_count() const noexcept {
  return static_cast<std::uint32_t>(std::popcount(ext_));
}

std::vector<std::uint32_t> Monomial::ext_indices() const {
  std::vector<std::uint32_t> out;
  for (auto bits = ext_; bits != 0; bits &= bits - 1)
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(bits)));
  return out;
}

std::uint64_t Monomial::y_degree() const noexcept {
  std::uint64_t s = 0;
  for (auto d : ys_)
    s += d;
  return s;
}

bool Monomial::is_one() const noexcept {
  return tau_ == 0 && ext_ == 0 && std::all_of(ys_.begin(), ys_.end(), [](auto d) { return d == 0; });
}

Bidegree Monomial::bidegree() const noexcept {
  const auto s = static_cast<std::int64_t>(ext_count());
  const auto d = static_cast<std::int64_t>(y_degree());
  return {s + 2 * d, s + d + static_cast<std::int64_t>(tau_)};
}

Monomial& Monomial::set_tau(Exponent t) {
  if (t > kMaxExponent)
    throw RangeError("tau exponent too large");
  tau_ = t;
  return *this;
}

Monomial& Monomial::set_y(std::uint32_t i, Exponent d) {
  if (d > kMaxExponent)
    throw RangeError("y exponent too large");
  ys_.at(i) = d;
  return *this;
}

Monomial& Monomial::add_tau(std::uint64_t t) {
  if (t > kMaxExponent - tau_)
    throw RangeError("tau exponent overflow");
  tau_ += static_cast<Exponent>(t);
  return *this;
}

Monomial& Monomial::add_y(std::uint32_t i, std::uint64_t d) {
  auto& e = ys_.at(i);
  if (d > kMaxExponent - e)
    throw RangeError("y exponent overflow");
  e += static_cast<Exponent>(d);
  return *this;
}

Monomial& Monomial::set_ext(std::uint64_t ext) {
  if (ys_.size() < 64 && (ext >> ys_.size()) != 0)
    throw RangeError("exterior generator index exceeds rank");
  ext_ = ext;
  return *this;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.bidegree();
  const auto db = b.bidegree();
  if (da != db)
    return da < db;
  if (a.tau() != b.tau())
    return a.tau() < b.tau();
  if (a.ys() != b.ys())
    return a.ys() < b.ys();
  // Ascending index sequences compared lexicographically.
  auto ea = a.ext();
  auto eb = b.ext();
  while (ea != 0 && eb != 0) {
    const int ia = std::countr_zero(ea);
    const int ib = std::countr_zero(eb);
    if (ia != ib)
      return ia < ib;
    ea &= ea - 1;
    eb &= eb - 1;
  }
  return ea == 0 && eb != 0;
}

std::optional<std::pair<Coeff, Monomial>> multiply(const RingContext& ctx, const Monomial& a,
                                                   const Monomial& b) {
  if (a.rank() != b.rank())
    throw ContextError("monomials of different rank");
  const auto overlap = a.ext() & b.ext();
  const bool two = ctx.prime() == 2;
  if (overlap != 0 && !two)
    return std::nullopt;

  Monomial out = a;
  out.add_tau(b.tau());
  for (std::uint32_t i = 0; i < a.rank(); ++i)
    out.add_y(i, b.y(i));

  if (two) {
    // x_i * x_i = tau * y_i; signs are invisible in characteristic 2.
    for (auto bits = overlap; bits != 0; bits &= bits - 1) {
      out.add_tau(1);
      out.add_y(static_cast<std::uint32_t>(std::countr_zero(bits)), 1);
    }
    out.set_ext(a.ext() ^ b.ext());
    return std::pair{Coeff{1}, std::move(out)};
  }

  // Moving each x_j of b left past the x_i of a with i > j costs a sign.
  std::uint64_t swaps = 0;
  for (auto bits = b.ext(); bits != 0; bits &= bits - 1) {
    const int j = std::countr_zero(bits);
    const std::uint64_t above = j == 63 ? 0 : (~std::uint64_t{0} << (j + 1));
    swaps += static_cast<std::uint64_t>(std::popcount(a.ext() & above));
  }
  out.set_ext(a.ext() | b.ext());
  return std::pair{ctx.sign(swaps), std::move(out)};
}

// ---- Element ---------------------------------------------------------------

namespace {

void require_same_context(const RingContext& a, const RingContext& b) {
  if (!(a == b))
    throw ContextError("elements belong to different rings: (l=" + std::to_string(a.prime()) +
                       ", n=" + std::to_string(a.rank()) + ") vs (l=" + std::to_string(b.prime()) +
                       ", n=" + std::to_string(b.rank()) + ")");
}

void require_rank(const RingContext& ctx, const Monomial& mono) {
  if (mono.rank() != ctx.rank())
    throw ContextError("monomial rank " + std::to_string(mono.rank()) + " does not match ring rank " +
                       std::to_string(ctx.rank()));
}

} // namespace

Element::Element(const RingContext& ctx, const Monomial& mono, Coeff c) : ctx_(ctx) {
  add_term(mono, c);
}

Coeff Element::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

void Element::add_term(const Monomial& mono, Coeff c) {
  require_rank(ctx_, mono);
  c %= ctx_.prime();
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted)
    return;
  it->second = ctx_.add(it->second, c);
  if (it->second == 0)
    terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [mono, c] : o.terms_)
    add_term(mono, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_context(ctx_, o.ctx_);
  for (const auto& [mono, c] : o.terms_)
    add_term(mono, ctx_.neg(c));
  return *this;
}

Element Element::operator-() const {
  Element out(ctx_);
  for (const auto& [mono, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), mono, ctx_.neg(c));
  return out;
}

Element operator*(const Element& a, const Element& b) {
  require_same_context(a.ctx_, b.ctx_);
  const auto& ctx = a.ctx_;
  Element out(ctx);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto prod = multiply(ctx, ma, mb);
      if (prod)
        out.add_term(prod->second, ctx.mul(ctx.mul(ca, cb), prod->first));
    }
  }
  return out;
}

Element make_generator(const RingContext& ctx, GeneratorKind kind, std::optional<std::uint32_t> index) {
  Monomial mono(ctx.rank());
  if (kind == GeneratorKind::Tau) {
    if (index)
      throw RangeError("tau takes no index");
    mono.set_tau(1);
    return Element(ctx, mono);
  }
  if (!index)
    throw RangeError("generator index required");
  if (*index < 1 || *index > ctx.rank())
    throw RangeError("generator index " + std::to_string(*index) + " out of range 1.." +
                     std::to_string(ctx.rank()));
  const auto i = *index - 1;
  if (kind == GeneratorKind::X)
    mono.set_ext(std::uint64_t{1} << i);
  else
    mono.set_y(i, 1);
  return Element(ctx, mono);
}

Element x(const RingContext& ctx, std::uint32_t i) { return make_generator(ctx, GeneratorKind::X, i); }
Element y(const RingContext& ctx, std::uint32_t i) { return make_generator(ctx, GeneratorKind::Y, i); }
Element tau(const RingContext& ctx) { return make_generator(ctx, GeneratorKind::Tau); }
Element one(const RingContext& ctx) { return Element(ctx, Monomial(ctx.rank())); }

Element add(const Element& a, const Element& b) { return a + b; }
Element mul(const Element& a, const Element& b) { return a * b; }

Element scalar_mul(std::int64_t c, const Element& a) {
  const auto& ctx = a.context();
  const Coeff r = ctx.reduce(c);
  Element out(ctx);
  if (r == 0)
    return out;
  for (const auto& [mono, coeff] : a.terms())
    out.add_term(mono, ctx.mul(r, coeff));
  return out;
}

bool is_homogeneous(const Element& a) {
  if (a.is_zero())
    return true;
  const auto first = a.terms().begin()->first.bidegree();
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [&](const auto& t) { return t.first.bidegree() == first; });
}

Bidegree bidegree_of(const Element& a) {
  if (a.is_zero())
    throw DegreeError("the zero element has no bidegree");
  std::set<Bidegree> seen;
  for (const auto& [mono, c] : a.terms())
    seen.insert(mono.bidegree());
  if (seen.size() > 1) {
    std::ostringstream os;
    os << "element is not homogeneous; bidegrees found:";
    for (const auto& b : seen)
      os << ' ' << to_string(b);
    throw DegreeError(os.str());
  }
  return *seen.begin();
}

namespace {

// Calls f for every exponent vector of length parts summing to total.
template <class F>
void for_each_composition(std::uint32_t parts, std::uint64_t total, F&& f) {
  std::vector<Exponent> v(parts, 0);
  auto rec = [&](auto&& self, std::uint32_t pos, std::uint64_t left) -> void {
    if (pos + 1 == parts) {
      v[pos] = static_cast<Exponent>(left);
      f(v);
      return;
    }
    for (std::uint64_t k = left + 1; k-- > 0;) {
      v[pos] = static_cast<Exponent>(k);
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, total);
}

} // namespace

std::vector<Monomial> enumerate_basis(const RingContext& ctx, Bidegree bidegree) {
  std::vector<Monomial> out;
  const auto [m, w] = bidegree;
  if (m < 0 || w < 0 || m > 2 * w)
    return out;
  const std::uint32_t n = ctx.rank();
  if (n >= 64)
    throw RangeError("basis enumeration supports rank <= 63");
  for (std::int64_t s = 0; s <= std::min<std::int64_t>(n, m); ++s) {
    if ((m - s) % 2 != 0)
      continue;
    const std::int64_t d = (m - s) / 2;
    const std::int64_t t = w - s - d;
    if (t < 0)
      continue;
    if (d > kMaxExponent || t > kMaxExponent)
      throw RangeError("bidegree " + to_string(bidegree) + " too large to enumerate");
    std::vector<std::uint64_t> subsets;
    if (s == 0) {
      subsets.push_back(0);
    } else {
      // Gosper's hack: successive masks with s bits set, below 2^n.
      const std::uint64_t limit = std::uint64_t{1} << n;
      for (std::uint64_t mask = (std::uint64_t{1} << s) - 1; mask < limit;) {
        subsets.push_back(mask);
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
    }
    for_each_composition(n, static_cast<std::uint64_t>(d), [&](const std::vector<Exponent>& ys) {
      for (auto mask : subsets)
        out.emplace_back(static_cast<Exponent>(t), ys, mask);
    });
  }
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

} // namespace milnor
