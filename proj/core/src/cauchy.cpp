#include "lawvere/cauchy.hpp"

#include <numeric>

#include "lawvere/error.hpp"

namespace lawvere {

EPSeq EPSeq::make(Space space, std::vector<std::size_t> prefix,
                  std::vector<std::size_t> cycle) {
  if (!is_symmetric(space)) {
    throw Error("not-symmetric", "EPSeq requires a symmetric space");
  }
  if (cycle.empty()) throw Error("bad-sequence", "cycle must be nonempty");
  for (std::size_t i : prefix) {
    if (i >= space.size()) throw Error("bad-sequence", "prefix index out of range");
  }
  for (std::size_t i : cycle) {
    if (i >= space.size()) throw Error("bad-sequence", "cycle index out of range");
  }
  return EPSeq(std::move(space), std::move(prefix), std::move(cycle));
}

bool is_cauchy(const EPSeq& s) {
  const auto& cy = s.cycle();
  for (std::size_t i = 0; i < cy.size(); ++i) {
    for (std::size_t j = i + 1; j < cy.size(); ++j) {
      if (!s.space().dist(cy[i], cy[j]).is_zero()) return false;
    }
  }
  return true;
}

namespace {

void require_cauchy(const EPSeq& s) {
  if (!is_cauchy(s)) {
    throw Error("not-cauchy", "sequence cycle is not a zero-cluster");
  }
}

}  // namespace

bool are_equivalent(const EPSeq& a, const EPSeq& b) {
  if (!(a.space() == b.space())) {
    throw Error("space-mismatch", "sequences live on different spaces");
  }
  require_cauchy(a);
  require_cauchy(b);
  const std::size_t start =
      a.prefix().size() > b.prefix().size() ? a.prefix().size() : b.prefix().size();
  const std::size_t period = std::lcm(a.cycle().size(), b.cycle().size());
  for (std::size_t n = start; n < start + period; ++n) {
    if (!a.space().dist(a.value(n), b.value(n)).is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> limits(const EPSeq& s) {
  require_cauchy(s);
  const std::size_t c = s.cycle().front();
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < s.space().size(); ++z) {
    if (s.space().dist(z, c).is_zero()) out.push_back(z);
  }
  return out;
}

Presheaf ell(const EPSeq& s) {
  require_cauchy(s);
  return yoneda(s.space(), s.cycle().front());
}

ExtNN eventual_distance(const EPSeq& a, const EPSeq& b) {
  if (!(a.space() == b.space())) {
    throw Error("space-mismatch", "sequences live on different spaces");
  }
  require_cauchy(a);
  require_cauchy(b);
  return a.space().dist(a.cycle().front(), b.cycle().front());
}

SpaceMap subsequence_map(const EPSeq& s, std::size_t n) {
  require_cauchy(s);
  std::vector<std::size_t> assign(n);
  for (std::size_t k = 0; k < n; ++k) assign[k] = s.value(s.prefix().size() + k);
  return SpaceMap::make(seq_space(n), s.space(), std::move(assign));
}

SpaceMap extend_to_seqbar(const SpaceMap& f, std::size_t target) {
  const std::size_t n = f.dom().size();
  if (!(f.dom() == seq_space(n))) {
    throw Error("bad-domain", "extend_to_seqbar expects a map out of seq_space(n)");
  }
  if (target >= f.cod().size()) {
    throw Error("unknown-object", "target out of range");
  }
  SeqBar bar = seqbar_space(n);
  for (std::size_t k = 0; k < n; ++k) {
    const ExtNN d = max(f.cod().dist(f(k), target), f.cod().dist(target, f(k)));
    if (bar.space.dist(k, n) < d) {
      throw Error("not-a-limit",
                  "target is farther from f(" + std::to_string(k) +
                      ") than the tail bound 2^(1-" + std::to_string(k) + ")",
                  {{"k", std::to_string(k)},
                   {"dist", d.str()},
                   {"bound", bar.space.dist(k, n).str()}});
    }
  }
  std::vector<std::size_t> assign(n + 1);
  for (std::size_t k = 0; k < n; ++k) assign[k] = f(k);
  assign[n] = target;
  return SpaceMap::make(std::move(bar.space), f.cod(), std::move(assign));
}

}  // namespace lawvere
