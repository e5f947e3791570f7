#include "famloc/constructible.hpp"

#include <algorithm>
#include <sstream>

#include "famloc/errors.hpp"

namespace famloc {

namespace {

Ideal unit_ideal(const Ring& r) { return Ideal::unit(r); }

bool has_unit_generator(const Ideal& I) {
  for (const auto& g : I.generators())
    if (g.is_constant()) return true;
  return false;
}

std::string list_string(const std::vector<Polynomial>& gens) {
  std::ostringstream os;
  if (gens.empty()) return "0";
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].to_string();
  return os.str();
}

std::vector<std::string> sorted_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators()) out.push_back(g.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

void require_point(const Ring& r, std::span<const Rational> point) {
  if (point.size() != r->nvars())
    throw PreconditionError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                            std::to_string(r->nvars()));
}

// Product of off ideals; a repeated factor f*f is kept as f since only the
// zero set matters.
Ideal off_product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  std::vector<std::string> seen;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) {
      Polynomial nf = normalize(f), ng = normalize(g);
      Polynomial p = nf == ng ? nf : normalize(f * g);
      std::string key = p.to_string();
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(std::move(key));
      gens.push_back(std::move(p));
    }
  return Ideal(a.ring(), std::move(gens));
}

LocallyClosedPiece intersect_pieces(const LocallyClosedPiece& a, const LocallyClosedPiece& b) {
  Ideal closed = ideal_sum(a.closed, b.closed);
  Ideal off = a.off;
  if (has_unit_generator(a.off)) {
    off = b.off;
  } else if (!has_unit_generator(b.off)) {
    off = off_product(a.off, b.off);
  }
  return {std::move(closed), std::move(off)};
}

ConstructibleSet complement_piece(const LocallyClosedPiece& p) {
  const Ring& r = p.ring();
  std::vector<LocallyClosedPiece> out;
  for (const auto& g : p.closed.generators()) out.push_back({Ideal(r), Ideal(r, {g})});
  if (!p.off.has_no_generators() && !has_unit_generator(p.off)) {
    out.push_back({p.off, unit_ideal(r)});
  } else if (p.off.has_no_generators()) {
    out.push_back({Ideal(r), unit_ideal(r)});
  }
  return ConstructibleSet(r, std::move(out));
}

// Closed part as a canonical ideal without generators coming from the ring
// relations alone; nullopt when the piece is empty.
std::optional<LocallyClosedPiece> tidy_piece(const LocallyClosedPiece& p) {
  const Ring& r = p.ring();
  auto gb = buchberger(p.closed, grevlex_order(*r), {.stop_on_unit = true});
  if (gb.is_unit()) return std::nullopt;
  std::vector<Polynomial> closed;
  if (r->has_relations()) {
    auto rel = buchberger(Ideal(r));
    for (const auto& e : gb.elements)
      if (!normal_form(e, rel).is_zero()) closed.push_back(normalize(e));
  } else {
    for (const auto& e : gb.elements) closed.push_back(normalize(e));
  }
  Ideal closed_ideal(r, closed);
  std::vector<Polynomial> off;
  bool unit = false;
  for (const auto& g : p.off.generators()) {
    Polynomial h = normal_form(g, gb);
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      unit = true;
      break;
    }
    if (radical_membership(h, p.closed)) continue;
    off.push_back(normalize(h));
  }
  if (off.empty() && !unit) return std::nullopt;
  if (unit || contains_unit(ideal_sum(p.closed, Ideal(r, off))))
    return LocallyClosedPiece{closed_ideal, unit_ideal(r)};
  std::sort(off.begin(), off.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); });
  off.erase(std::unique(off.begin(), off.end()), off.end());
  return LocallyClosedPiece{closed_ideal, Ideal(r, std::move(off))};
}

std::string piece_string(const LocallyClosedPiece& p) {
  std::string s = "V(" + list_string(p.closed.generators()) + ")";
  if (!p.is_closed()) s += " \\ V(" + list_string(p.off.generators()) + ")";
  return s;
}

}  // namespace

bool LocallyClosedPiece::is_closed() const { return has_unit_generator(off); }

ConstructibleSet::ConstructibleSet(Ring ring, std::vector<LocallyClosedPiece> pieces)
    : ring_(std::move(ring)), pieces_(std::move(pieces)) {
  for (const auto& p : pieces_) {
    require_same_ring(ring_, p.closed.ring(), "constructible set");
    require_same_ring(ring_, p.off.ring(), "constructible set");
  }
}

ConstructibleSet ConstructibleSet::full(Ring ring) {
  Ideal none(ring);
  Ideal one = unit_ideal(ring);
  return ConstructibleSet(ring, {{std::move(none), std::move(one)}});
}

ConstructibleSet ConstructibleSet::closed(const Ideal& I) {
  return ConstructibleSet(I.ring(), {{I, unit_ideal(I.ring())}});
}

ConstructibleSet ConstructibleSet::open(const Ideal& F) {
  return ConstructibleSet(F.ring(), {{Ideal(F.ring()), F}});
}

ConstructibleSet ConstructibleSet::piece(const Ideal& I, const Ideal& F) {
  require_same_ring(I.ring(), F.ring(), "piece");
  return ConstructibleSet(I.ring(), {{I, F}});
}

std::string ConstructibleSet::to_string() const {
  if (pieces_.empty()) return "∅";
  if (pieces_.size() == 1) return piece_string(pieces_.front());
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += " ∪ ";
    const auto& p = pieces_[i];
    out += p.is_closed() ? piece_string(p) : "(" + piece_string(p) + ")";
  }
  return out;
}

ConstructibleSet unite(const ConstructibleSet& A, const ConstructibleSet& B) {
  require_same_ring(A.ring(), B.ring(), "union");
  auto pieces = A.pieces();
  pieces.insert(pieces.end(), B.pieces().begin(), B.pieces().end());
  return ConstructibleSet(A.ring(), std::move(pieces));
}

ConstructibleSet intersect(const ConstructibleSet& A, const ConstructibleSet& B) {
  require_same_ring(A.ring(), B.ring(), "intersect");
  std::vector<LocallyClosedPiece> out;
  for (const auto& a : A.pieces()) {
    for (const auto& b : B.pieces()) {
      auto p = intersect_pieces(a, b);
      if (!is_empty(p)) out.push_back(std::move(p));
    }
  }
  return ConstructibleSet(A.ring(), std::move(out));
}

ConstructibleSet complement(const ConstructibleSet& A) {
  ConstructibleSet acc = ConstructibleSet::full(A.ring());
  for (const auto& p : A.pieces()) {
    acc = intersect(acc, complement_piece(p));
    if (acc.pieces().empty()) break;
  }
  return acc;
}

ConstructibleSet difference(const ConstructibleSet& A, const ConstructibleSet& B) {
  require_same_ring(A.ring(), B.ring(), "difference");
  ConstructibleSet acc = A;
  for (const auto& p : B.pieces()) {
    if (acc.pieces().empty()) break;
    acc = intersect(acc, complement_piece(p));
  }
  return acc;
}

bool is_empty(const LocallyClosedPiece& piece) {
  if (piece.off.has_no_generators()) return true;
  if (piece.is_closed()) return contains_unit(piece.closed);
  if (contains_unit(piece.closed)) return true;
  for (const auto& g : piece.off.generators())
    if (!radical_membership(g, piece.closed)) return false;
  return true;
}

bool is_empty(const ConstructibleSet& A) {
  return std::all_of(A.pieces().begin(), A.pieces().end(),
                     [](const LocallyClosedPiece& p) { return is_empty(p); });
}

bool contains(const ConstructibleSet& A, const ConstructibleSet& B) {
  require_same_ring(A.ring(), B.ring(), "contains");
  std::vector<LocallyClosedPiece> rest;
  for (const auto& p : B.pieces())
    if (!is_empty(p)) rest.push_back(p);
  ConstructibleSet cur(B.ring(), std::move(rest));
  for (const auto& p : A.pieces()) {
    if (cur.pieces().empty()) return true;
    cur = intersect(cur, complement_piece(p));
  }
  return cur.pieces().empty();
}

bool equals(const ConstructibleSet& A, const ConstructibleSet& B) {
  return contains(A, B) && contains(B, A);
}

bool sample_membership(const LocallyClosedPiece& piece, std::span<const Rational> point) {
  const Ring& r = piece.ring();
  require_point(r, point);
  for (const auto& rel : r->relations())
    if (rel.evaluate(point) != 0) return false;
  for (const auto& g : piece.closed.generators())
    if (g.evaluate(point) != 0) return false;
  for (const auto& g : piece.off.generators())
    if (g.evaluate(point) != 0) return true;
  return false;
}

bool sample_membership(const ConstructibleSet& A, std::span<const Rational> point) {
  require_point(A.ring(), point);
  return std::any_of(A.pieces().begin(), A.pieces().end(), [&](const LocallyClosedPiece& p) {
    return sample_membership(p, point);
  });
}

ConstructibleSet simplify(const ConstructibleSet& A) {
  const Ring& r = A.ring();
  std::vector<LocallyClosedPiece> pieces;
  for (const auto& p : A.pieces()) {
    auto t = tidy_piece(p);
    if (!t) continue;
    auto key = sorted_strings(t->closed);
    bool merged = false;
    for (auto& q : pieces) {
      if (sorted_strings(q.closed) != key) continue;
      if (q.is_closed() || t->is_closed()) {
        q.off = unit_ideal(r);
      } else {
        q.off = ideal_sum(q.off, t->off);
        if (auto again = tidy_piece(q)) q = *again;
      }
      merged = true;
      break;
    }
    if (!merged) pieces.push_back(std::move(*t));
  }

  // A piece whose closure is already covered becomes a closed piece.
  if (pieces.size() > 1) {
    for (auto& p : pieces) {
      if (p.is_closed()) continue;
      ConstructibleSet current(r, pieces);
      if (contains(current, ConstructibleSet::closed(p.closed))) p.off = unit_ideal(r);
    }
  }

  // Drop pieces covered by the others, biggest candidates last.
  std::sort(pieces.begin(), pieces.end(),
            [](const LocallyClosedPiece& a, const LocallyClosedPiece& b) {
              return a.closed.generators().size() > b.closed.generators().size();
            });
  for (std::size_t i = 0; i < pieces.size() && pieces.size() > 1;) {
    std::vector<LocallyClosedPiece> others;
    for (std::size_t j = 0; j < pieces.size(); ++j)
      if (j != i) others.push_back(pieces[j]);
    if (contains(ConstructibleSet(r, others), ConstructibleSet(r, {pieces[i]}))) {
      pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  std::sort(pieces.begin(), pieces.end(),
            [](const LocallyClosedPiece& a, const LocallyClosedPiece& b) {
              return piece_string(a) < piece_string(b);
            });
  return ConstructibleSet(r, std::move(pieces));
}

Ideal closure_ideal(const ConstructibleSet& A) {
  const Ring& r = A.ring();
  std::optional<Ideal> acc;
  for (const auto& p : A.pieces()) {
    if (is_empty(p)) continue;
    Ideal part = p.closed;
    if (!p.is_closed()) {
      std::optional<Ideal> sat;
      for (const auto& g : p.off.generators()) {
        Ideal s = saturate(p.closed, g);
        sat = sat ? ideal_intersection(*sat, s) : s;
      }
      part = *sat;
    }
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  if (!acc) return unit_ideal(r);
  return Ideal(r, buchberger(*acc).elements);
}

}  // namespace famloc
