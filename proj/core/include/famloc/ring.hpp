#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace famloc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector over the full variable list of a ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e) { exps_[i] = e; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  unsigned total_degree() const;
  unsigned degree_in(std::span<const std::size_t> vars) const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  bool operator==(const Monomial&) const = default;
  /// Plain lexicographic comparison of exponent vectors; used for containers,
  /// not a term order.
  std::strong_ordering operator<=>(const Monomial& other) const {
    return exps_ <=> other.exps_;
  }

  std::size_t hash() const;

 private:
  std::vector<std::uint32_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Block term order. Each block is compared in turn; inside a block the
/// comparison is lex or degree-reverse-lex on the listed variable indices.
class TermOrder {
 public:
  enum class Kind { Lex, Grevlex };
  struct Block {
    Kind kind;
    std::vector<std::size_t> vars;
  };

  TermOrder() = default;
  explicit TermOrder(std::vector<Block> blocks, std::size_t nvars);

  static TermOrder lex(std::vector<std::size_t> vars, std::size_t nvars);
  static TermOrder grevlex(std::vector<std::size_t> vars, std::size_t nvars);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t nvars() const { return nvars_; }

  bool operator==(const TermOrder& other) const;

 private:
  std::vector<Block> blocks_;
  std::size_t nvars_ = 0;
};

enum class VarBlock { Parameter, Main, Aux };

struct Term {
  Monomial monomial;
  Rational coefficient;
};

class RingSpec;
using Ring = std::shared_ptr<const RingSpec>;
class Polynomial;

/// Polynomial ring over Q with parameter, main and auxiliary variable blocks
/// and optional defining relations. Variables are indexed parameters first,
/// then main, then aux.
class RingSpec : public std::enable_shared_from_this<RingSpec> {
 public:
  static Ring make(std::vector<std::string> params, std::vector<std::string> main,
                   std::vector<std::string> aux = {});

  /// Same symbols, with the given relations. Each relation must live in a
  /// ring with identical symbol blocks.
  Ring with_relations(const std::vector<Polynomial>& relations) const;

  const std::vector<std::string>& params() const { return params_; }
  const std::vector<std::string>& main_vars() const { return main_; }
  const std::vector<std::string>& aux_vars() const { return aux_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::size_t nvars() const { return symbols_.size(); }
  std::size_t nparams() const { return params_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;
  VarBlock block_of(std::size_t index) const;
  const std::string& name(std::size_t index) const { return symbols_[index]; }

  std::vector<std::size_t> param_indices() const;
  std::vector<std::size_t> main_indices() const;
  std::vector<std::size_t> aux_indices() const;
  /// Main and aux together: the variables a fiber lives in.
  std::vector<std::size_t> fiber_indices() const;

  std::vector<Polynomial> relations() const;
  const std::vector<std::vector<Term>>& relation_terms() const { return relations_; }
  bool has_relations() const { return !relations_.empty(); }

  /// grevlex on main+aux, then grevlex on parameters.
  const TermOrder& default_order() const { return default_order_; }

  /// Parameters only; keeps relations that use parameters only.
  Ring param_ring() const;
  /// Main and aux only; keeps relations free of parameters.
  Ring fiber_ring() const;
  /// Adds variables to a block; relations carry over.
  Ring with_extra(VarBlock block, const std::vector<std::string>& names) const;
  /// Same symbols, re-partitioned into blocks. Relations carry over.
  Ring retag(std::vector<std::string> params, std::vector<std::string> main,
             std::vector<std::string> aux) const;
  /// Drops the named symbols and every relation that uses them.
  Ring without(const std::vector<std::string>& names) const;

  /// A symbol name based on `base` that is not yet used in this ring.
  std::string fresh_symbol(std::string_view base) const;

  bool same_symbols(const RingSpec& other) const;
  bool operator==(const RingSpec& other) const;

  std::string describe() const;

 private:
  RingSpec() = default;
  void finish();

  std::vector<std::string> params_;
  std::vector<std::string> main_;
  std::vector<std::string> aux_;
  std::vector<std::string> symbols_;
  std::vector<std::vector<Term>> relations_;
  TermOrder default_order_;
};

bool rings_equal(const Ring& a, const Ring& b);
void require_same_ring(const Ring& a, const Ring& b, std::string_view op);

/// The standard order constructors used throughout.
TermOrder grevlex_order(const RingSpec& ring);
TermOrder lex_order(const RingSpec& ring);
/// Block order: the listed variables (grevlex) strictly above the rest
/// (grevlex). Suitable for eliminating `outer`.
TermOrder elimination_order(const RingSpec& ring, const std::vector<std::size_t>& outer);
/// Fiber variables ordered by `fiber_kind`, strictly above the parameters.
TermOrder fiber_order(const RingSpec& ring, TermOrder::Kind fiber_kind);

}  // namespace famloc
