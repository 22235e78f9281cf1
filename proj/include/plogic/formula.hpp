#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plogic/admissible.hpp"
#include "plogic/likelihood.hpp"

namespace plogic {

enum class FormulaKind { Atom, Not, And, Or, Implies };

/*! \brief Immutable propositional formula over named atoms.
 *
 * Build with the static factories or parse_formula. Subtrees are shared, so
 * copies are cheap and equality is structural.
 */
class Formula {
public:
  /// Atom names must look like identifiers (letter or underscore first,
  /// then letters, digits, underscores) and must not collide with the
  /// operator keywords not/and/or/implies.
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  FormulaKind kind() const noexcept;

  /// Atom nodes only.
  const std::string& atom_name() const;
  /// Negation nodes only.
  Formula child() const;
  /// Binary nodes only.
  Formula lhs() const;
  Formula rhs() const;

  /// Distinct atom names in order of first appearance (left to right).
  std::vector<std::string> atoms() const;

  /// Text form with the fewest parentheses that re-parse to this tree.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/*! \brief Parses formula text.
 *
 * Grammar: atoms are identifiers; `not`/`!` negate; `and`/`&` and `or`/`|`
 * are left-associative; `=>` (word form `implies`) is right-associative.
 * Precedence, tightest first: not, and, or, =>. Throws ParseError carrying
 * the 1-based position and the expected-token set.
 */
Formula parse_formula(std::string_view text);

/// Atom bindings for evaluation. Atoms used together must share one arity.
using Environment = std::map<std::string, Likelihood, std::less<>>;

/*! \brief Bottom-up evaluation over an environment.
 *
 * Each connective node tensors its children's likelihoods and applies the
 * matching connective map, so repeated occurrences of an atom are treated as
 * independent events. Use compile_boolean for shared-variable semantics.
 * Throws SemanticError for unbound atoms, DimensionError on arity mismatch.
 */
Likelihood evaluate(const Formula& f, const Environment& env);

/*! \brief Compiles a formula over two-valued atoms into one AdmissibleMap.
 *
 * The result maps the 2^N tensor classes of the distinct atoms (atom_order[0]
 * major, class 0 = true) straight to the formula's truth value, so repeated
 * occurrences of an atom refer to the same variable. Applying it to the
 * tensor product of the atoms' likelihoods gives the shared-variable reading.
 */
AdmissibleMap compile_boolean(const Formula& f,
                              std::span<const std::string> atom_order);

/// Same, with atoms in first-appearance order.
AdmissibleMap compile_boolean(const Formula& f);

}  // namespace plogic
