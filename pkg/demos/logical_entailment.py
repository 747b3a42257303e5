"""
Propositional reasoning through pooled vectors
==============================================

With one property per possible world (read as "this world is excluded"),
vectors carry knowledge bases.  Pooling the vectors of two KBs yields a
vector for their union, and a single sign test on a subset score answers
entailment queries, in exact agreement with brute-force model checking.
"""

from epipool import encode, kb_to_state, oracle_entails, parse_formula, parse_kb, psi
from epipool.epistemic import PropertySpace, state_to_kb, union_states
from epipool.logic import format_clause, prime_implicates
from epipool.pooling import pool
from epipool.spaces import make_space

kb_one = parse_kb("atoms: a b\na b\n")      # a or b
kb_two = parse_kb("atoms: a b\n-a b\n")     # not a, or b

space = make_space("max-weak-nonpos", properties=PropertySpace.logical(kb_one.atoms))

s = kb_to_state(kb_one)
t = kb_to_state(kb_two)
v = encode(space, s)
w = encode(space, t)
pooled = pool(space.operator, v, w)
print("first KB excludes worlds ", sorted(s.members), "->", v)
print("second KB excludes worlds", sorted(t.members), "->", w)
print("pooled vector:", pooled)

# Queries: the linear subset scorer sums coordinates of the countermodels.
merged_kb = state_to_kb(union_states(s, t))
for text in ("b", "a", "a -> b", "a & b", "T"):
    formula = parse_formula(text, kb_one.atoms)
    by_vector = psi(space, "linear", formula, pooled)
    by_oracle = oracle_entails(merged_kb, formula)
    marker = "ENTAILED" if by_vector else "NOT-ENTAILED"
    agreement = "agrees" if by_vector == by_oracle else "DISAGREES"
    print(f"  {text:10s} -> {marker:13s} ({agreement} with model enumeration)")

# The deductively closed clause set is never materialised, but for small
# vocabularies its prime implicates can be reconstructed on demand.
remaining = frozenset(range(4)) - union_states(s, t).members
primes = prime_implicates(remaining, kb_one.atoms)
print("prime implicates of the pooled knowledge:",
      ", ".join(format_clause(c, kb_one.atoms) for c in primes))
