"""
Falsifying the doomed candidates
================================

Impossibility claims cannot be confirmed by testing, but the natural
candidate constructions they rule out can be refuted concretely.  Each
registry candidate comes with a deterministic grid-then-random search that
returns a replayable witness: specific vectors, a property, and the
mismatch between expected and observed behaviour.
"""

from epipool import falsify, replay_witness
from epipool.spaces import format_vector
from epipool.verifier import FALSIFY_REGISTRY, TrialPlan

plan = TrialPlan(trials=5_000)

for name in sorted(FALSIFY_REGISTRY):
    cand = FALSIFY_REGISTRY[name]
    witness = falsify(name, plan)
    assert witness is not None, name
    vecs = "; ".join(format_vector(v) for v in witness.vectors)
    print(f"{name}")
    print(f"  claim under test : {cand.summary}")
    print(f"  witness          : {vecs}")
    where = f"property {witness.prop}"
    if witness.q:
        where += f" (subset {list(witness.q)})"
    print(f"  mismatch         : {where}: expected {witness.expected}, "
          f"observed {witness.observed}")
    print(f"  replays exactly  : {replay_witness(witness)}")
    print()

print("note: a refuted candidate shows that this construction fails; the")
print("impossibility statements themselves are beyond what search can prove.")
