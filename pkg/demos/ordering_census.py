"""Census of fermion-to-qubit mode orderings for the bell family.

Each way of assigning the five modes to register slots gives its own qubit
model, and they do not agree: only some orderings produce a negativity that
settles to a q_R-independent value at maximal acceleration.  This script
classifies all 24 orderings that keep Alice in the first slot and prints the
spread of endpoint negativity over a grid of q_R for each.

Run:  python3 demos/ordering_census.py
"""

from unruhsim import (QR_GRID, R_MAX, StateFamily, UnruhParams,
                      classify_orderings, negativity, reduced_state)

FAMILY = StateFamily.bell()

results = classify_orderings(FAMILY)

print("Endpoint negativity spread over q_R in "
      f"{tuple(round(q, 4) for q in QR_GRID)}:\n")
print(f"{'permutation':>13} {'slots':<22} {'spread':>10}  verdict")
for item in results:
    perm = "".join(str(m) for m in item.ordering.permutation)
    slots = item.ordering.mode_names()
    verdict = "convergent" if item.convergent else "spread"
    name = f"  [{item.ordering.name}]" if item.ordering.name else ""
    print(f"{perm:>13} {slots:<22} {item.spread:10.3e}  {verdict}{name}")

convergent = [item for item in results if item.convergent]
print(f"\n{len(convergent)} of {len(results)} Alice-first orderings converge"
      " for this family.")

tail_ii = [item for item in convergent
           if set(item.ordering.permutation[3:]) == {3, 4}]
print(f"All {len(tail_ii)} orderings that push both wedge-II modes to the"
      " last two slots are among them: tracing the register tail then touches"
      " only wedge-II occupation, so no reordering sign crosses the cut.")

values = set()
for item in convergent:
    p = UnruhParams.from_qr(R_MAX, 1.0)
    values.add(round(negativity(reduced_state(FAMILY, p, item.ordering)), 12))
print(f"\nEvery convergent ordering lands on the same endpoint value:"
      f" {sorted(values)}")
