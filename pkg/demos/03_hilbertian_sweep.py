# %% [markdown]
# # Degree bound and Hilbertian property over S_n
#
# deg G_w never exceeds |lambda(w)|, with equality exactly for dominant w.
# Consequently the postulation number deg K - N is negative in the full
# ambient, and in the effective ambient it is negative unless w is dominant.

# %%
from collections import Counter

from matschubert import diagram
from matschubert.groth import groth_degree
from matschubert.perm import enumerate_permutations
from matschubert.verify import run_verification

gaps = Counter()
for w in enumerate_permutations(5):
    gaps[len(diagram.effective_region(w)) - groth_degree(w)] += 1
print("|lambda(w)| - deg G_w over S_5:", sorted(gaps.items()))

# %%
for n in range(1, 7):
    checks = ("degree-bound", "binomial-bound", "hilbertian-full", "hilbertian-effective")
    print(run_verification(n, checks).format())
    print()
