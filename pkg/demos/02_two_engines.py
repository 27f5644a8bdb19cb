# %% [markdown]
# # Transition recursion vs pipe dreams
#
# The transition engine recurses down to G_id = 1.  The pipe-dream engine
# walks every subset of the staircase once and buckets signed monomials by
# Demazure product.  They should agree on every permutation.

# %%
import time

from matschubert.groth import TransitionEngine, pipe_dream_table, pipe_dreams
from matschubert.perm import enumerate_permutations, normalize, parse

for d in pipe_dreams(parse("132"), 3):
    print(list(d.crosses), "word", d.word(), "weight", d.weight())

# %%
for n in range(1, 7):
    start = time.perf_counter()
    engine = TransitionEngine(check_invariants=True)
    table = pipe_dream_table(n)
    agree = sum(engine(w) == table[normalize(w).word] for w in enumerate_permutations(n))
    print(f"S_{n}: {agree} agree, {time.perf_counter() - start:.2f}s")
