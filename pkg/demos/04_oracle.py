# %% [markdown]
# # Brute-force graded dimensions
#
# The oracle never looks at Grothendieck polynomials: it builds the degree-k
# piece of the ideal from monomial multiples of the Fulton generators and
# takes an exact integer rank.  Agreement with the K-polynomial series is a
# check on the whole pipeline.

# %%
from matschubert.hilbert import AmbientSpec
from matschubert.ideal import TooLarge, cross_check
from matschubert.perm import bigrassmannian, parse

print(cross_check(parse("132"), AmbientSpec.full(3), 4).format())

# %% [markdown]
# The determinantal ideal of 2x2 minors of a generic 3x3 matrix is the
# effective ideal of a bigrassmannian permutation.

# %%
w = bigrassmannian(1, 3, 3)
print(w, cross_check(w, AmbientSpec.effective(w), 4).format(), sep="\n")

# %%
try:
    cross_check(parse("25314"), AmbientSpec.full(5), 6)
except TooLarge as exc:
    print("refused:", exc)
