# %% [markdown]
# # The permutation 25314
#
# Diagram, Fulton generators, Grothendieck polynomial and Hilbert invariants
# for one permutation in S_5.

# %%
from matschubert import diagram
from matschubert.groth import grothendieck
from matschubert.hilbert import AmbientSpec, hilbertian_report
from matschubert.ideal import expand_minor, fulton_generators
from matschubert.perm import coxeter_length, parse

w = parse("25314")
print(diagram.render(w))
print("length", coxeter_length(w))
print("essential set", list(diagram.essential_set(w)))
print("|lambda(w)| =", len(diagram.effective_region(w)))

# %% [markdown]
# Fulton's generators come from the two essential boxes: three variables from
# the rank-0 box (3, 1) and the 2x2 minors of the 2x4 corner from (2, 4).

# %%
gens = fulton_generators(w, True, AmbientSpec.full(5))
for m in gens.minors:
    print(m.rows, m.cols, expand_minor(m, gens.variables).format(lambda k: "z{}{}".format(*gens.variables[k - 1])))

# %%
G = grothendieck(w)
print("G_w =", G)

# %% [markdown]
# Full ambient (N = 25) and effective ambient (N = 9).  Both have negative
# postulation number, so both coordinate rings are Hilbertian.

# %%
for ambient in (AmbientSpec.full(5), AmbientSpec.effective(w)):
    print(hilbertian_report(w, ambient).format())
    print()
