# %% [markdown]
# # Searching for more examples
#
# Enumerate diagonal automorphisms of order up to 12 and all invariant
# quartics with 0/1 coefficients; keep those the criterion certifies.

# %%
import collections

from quartic_torsion import SearchConfig, run_search
from quartic_torsion.search import SearchStats

stats = SearchStats()
hits = run_search(SearchConfig(1, 12), stats)
print(stats.summary())
print(collections.Counter(h.parameters[0] for h in hits))

# %% [markdown]
# Many hits are the same curve seen through a relabelled, shifted or rescaled
# automorphism.  With `dedup=True` only one representative per class is kept.

# %%
for hit in run_search(SearchConfig(1, 12, dedup=True)):
    n, exps, lam = hit.parameters
    print(f"n={n:2d} exps={exps} lambda={lam}  {hit.curve}")
    print("   V:", hit.certificate.v_character, " H03:", hit.certificate.h03_character)

# %% [markdown]
# A wider coefficient alphabet finds more curves in the same families.

# %%
wide = run_search(SearchConfig(9, 9, coefficient_alphabet=(0, 1, -1), max_support=3, dedup=True))
for hit in wide:
    print(hit.parameters, hit.curve)
