"""
Generating and ranking candidates
=================================

Candidates come from rewriting the input left to right with every applicable
rule. V1 lets single-character rules rewrite anywhere; V2 only at the last
letter. The cutoff keeps the most likely partial rewrites at each step.
"""

# %%
from ngramnorm import GenerationConfig, TrainingPair, build_dictionary, generate, rank_by_dld, rank_by_likelihood
from ngramnorm.generation import filter_by_vocabulary

pairs = [TrainingPair("d2", "dito"), TrainingPair("dhil", "dahil")]
rules = build_dictionary(pairs, k_max=2)

for variant in ("v1", "v2"):
    cands = generate("d2", rules, GenerationConfig(variant, cutoff=None))
    print(variant, [(c.text, round(c.likelihood, 3)) for c in cands])

# %%
# Each candidate keeps the trace of rules that produced it.

best = generate("d2", rules, GenerationConfig("v1", None))
dito = next(c for c in best if c.text == "dito")
print(" + ".join(f"{s.wrong}->{s.right}" for s in dito.trace), dito.likelihood)

# %%
# Vocabulary filtering, then ranking
# ----------------------------------
# Ranking by edit distance to the input favours conservative rewrites, which
# is why the vocabulary filter matters.

cands = generate("d2", rules, GenerationConfig("v1", None))
print("unfiltered:", rank_by_dld(cands, "d2").ordered[:3])
kept, fallback = filter_by_vocabulary(cands, {"dito", "dahil"})
print("filtered:  ", rank_by_dld(kept, "d2").ordered, "fallback" if fallback else "")
print("likelihood:", rank_by_likelihood(cands, "d2").ordered[:3])

# %%
# Cutoff
# ------
# A cutoff of n returns exactly the n most likely candidates.

for cutoff in (1, 3, None):
    print(cutoff, [c.text for c in generate("d2", rules, GenerationConfig("v1", cutoff))])
