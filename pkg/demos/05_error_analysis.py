"""
Fixing errors by editing rules
==============================

When the correct word is never generated, the trace of a near miss shows
which rule is missing. Adding it to the dictionary fixes the word without
retraining.
"""

# %%
from ngramnorm import Rule, TrainingPair, explain, train

model = train([TrainingPair("d2", "dito"), TrainingPair("dhil", "dahil")], ["nakakatawa", "dito", "dahil"]).model
result = explain(model, "nkktawa")
print("before:", result.ranked.texts[:3], "(vocabulary fallback)" if result.fallback else "")

# %%
# None of ``n``, ``k``, ``t``, ``w`` are keys, so they pass through unchanged.
# Teach the model the vowel-dropping contractions and keep the other letters.

for rule, count in [(Rule("n", "na"), 1), (Rule("k", "ka"), 2), (Rule("t", "t"), 1), (Rule("w", "w"), 1), (Rule("a", "a"), 1)]:
    model = model.with_rule(rule, count)

result = explain(model, "nkktawa")
print("after: ", result.ranked.texts[:3])
best = next(c for c in result.candidates if c.text == "nakakatawa")
print(" ".join(f"{s.wrong}->{s.right}" for s in best.trace))
