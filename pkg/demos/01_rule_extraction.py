"""
Learning rewrite rules from word pairs
======================================

A labeled pair such as ``d2 -> dito`` is walked with a sliding window. Each
step records which substring of the abbreviation maps to which substring of
the full word. Pooling these rules over a corpus gives a rule dictionary with
counts, and the counts give each rule a probability.
"""

# %%
# One pair, one window length
# ---------------------------

from ngramnorm import RecordingMode, Rule, TrainingPair, build_dictionary, extract_rules, rule_probability

pair = TrainingPair("d2", "dito")
for k in (1, 2):
    print(k, extract_rules(pair, k))

# %%
# ``short_key`` (the default) keys a mismatch by the single character the
# wrong pointer consumes; ``literal`` keys it by the whole window.

pair = TrainingPair("2loy", "tuloy")
print("short_key", extract_rules(pair, 2, RecordingMode.SHORT_KEY))
print("literal  ", extract_rules(pair, 2, RecordingMode.LITERAL))

# %%
# A dictionary over windows 1..k_max
# ----------------------------------

pairs = [TrainingPair("d2", "dito"), TrainingPair("dhil", "dahil"), TrainingPair("2loy", "tuloy")]
rules = build_dictionary(pairs, k_max=2)
for rule, count in rules.rules():
    print(f"{rule.wrong:>3} -> {rule.right:<3} count={count} p={rule_probability(rules, rule):.3f}")

# %%
# Dictionaries are values: adding a rule returns a new one and the
# probabilities under that key renormalize.

more = rules.add_rule(Rule("d", "du"))
print(rule_probability(rules, Rule("d", "di")), "->", rule_probability(more, Rule("d", "di")))
