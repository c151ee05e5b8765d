"""N-gram rewrite-rule spelling normalization for abbreviated words."""

from ngramnorm.distance import DldVariant, dld
from ngramnorm.errors import (
    ConfigurationError,
    EmptyTokenError,
    IncompatibleDictionariesError,
    ModelFormatError,
    NormalizerError,
    RuleValidationError,
    StaleTraceError,
    UnknownKeyError,
)
from ngramnorm.evaluation import (
    CvReport,
    EvalReport,
    accuracy_at_k,
    cross_validate,
    dld_stats,
    evaluate,
    evaluate_baseline,
    run_evaluation,
    sweep_cutoff,
)
from ngramnorm.generation import Candidate, GenerationConfig, TraceStep, Variant, filter_by_vocabulary, generate
from ngramnorm.pipeline import (
    Model,
    TrainConfig,
    baseline_nearest_vocab,
    explain,
    load_model,
    normalize,
    save_model,
    train,
)
from ngramnorm.preprocessing import TrainingPair, preprocess, read_pairs, read_vocabulary
from ngramnorm.ranking import RankedSuggestions, Ranker, likelihood, rank_by_dld, rank_by_likelihood, top_k
from ngramnorm.rules import (
    RecordingMode,
    Rule,
    RuleDictionary,
    add_rule,
    build_dictionary,
    extract_rules,
    merge_dictionaries,
    rule_probability,
)

__version__ = "0.1.0"
