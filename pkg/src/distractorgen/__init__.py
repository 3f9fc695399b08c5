"""Distractor generation for multiple-choice questions over annotated articles."""

from .annotation import (
    AnnotatedArticle,
    AnnotatedSentence,
    QAPair,
    RoleSpan,
    TargetWord,
    Token,
    classify_targets,
    fallback_tag,
    load_articles,
    load_qaps,
    parse_article,
)
from .assembly import MCQ, GenerationResult, Resources, derive_rng, generate_mcq, substitute
from .config import Config
from .entity import (
    KnowledgeBase,
    collect_article_entities,
    default_kb,
    generate_entity_distractors,
    kb_peers,
    load_kb,
)
from .errors import (
    ConfigError,
    DistractorError,
    InsufficientCandidatesError,
    NoTargetError,
    OutOfVocabularyError,
    ParseError,
    PerturbError,
    RenderError,
    ValidationError,
)
from .lexres import (
    LexicalGraph,
    VectorTable,
    cosine,
    hypernym_candidates,
    is_antonym,
    load_lexical_graph,
    load_vectors,
    neighborhood,
    wup,
)
from .numeric import (
    NumericValue,
    PerturbStrategy,
    generate_numeric_distractors,
    perturb,
    recognize_numeric,
    render,
)
from .semantic import (
    Candidate,
    filter_candidates,
    generate_candidates,
    levenshtein,
    rank_and_select,
    score_candidate,
)

__version__ = "0.1.0"
