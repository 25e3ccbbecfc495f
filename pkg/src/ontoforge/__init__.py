"""Term mining and curation toolkit for building a wind power ontology.

The pipeline: fetch a seed wiki article plus its first-level links into a
corpus, mine ranked n-gram candidates from the stripped text, curate the
candidates into an ontology through logged decisions, and serialize the
result as OWL.
"""

from .corpus import (
    AcquisitionConfig,
    Article,
    Corpus,
    CorpusError,
    CorpusFormatError,
    NetworkFetchError,
    PageNotFoundError,
    SeedFetchError,
    build_corpus,
    fetch_article,
    load_fixture_corpus,
    save_corpus,
)
from .ontology import (
    Concept,
    ConceptInUseError,
    DuplicateLabelError,
    DuplicatePropertyError,
    DuplicateRelationError,
    IsACycleError,
    Ontology,
    OntologyError,
    PropertyDef,
    Relation,
    TermMatch,
    UnknownConceptError,
    UnknownEndpointError,
    ValidationReport,
    concept_slug,
)
from .seed import seed_wind_ontology
from .textmine import (
    CandidateTerm,
    NGramTable,
    PipelineConfig,
    TokenStream,
    clean,
    extract_ngrams,
    load_candidates,
    load_stopwords,
    mine_article,
    mine_corpus,
    normalize,
    rank_candidates,
    save_candidates,
)
from .wikitext import StripResult, extract_links, link_target, slugify, strip_markup

__version__ = "0.1.0"

__all__ = [
    "AcquisitionConfig",
    "Article",
    "CandidateTerm",
    "Concept",
    "ConceptInUseError",
    "Corpus",
    "CorpusError",
    "CorpusFormatError",
    "DuplicateLabelError",
    "DuplicatePropertyError",
    "DuplicateRelationError",
    "IsACycleError",
    "NGramTable",
    "NetworkFetchError",
    "Ontology",
    "OntologyError",
    "PageNotFoundError",
    "PipelineConfig",
    "PropertyDef",
    "Relation",
    "SeedFetchError",
    "StripResult",
    "TermMatch",
    "TokenStream",
    "UnknownConceptError",
    "UnknownEndpointError",
    "ValidationReport",
    "build_corpus",
    "clean",
    "concept_slug",
    "extract_links",
    "extract_ngrams",
    "fetch_article",
    "link_target",
    "load_candidates",
    "load_fixture_corpus",
    "load_stopwords",
    "mine_article",
    "mine_corpus",
    "normalize",
    "rank_candidates",
    "save_candidates",
    "save_corpus",
    "seed_wind_ontology",
    "slugify",
    "strip_markup",
]
