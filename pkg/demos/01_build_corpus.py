"""
Building a corpus from a seed article
=====================================

The corpus is the seed wiki page plus every page it links to (depth one).
This demo reads the frozen fixture pages shipped with the repo, so it runs
offline and always produces the same corpus.
"""

import tempfile
from pathlib import Path

from ontoforge import AcquisitionConfig, build_corpus, load_fixture_corpus, save_corpus

REPO = Path(__file__).resolve().parent.parent

config = AcquisitionConfig(source="fixture", fixture_dir=REPO / "fixtures" / "wiki")
corpus = build_corpus("wind_power", config)

print(f"seed: {corpus.seed}")
print(f"articles fetched: {len(corpus.articles)}")
print(f"failed links: {[f.slug for f in corpus.failures]}")

# the seed's outgoing links decide what else is in the corpus
seed_article = corpus.articles[corpus.seed]
print(f"seed links ({len(seed_article.links)}): {', '.join(seed_article.links)}")

# stripped text is plain prose, ready for the mining pipeline
print("\nfirst lines of the seed text:")
for line in seed_article.text.splitlines()[:3]:
    print(f"  {line}")

# the file form round-trips: one JSON record per line, header first
with tempfile.TemporaryDirectory() as scratch:
    path = Path(scratch) / "corpus.jsonl"
    save_corpus(corpus, path)
    again = load_fixture_corpus(path)
    print(f"\nsaved and reloaded: structurally equal = {corpus.structurally_equal(again)}")
