#!/usr/bin/env python3
"""Scripted curation pass: accept the top-ranked domain phrases as concepts.

Takes a candidates file produced by `ontoforge mine` over the shipped
fixture corpus, opens a session, accepts each phrase below as a concept,
and persists the session so `ontoforge export` can serialize it.

The list is the top of the frequency ranking with two curator skips:
"turbines" (plural duplicate of "turbine") and "factor" (fragment of
"capacity factor").
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ontoforge.curation import SessionStore, decide, session_from_candidates
from ontoforge.textmine import load_candidates

TOP_PHRASES = [
    "wind",
    "power",
    "energy",
    "speed",
    "wind speed",
    "capacity",
    "generation",
    "turbine",
    "offshore",
    "rotor",
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("candidates", help="candidates file from `ontoforge mine`")
    parser.add_argument("--data-dir", required=True, help="session storage directory")
    parser.add_argument("--session", default="scripted", help="session id to create")
    args = parser.parse_args()

    header, candidates = load_candidates(args.candidates)
    session = session_from_candidates(
        candidates,
        session_id=args.session,
        config_digest=header.get("config_digest", ""),
    )
    store = SessionStore(args.data_dir)
    store.create(session)
    for phrase in TOP_PHRASES:
        if not session.has_candidate(phrase):
            print(f"phrase {phrase!r} not in candidates file", file=sys.stderr)
            return 1
        outcome = decide(session, phrase, "accept_concept")
        store.append(session.id, session.decisions[-1])
        print(f"seq {outcome.seq}: accepted {phrase!r} as concept")
    print(f"session {session.id}: {len(TOP_PHRASES)} concepts accepted")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
