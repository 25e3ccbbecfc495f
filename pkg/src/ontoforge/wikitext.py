"""Wikitext markup stripping and internal-link extraction.

Turns raw wiki markup into running prose (templates, references, tables
and file embeds dropped; section headings kept as plain text lines) and
pulls the ordered set of internal article links out of the body prose.
Links that only occur inside templates or file captions do not count.
"""

from __future__ import annotations

import html
import re
from urllib.parse import unquote

# Namespace prefixes whose links never denote articles. Anything with a
# colon in the target is excluded as well (interwiki, language links).
_FILE_PREFIXES = ("file:", "image:", "media:")

_HEADING_RE = re.compile(r"^\s*=+\s*(.*?)\s*=+\s*$", re.MULTILINE)
_COMMENT_RE = re.compile(r"<!--.*?-->", re.DOTALL)
_REF_RE = re.compile(r"<ref[^>/]*/\s*>|<ref[^>]*>.*?</ref\s*>", re.DOTALL | re.IGNORECASE)
_TAG_RE = re.compile(r"</?[a-zA-Z][^>]*>")
_EXTLINK_RE = re.compile(r"\[(?:https?|ftp)://[^\s\]]*\s*([^\]]*)\]")
_BARE_URL_RE = re.compile(r"(?:https?|ftp)://[^\s<>\"]+")
_QUOTES_RE = re.compile(r"'{2,}")
_MAGIC_RE = re.compile(r"__[A-Z]+__")
_LIST_MARKER_RE = re.compile(r"^[*#:;]+\s*", re.MULTILINE)
_WIKILINK_RE = re.compile(r"\[\[([^\[\]]*?)\]\]")


class StripResult:
    """Plain text plus a flag for spans the stripper could not balance."""

    __slots__ = ("text", "clean")

    def __init__(self, text: str, clean: bool):
        self.text = text
        self.clean = clean


def _strip_nested(text: str, open_tok: str, close_tok: str) -> tuple[str, bool]:
    """Drop every (possibly nested) span between open_tok and close_tok."""
    if open_tok not in text:
        return text, True
    out: list[str] = []
    depth = 0
    i = 0
    n = len(text)
    while i < n:
        if text.startswith(open_tok, i):
            depth += 1
            i += len(open_tok)
        elif depth and text.startswith(close_tok, i):
            depth -= 1
            i += len(close_tok)
        elif depth:
            i += 1
        else:
            out.append(text[i])
            i += 1
    return "".join(out), depth == 0


def _strip_file_embeds(text: str) -> str:
    """Remove [[File:...]] embeds, whose captions may contain nested links."""
    out: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        if text.startswith("[[", i):
            head = text[i + 2 : i + 12].lower()
            if any(head.startswith(p) for p in _FILE_PREFIXES):
                depth = 1
                j = i + 2
                while j < n and depth:
                    if text.startswith("[[", j):
                        depth += 1
                        j += 2
                    elif text.startswith("]]", j):
                        depth -= 1
                        j += 2
                    else:
                        j += 1
                i = j
                continue
        out.append(text[i])
        i += 1
    return "".join(out)


def _prune_markup(markup: str) -> tuple[str, bool]:
    """Shared first pass: comments, refs, templates, tables, file embeds."""
    text = _COMMENT_RE.sub("", markup)
    text = _REF_RE.sub(" ", text)
    text, tpl_ok = _strip_nested(text, "{{", "}}")
    text, tbl_ok = _strip_nested(text, "{|", "|}")
    text = _strip_file_embeds(text)
    return text, tpl_ok and tbl_ok


def link_target(raw: str) -> str | None:
    """Resolve one [[...]] target to an article slug, or None if excluded."""
    target = raw.split("|", 1)[0].strip()
    target = target.split("#", 1)[0].strip()
    if not target:
        return None
    if ":" in target:
        return None
    if _BARE_URL_RE.match(target):
        return None
    return slugify(target)


def slugify(title: str) -> str:
    """Normalize a page title: percent-decode, lowercase, spaces to underscores."""
    slug = unquote(title).strip().lower()
    slug = re.sub(r"[\s_]+", "_", slug)
    return slug


def extract_links(markup: str) -> list[str]:
    """Ordered, deduplicated article slugs linked from the body prose.

    Namespace links (File:, Category:, ...), external URLs and pure
    in-page anchors are skipped; first-occurrence order is kept.
    """
    text, _ = _prune_markup(markup)
    seen: set[str] = set()
    links: list[str] = []
    for match in _WIKILINK_RE.finditer(text):
        slug = link_target(match.group(1))
        if slug and slug not in seen:
            seen.add(slug)
            links.append(slug)
    return links


def _flatten_link(match: re.Match) -> str:
    raw = match.group(1)
    target, _, label = raw.partition("|")
    target = target.strip()
    if ":" in target.split("#", 1)[0]:
        # Category / interwiki links vanish entirely.
        return ""
    display = label.strip() if label else target.split("#", 1)[0].strip()
    return display


def strip_markup(markup: str) -> StripResult:
    """Reduce wikitext to plain prose; headings survive as bare lines."""
    text, balanced = _prune_markup(markup)
    text = _HEADING_RE.sub(lambda m: "\n" + m.group(1) + "\n", text)
    # Inner links first so piped labels survive, then leftover brackets.
    for _ in range(3):  # nested display links are rare but legal
        new = _WIKILINK_RE.sub(_flatten_link, text)
        if new == text:
            break
        text = new
    text = _EXTLINK_RE.sub(lambda m: m.group(1), text)
    text = _BARE_URL_RE.sub(" ", text)
    text = _QUOTES_RE.sub("", text)
    text = _TAG_RE.sub(" ", text)
    text = _MAGIC_RE.sub(" ", text)
    text = _LIST_MARKER_RE.sub("", text)
    text = html.unescape(text)
    text = text.replace("\xa0", " ")
    text = re.sub(r"[ \t]+", " ", text)
    text = re.sub(r" ?\n ?", "\n", text)
    text = re.sub(r"\n{3,}", "\n\n", text)
    return StripResult(text.strip(), balanced)
