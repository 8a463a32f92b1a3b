"""Relevance ground truth for elements and attributes.

Every element tag maps to a behavioural class plus a score in [0, 1]
expressing how much information the tag itself tends to carry for an
agent reading the page.  Attributes get a plain score.  Unknown names
fall through to wildcard defaults.  The tables are compiled in: they are
data the algorithm is defined against, not configuration.
"""

from __future__ import annotations

import enum

__all__ = [
    "ElementClass",
    "ELEMENT_RATINGS",
    "ATTRIBUTE_SCORES",
    "ARIA_PREFIX",
    "ARIA_SCORE",
    "WILDCARD_ELEMENT_SCORE",
    "WILDCARD_ATTRIBUTE_SCORE",
    "NOISE_ELEMENTS",
    "classify_element",
    "score_attribute",
    "element_class",
    "element_score",
    "attribute_score",
    "ground_truth_dump",
]


class ElementClass(enum.Enum):
    CONTAINER = "container"
    INTERACTIVE = "interactive"
    CONTENT = "content"
    OTHER = "other"


_CONTAINER = ElementClass.CONTAINER
_INTERACTIVE = ElementClass.INTERACTIVE
_CONTENT = ElementClass.CONTENT
_OTHER = ElementClass.OTHER

ELEMENT_RATINGS: dict[str, tuple[ElementClass, float]] = {
    # structural containers
    "article": (_CONTAINER, 0.95),
    "aside": (_CONTAINER, 0.85),
    "body": (_CONTAINER, 0.90),
    "div": (_CONTAINER, 0.30),
    "footer": (_CONTAINER, 0.70),
    "header": (_CONTAINER, 0.75),
    "main": (_CONTAINER, 0.85),
    "nav": (_CONTAINER, 0.80),
    "section": (_CONTAINER, 0.90),
    # interactive controls
    "a": (_INTERACTIVE, 0.85),
    "button": (_INTERACTIVE, 0.80),
    "details": (_INTERACTIVE, 0.60),
    "form": (_INTERACTIVE, 0.75),
    "input": (_INTERACTIVE, 0.70),
    "label": (_INTERACTIVE, 0.50),
    "select": (_INTERACTIVE, 0.65),
    "summary": (_INTERACTIVE, 0.55),
    "textarea": (_INTERACTIVE, 0.65),
    # text-bearing content
    "address": (_CONTENT, 0.60),
    "b": (_CONTENT, 0.40),
    "blockquote": (_CONTENT, 0.65),
    "code": (_CONTENT, 0.60),
    "em": (_CONTENT, 0.50),
    "figure": (_CONTENT, 0.50),
    "figcaption": (_CONTENT, 0.45),
    "h1": (_CONTENT, 1.00),
    "h2": (_CONTENT, 0.95),
    "h3": (_CONTENT, 0.90),
    "h4": (_CONTENT, 0.85),
    "h5": (_CONTENT, 0.80),
    "h6": (_CONTENT, 0.75),
    "hr": (_CONTENT, 0.20),
    "img": (_CONTENT, 0.60),
    "li": (_CONTENT, 0.60),
    "ol": (_CONTENT, 0.55),
    "p": (_CONTENT, 0.60),
    "pre": (_CONTENT, 0.55),
    "small": (_CONTENT, 0.30),
    "span": (_CONTENT, 0.20),
    "strong": (_CONTENT, 0.50),
    "sub": (_CONTENT, 0.25),
    "sup": (_CONTENT, 0.25),
    "table": (_CONTENT, 0.70),
    "tbody": (_CONTENT, 0.65),
    "td": (_CONTENT, 0.50),
    "th": (_CONTENT, 0.65),
    "tr": (_CONTENT, 0.50),
    "ul": (_CONTENT, 0.55),
    # everything the reader never needs verbatim
    "base": (_OTHER, 0.10),
    "br": (_OTHER, 0.05),
    "canvas": (_OTHER, 0.20),
    "head": (_OTHER, 0.10),
    "html": (_OTHER, 0.10),
    "link": (_OTHER, 0.05),
    "meta": (_OTHER, 0.00),
    "noscript": (_OTHER, 0.05),
    "script": (_OTHER, 0.00),
    "source": (_OTHER, 0.05),
    "style": (_OTHER, 0.00),
    "template": (_OTHER, 0.00),
    "title": (_OTHER, 0.40),
    "track": (_OTHER, 0.05),
    "video": (_OTHER, 0.50),
}

ATTRIBUTE_SCORES: dict[str, float] = {
    "alt": 0.9, "href": 0.9,
    "src": 0.8, "id": 0.8,
    "class": 0.7,
    "title": 0.6, "lang": 0.6, "role": 0.6,
    "placeholder": 0.5, "label": 0.5, "for": 0.5, "value": 0.5,
    "checked": 0.5, "disabled": 0.5, "readonly": 0.5, "required": 0.5,
    "maxlength": 0.5, "minlength": 0.5, "pattern": 0.5, "step": 0.5,
    "min": 0.5, "max": 0.5,
    "accept": 0.4, "accept-charset": 0.4, "action": 0.4, "method": 0.4,
    "enctype": 0.4, "target": 0.4, "rel": 0.4, "media": 0.4,
    "sizes": 0.4, "srcset": 0.4, "preload": 0.4, "autoplay": 0.4,
    "controls": 0.4, "loop": 0.4, "muted": 0.4, "poster": 0.4,
    "autofocus": 0.3, "autocomplete": 0.3, "autocapitalize": 0.3,
    "spellcheck": 0.3, "contenteditable": 0.3, "draggable": 0.3,
    "dropzone": 0.3, "tabindex": 0.3, "accesskey": 0.3, "cite": 0.3,
    "datetime": 0.3, "coords": 0.3, "shape": 0.3, "usemap": 0.3,
    "ismap": 0.3, "download": 0.3, "ping": 0.3, "hreflang": 0.3,
    "type": 0.3, "name": 0.3, "form": 0.3,
    "novalidate": 0.2, "multiple": 0.2, "selected": 0.2, "size": 0.2,
    "wrap": 0.2,
    "hidden": 0.1, "style": 0.1, "content": 0.1, "http-equiv": 0.1,
}

ARIA_PREFIX = "aria-"
ARIA_SCORE = 0.6
WILDCARD_ELEMENT_SCORE = 0.0
WILDCARD_ATTRIBUTE_SCORE = 0.0

# OTHER-class tags whose whole subtree is dropped.  The rest of that class
# (and every unknown tag) only loses its own wrapper: children are kept so
# nothing interactive can vanish inside an unrated element.
NOISE_ELEMENTS = frozenset({
    "script", "style", "template", "meta", "link", "base",
    "source", "track", "br",
})


def classify_element(name: str) -> tuple[ElementClass, float]:
    """Class and semantics score for a lowercase element name.

    Unrated names fall through to the wildcard: (other, 0.0).
    """
    return ELEMENT_RATINGS.get(name, (ElementClass.OTHER, WILDCARD_ELEMENT_SCORE))


def score_attribute(name: str) -> float:
    """Semantics score for a lowercase attribute name.

    Exact entries win, then the aria- prefix, then the 0.0 wildcard.
    """
    score = ATTRIBUTE_SCORES.get(name)
    if score is not None:
        return score
    if name.startswith(ARIA_PREFIX):
        return ARIA_SCORE
    return WILDCARD_ATTRIBUTE_SCORE


# component views of classify_element, handy at call sites that only
# need one of the pair
def element_class(name: str) -> ElementClass:
    return classify_element(name)[0]


def element_score(name: str) -> float:
    return classify_element(name)[1]


def attribute_score(name: str) -> float:
    return score_attribute(name)


def ground_truth_dump() -> dict:
    """JSON-friendly copy of both tables, wildcards included."""
    return {
        "elements": {
            name: {"class": cls.value, "score": score}
            for name, (cls, score) in sorted(ELEMENT_RATINGS.items())
        },
        "element_wildcard": {"class": ElementClass.OTHER.value,
                             "score": WILDCARD_ELEMENT_SCORE},
        "attributes": dict(sorted(ATTRIBUTE_SCORES.items())),
        "attribute_prefixes": {ARIA_PREFIX: ARIA_SCORE},
        "attribute_wildcard": WILDCARD_ATTRIBUTE_SCORE,
    }
