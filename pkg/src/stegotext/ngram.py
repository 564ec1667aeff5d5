"""Character n-gram language model with add-k smoothing.

The model scores text by mean natural-log probability per character and is
the built-in stand-in for a large pretrained corrector: small enough to train
from a corpus file in milliseconds, sharp enough to rank repair candidates.

Model files ("NGRAM v1") are line-oriented so other runtimes can load them:
a header ``NGRAM v1 n=<order> k=<smoothing>`` followed by one
``<escaped n-gram>\\t<count>`` record per line.  Vocabulary size and context
totals are always derived from the stored counts, which makes a saved and
reloaded model score-identical to the trained one.
"""

from __future__ import annotations

import math
from collections import Counter

from .errors import EmptyCorpus

# Start-of-text sentinel used for the (order-1) characters of boundary padding.
PAD = "\x00"

_ESCAPES = {"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r", PAD: "\\0"}
_UNESCAPES = {"\\": "\\", "t": "\t", "n": "\n", "r": "\r", "0": PAD}


def _escape(gram: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in gram)


def _unescape(text: str) -> str:
    out = []
    it = iter(text)
    for ch in it:
        if ch != "\\":
            out.append(ch)
            continue
        try:
            code = next(it)
        except StopIteration:
            raise ValueError("dangling escape in n-gram record") from None
        try:
            out.append(_UNESCAPES[code])
        except KeyError:
            raise ValueError(f"unknown escape \\{code}") from None
    return "".join(out)


class CharNGramModel:
    """Count-based character n-gram model.

    Parameters
    ----------
    order : n-gram length, >= 1.
    k : add-k smoothing constant, > 0 so every string has finite score.
    """

    def __init__(self, order: int = 3, k: float = 0.01):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        if k <= 0:
            raise ValueError(f"smoothing k must be > 0, got {k}")
        self.order = order
        self.k = k
        self.counts: Counter[str] = Counter()
        self._context_totals: Counter[str] = Counter()
        self._vocabulary: frozenset[str] = frozenset()

    def fit(self, corpus) -> "CharNGramModel":
        """Accumulate counts from an iterable of documents (or one string)."""
        if isinstance(corpus, str):
            corpus = [corpus]
        pad = PAD * (self.order - 1)
        seen = False
        for doc in corpus:
            if not doc:
                continue
            seen = True
            padded = pad + doc
            for i in range(self.order - 1, len(padded)):
                self.counts[padded[i - self.order + 1 : i + 1]] += 1
        if not seen and not self.counts:
            raise EmptyCorpus("corpus contains no characters")
        self._rebuild()
        return self

    def _rebuild(self):
        # Context totals and vocabulary always derive from the raw counts so
        # a reloaded model is score-identical to the one that was saved.
        totals: Counter[str] = Counter()
        vocab = set()
        for gram, count in self.counts.items():
            totals[gram[:-1]] += count
            vocab.update(ch for ch in gram if ch != PAD)
        self._context_totals = totals
        self._vocabulary = frozenset(vocab)

    @property
    def vocabulary(self) -> frozenset[str]:
        return self._vocabulary

    @property
    def vocab_size(self) -> int:
        return len(self._vocabulary)

    def _check_fitted(self):
        if not self.counts:
            raise EmptyCorpus("model has no counts; call fit() or load() first")

    def log_prob(self, context: str, char: str) -> float:
        """Smoothed conditional ln P(char | context of order-1 characters)."""
        self._check_fitted()
        if len(context) != self.order - 1:
            context = (PAD * self.order + context)[-(self.order - 1):] if self.order > 1 else ""
        num = self.counts.get(context + char, 0) + self.k
        den = self._context_totals.get(context, 0) + self.k * len(self._vocabulary)
        return math.log(num / den)

    def score(self, text: str) -> float:
        """Mean ln-probability per character; empty text scores 0."""
        if not text:
            return 0.0
        self._check_fitted()
        padded = PAD * (self.order - 1) + text
        total = 0.0
        for i in range(self.order - 1, len(padded)):
            total += self.log_prob(padded[i - self.order + 1 : i], padded[i])
        return total / len(text)

    def save(self, path):
        self._check_fitted()
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(f"NGRAM v1 n={self.order} k={self.k!r}\n")
            for gram in sorted(self.counts):
                fh.write(f"{_escape(gram)}\t{self.counts[gram]}\n")

    @classmethod
    def load(cls, path) -> "CharNGramModel":
        with open(path, "r", encoding="utf-8", newline="\n") as fh:
            header = fh.readline().rstrip("\n")
            parts = header.split()
            if parts[:2] != ["NGRAM", "v1"] or len(parts) != 4:
                raise ValueError(f"not an NGRAM v1 model file: {header!r}")
            order = int(parts[2].removeprefix("n="))
            k = float(parts[3].removeprefix("k="))
            model = cls(order=order, k=k)
            for lineno, line in enumerate(fh, start=2):
                line = line.rstrip("\n")
                if not line:
                    continue
                gram, sep, count = line.rpartition("\t")
                if not sep:
                    raise ValueError(f"malformed record on line {lineno}")
                model.counts[_unescape(gram)] = int(count)
        model._rebuild()
        return model


def train(corpus, order: int = 3, k: float = 0.01) -> CharNGramModel:
    """Build and fit a model in one call."""
    return CharNGramModel(order=order, k=k).fit(corpus)
