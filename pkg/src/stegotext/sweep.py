"""Deterministic embed/corrupt/recover benchmark sweeps.

A sweep crosses message lengths with noise levels, runs a fixed number of
seeded trials per cell, measures each recovery mode, and writes one CSV row
per (cell, mode).  Identical configuration always produces a byte-identical
CSV: randomness is counter-based and keyed per cell, rows are emitted in a
fixed order, and wall-clock timing is zeroed unless explicitly enabled.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .codec import Framing, bytes_to_bits, bits_to_bytes, deframe_lenient, frame, text_to_bytes
from .errors import EmptyCorpus
from .images import synthetic_cover
from .lsb import embed_text, extract_bits
from .metrics import bit_error_rate, char_accuracy
from .ngram import CharNGramModel
from .noise import NoiseSpec, apply_noise, parse_noise_spec
from .recovery import RecoveryConfig, decode_resync, recover_pipeline

CSV_COLUMNS = [
    "length", "noise_kind", "noise_param", "seed", "mode",
    "acc_positional", "acc_aligned", "ber", "wall_ms", "error",
]

MODE_RESYNC = "resync"
MODE_RECOVER = "recover"

_MESSAGE_DOMAIN = 1  # Philox key domain for message sampling (noise uses 0)
_SLICE = 512  # sampled messages are stitched from slices this long

DEFAULT_CORPUS = Path(__file__).parent / "data" / "corpus_zh.txt"


def load_corpus(path=DEFAULT_CORPUS) -> str:
    """Read a corpus file as one unbroken character stream.

    Line breaks are layout, not content: they are dropped so sampled
    messages stay within the corpus alphabet.
    """
    text = Path(path).read_text(encoding="utf-8")
    joined = "".join(text.split())
    if not joined:
        raise EmptyCorpus(f"no usable characters in {str(path)!r}")
    return joined


def generate_message(length: int, corpus: str, seed: int) -> str:
    """Sample a message of exactly ``length`` characters from the corpus.

    Stitches random corpus slices so the text keeps realistic local n-gram
    statistics; fully determined by (length, corpus, seed).
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    if not corpus:
        raise EmptyCorpus("cannot sample from an empty corpus")
    key = np.array([seed & 0xFFFFFFFFFFFFFFFF, _MESSAGE_DOMAIN], dtype=np.uint64)
    rng = np.random.Generator(np.random.Philox(key=key))
    parts: list[str] = []
    remaining = length
    while remaining > 0:
        start = int(rng.integers(0, len(corpus)))
        piece = corpus[start:start + min(_SLICE, remaining)]
        if not piece:
            continue
        parts.append(piece)
        remaining -= len(piece)
    return "".join(parts)


@dataclass(frozen=True)
class SweepConfig:
    """Sweep parameters; defaults reproduce the standard benchmark grid."""

    lengths: tuple[int, ...] = tuple(range(10_000, 20_000, 1_000))
    noise_kind: str = "lsb-flip"
    noise_params: tuple[float, ...] = (5e-4,)
    trials: int = 20
    seed: int = 0
    modes: tuple[str, ...] = (MODE_RESYNC, MODE_RECOVER)
    framing: Framing = Framing.LENGTH
    order: int = 3
    wall_clock: bool = False
    corpus: str | None = None
    width: int = 512
    height: int = 512
    cover_seed: int = 7
    out: str | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        for mode in self.modes:
            if mode not in (MODE_RESYNC, MODE_RECOVER):
                raise ValueError(f"unknown mode {mode!r}")
        # validates kind/param ranges
        for p in self.noise_params:
            NoiseSpec(self.noise_kind, p)


def _parse_bool(value: str) -> bool:
    low = value.strip().lower()
    if low in ("on", "true", "1", "yes"):
        return True
    if low in ("off", "false", "0", "no"):
        return False
    raise ValueError(f"expected on/off, got {value!r}")


def parse_config(path) -> SweepConfig:
    """Read a flat key=value sweep configuration file.

    Blank lines and ``#`` comments are ignored; list values are
    comma-separated.  Unknown keys are an error.
    """
    cfg = SweepConfig()
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = key.strip(), value.strip()
        try:
            if key == "lengths":
                cfg = replace(cfg, lengths=tuple(int(v) for v in value.split(",") if v.strip()))
            elif key == "noise_kind":
                cfg = replace(cfg, noise_kind=value)
            elif key == "noise_params":
                cfg = replace(cfg, noise_params=tuple(float(v) for v in value.split(",") if v.strip()))
            elif key == "noise":
                spec = parse_noise_spec(value)
                cfg = replace(cfg, noise_kind=spec.kind, noise_params=(spec.param,))
            elif key == "trials":
                cfg = replace(cfg, trials=int(value))
            elif key == "seed":
                cfg = replace(cfg, seed=int(value))
            elif key == "modes":
                cfg = replace(cfg, modes=tuple(v.strip() for v in value.split(",") if v.strip()))
            elif key == "framing":
                cfg = replace(cfg, framing=Framing(value))
            elif key == "order":
                cfg = replace(cfg, order=int(value))
            elif key == "wall_clock":
                cfg = replace(cfg, wall_clock=_parse_bool(value))
            elif key == "corpus":
                cfg = replace(cfg, corpus=value)
            elif key == "width":
                cfg = replace(cfg, width=int(value))
            elif key == "height":
                cfg = replace(cfg, height=int(value))
            elif key == "cover_seed":
                cfg = replace(cfg, cover_seed=int(value))
            elif key == "out":
                cfg = replace(cfg, out=value)
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
    return cfg


def cell_seed(cfg: SweepConfig, length_index: int, param_index: int, trial: int) -> int:
    """Per-cell seed; recorded in the CSV so any row can be replayed alone."""
    return cfg.seed + 10_000 * length_index + 100 * param_index + trial


def run_sweep(cfg: SweepConfig | None = None, out=None) -> list[dict]:
    """Run the sweep; returns the rows and optionally writes them as CSV.

    A failing cell produces a row with its error message instead of
    aborting the sweep.
    """
    cfg = cfg or SweepConfig()
    corpus = load_corpus(cfg.corpus) if cfg.corpus else load_corpus()
    model = CharNGramModel(order=cfg.order).fit([corpus])
    rcfg = RecoveryConfig()
    cover = synthetic_cover(cfg.width, cfg.height, cfg.cover_seed)

    rows: list[dict] = []
    for li, length in enumerate(cfg.lengths):
        for pi, param in enumerate(cfg.noise_params):
            for trial in range(cfg.trials):
                seed = cell_seed(cfg, li, pi, trial)
                rows.extend(_run_cell(cfg, corpus, model, rcfg, cover, length, param, seed))

    target = out or cfg.out
    if target:
        write_csv(rows, target)
    return rows


def _run_cell(cfg, corpus, model, rcfg, cover, length, param, seed) -> list[dict]:
    base = {
        "length": length,
        "noise_kind": cfg.noise_kind,
        "noise_param": param,
        "seed": seed,
        "acc_positional": "",
        "acc_aligned": "",
        "ber": "",
        "wall_ms": 0,
        "error": "",
    }
    try:
        message = generate_message(length, corpus, seed)
        framed = frame(text_to_bytes(message), cfg.framing)
        stego = embed_text(cover, message, cfg.framing)
        noisy = apply_noise(stego, NoiseSpec(cfg.noise_kind, param, seed))
        sent_bits = bytes_to_bits(framed)
        received_bits = extract_bits(noisy, len(sent_bits))
        ber = bit_error_rate(sent_bits, received_bits)
        body, _ = bits_to_bytes(extract_bits(noisy))
        payload, _ = deframe_lenient(body, cfg.framing)
    except Exception as exc:  # cell setup failed; report it for every mode
        return [dict(base, mode=mode, error=_describe(exc)) for mode in cfg.modes]

    rows = []
    for mode in cfg.modes:
        row = dict(base, mode=mode, ber=ber)
        try:
            t0 = time.perf_counter()
            if mode == MODE_RESYNC:
                text = decode_resync(payload).text
            else:
                text = recover_pipeline(payload, model, rcfg)
            elapsed_ms = (time.perf_counter() - t0) * 1000.0
            row["acc_positional"] = char_accuracy(message, text, "positional").accuracy
            row["acc_aligned"] = char_accuracy(message, text, "aligned").accuracy
            if cfg.wall_clock:
                row["wall_ms"] = elapsed_ms
        except Exception as exc:
            row["error"] = _describe(exc)
        rows.append(row)
    return rows


def _describe(exc: Exception) -> str:
    kind = type(exc).__name__
    text = str(exc).replace("\n", " ")
    return f"{kind}: {text}" if text else kind


def write_csv(rows: list[dict], path) -> None:
    """Write sweep rows with the fixed column set, byte-deterministically."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([row[col] for col in CSV_COLUMNS])
