"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data error.  Results go to standard
output as JSON; bulk sweep results go to the configured CSV path (or stdout
when none is given).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import codec, images, lsb, metrics, ngram, noise, recovery, sweep
from .errors import StegotextError

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; our contract reserves 2 for data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _framing(value: str) -> codec.Framing:
    try:
        return codec.Framing(value)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"invalid framing {value!r} (choose from marker, length)") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stegotext", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("embed", help="hide text in an image's LSB plane")
    p.add_argument("--cover", required=True, help="cover image (PNG or PPM)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--text", help="message text")
    group.add_argument("--text-file", help="file containing the message text")
    p.add_argument("--out", required=True, help="stego image output path")
    p.add_argument("--framing", type=_framing, default=codec.Framing.MARKER)

    p = sub.add_parser("extract", help="recover text from a stego image")
    p.add_argument("--in", dest="image", required=True, help="stego image path")
    p.add_argument("--mode", choices=("strict", "resync", "recover"), default="strict")
    p.add_argument("--framing", type=_framing, default=codec.Framing.MARKER)
    p.add_argument("--model", help="n-gram model file for recover mode")
    p.add_argument("--corrector", help="external corrector command for recover mode")
    p.add_argument("--out", help="write the text here instead of stdout JSON")

    p = sub.add_parser("corrupt", help="apply seeded channel noise to an image")
    p.add_argument("--in", dest="image", required=True)
    p.add_argument("--noise", required=True, help="noise spec, e.g. lsb-flip:0.001")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("eval", help="score extracted text against the original")
    p.add_argument("--original", required=True, help="file with the original text")
    p.add_argument("--extracted", required=True, help="file with the extracted text")
    p.add_argument("--mode", choices=(metrics.MODE_POSITIONAL, metrics.MODE_ALIGNED),
                   default=metrics.MODE_ALIGNED)

    p = sub.add_parser("mse", help="mean squared error between two images")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("sweep", help="run a benchmark sweep")
    p.add_argument("--config", help="flat key=value config file")
    p.add_argument("--out", help="CSV output path (overrides config)")

    p = sub.add_parser("train", help="fit an n-gram model from a corpus file")
    p.add_argument("--corpus", required=True)
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--smoothing", type=float, default=0.01)
    p.add_argument("--out", required=True, help="model output path (NGRAM v1)")

    return parser


def _emit(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _cmd_embed(args) -> None:
    text = args.text if args.text is not None else _read_text(args.text_file)
    cover = images.load_image(args.cover)
    stego = lsb.embed_text(cover, text, args.framing)
    images.save_image(stego, args.out)
    framed = codec.frame(codec.text_to_bytes(text), args.framing)
    _emit({
        "out": args.out,
        "chars": len(text),
        "payload_bytes": len(framed),
        "embedded_bits": len(framed) * 8,
        "capacity_bits": lsb.capacity_bits(cover),
    })


def _cmd_extract(args) -> None:
    img = images.load_image(args.image)
    result: dict = {"mode": args.mode}
    if args.mode == "strict":
        text = lsb.extract_text_strict(img, args.framing)
    else:
        payload, marker_found = lsb.extract_payload(img, args.framing)
        result["marker_found"] = marker_found
        if args.mode == "resync":
            decoded = recovery.decode_resync(payload)
            text = decoded.text
            result["replacements"] = decoded.replacement_count
            result["uncertain_spans"] = [list(s) for s in decoded.uncertain_spans]
        else:
            model = ngram.CharNGramModel.load(args.model) if args.model else None
            cfg = recovery.RecoveryConfig(corrector=args.corrector) if args.corrector \
                else recovery.RecoveryConfig()
            text = recovery.recover_pipeline(payload, model, cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        result["out"] = args.out
        result["chars"] = len(text)
    else:
        result["text"] = text
    _emit(result)


def _cmd_corrupt(args) -> None:
    img = images.load_image(args.image)
    spec = noise.parse_noise_spec(args.noise, args.seed)
    noisy = noise.apply_noise(img, spec)
    images.save_image(noisy, args.out)
    _emit({
        "out": args.out,
        "kind": spec.kind,
        "param": spec.param,
        "seed": spec.seed,
        "flipped_lsbs": noise.flip_count(img, noisy),
    })


def _cmd_eval(args) -> None:
    original = _read_text(args.original)
    extracted = _read_text(args.extracted)
    _emit(metrics.char_accuracy(original, extracted, args.mode).as_dict())


def _cmd_mse(args) -> None:
    report = metrics.mse(images.load_image(args.a), images.load_image(args.b))
    _emit(report.as_dict())


def _cmd_sweep(args) -> None:
    cfg = sweep.parse_config(args.config) if args.config else sweep.SweepConfig()
    out = args.out or cfg.out
    rows = sweep.run_sweep(cfg, out=out)
    if out:
        _emit({"rows": len(rows), "out": out})
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(sweep.CSV_COLUMNS)
        for row in rows:
            writer.writerow([row[c] for c in sweep.CSV_COLUMNS])


def _cmd_train(args) -> None:
    corpus = sweep.load_corpus(args.corpus)
    model = ngram.CharNGramModel(order=args.order, k=args.smoothing).fit([corpus])
    model.save(args.out)
    _emit({
        "out": args.out,
        "order": model.order,
        "smoothing": model.k,
        "ngrams": len(model.counts),
        "vocabulary": model.vocab_size,
    })


_COMMANDS = {
    "embed": _cmd_embed,
    "extract": _cmd_extract,
    "corrupt": _cmd_corrupt,
    "eval": _cmd_eval,
    "mse": _cmd_mse,
    "sweep": _cmd_sweep,
    "train": _cmd_train,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except (StegotextError, OSError, ValueError) as exc:
        print(f"stegotext: {type(exc).__name__}: {exc}", file=sys.stderr)
        return DATA_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
