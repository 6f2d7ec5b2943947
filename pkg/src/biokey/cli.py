"""Command-line interface: derive keys from fingerprints, encrypt, decrypt.

Exit codes
  0  success
  2  usage error (bad flags, malformed key)
  3  unreadable or malformed image
  4  too few minutiae to derive a key
  5  malformed ciphertext
  6  ciphertext decrypts to invalid padding
  7  file I/O failure
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .des import (BadPadding, MalformedCiphertext, decrypt_text, encrypt_text,
                  is_weak_key)
from .images import PgmError, load_gray, save_binary, save_gray
from .keygen import MIN_MINUTIAE, DesKey
from .minutiae import MinutiaKind
from .pipeline import PipelineConfig, run_pipeline

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IMAGE = 3
EXIT_MINUTIAE = 4
EXIT_CIPHERTEXT = 5
EXIT_PADDING = 6
EXIT_IO = 7

_CONFIG_FLAGS = ("block_size", "flatness", "false_minutiae_dist", "border_trim")


def _hex_key(text: str) -> DesKey:
    try:
        return DesKey.from_hex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read_bytes(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise _CliFailure(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from exc


def _write_bytes(path: str, data: bytes) -> None:
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise _CliFailure(EXIT_IO, f"cannot write {path}: {exc.strerror or exc}") from exc


class _CliFailure(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message
        super().__init__(message)


def _load_image(path: str):
    data = _read_bytes(path)
    try:
        return load_gray(data)
    except PgmError as exc:
        raise _CliFailure(EXIT_IMAGE, f"{path}: {exc}") from exc


def _build_config(args) -> PipelineConfig:
    if args.config is not None:
        try:
            config = PipelineConfig.from_text(
                _read_bytes(args.config).decode("ascii", "replace"))
        except ValueError as exc:
            raise _CliFailure(EXIT_USAGE, f"{args.config}: {exc}") from exc
    else:
        config = PipelineConfig()
    overrides = {name: getattr(args, name) for name in _CONFIG_FLAGS
                 if getattr(args, name) is not None}
    if overrides:
        try:
            config = PipelineConfig(**{**config.__dict__, **overrides})
        except ValueError as exc:
            raise _CliFailure(EXIT_USAGE, str(exc)) from exc
    return config


def _cmd_keygen(args) -> int:
    image = _load_image(args.input)
    result = run_pipeline(image, _build_config(args))
    if args.dump is not None:
        dump = Path(args.dump)
        try:
            dump.mkdir(parents=True, exist_ok=True)
            (dump / "equalized.pgm").write_bytes(save_gray(result.equalized))
            (dump / "binary.pgm").write_bytes(save_binary(result.binary))
            (dump / "thinned.pgm").write_bytes(save_binary(result.thinned))
            (dump / "minutiae.txt").write_text(result.minutiae.to_text())
        except OSError as exc:
            raise _CliFailure(EXIT_IO, f"cannot write dump to {args.dump}: {exc}") from exc
    if result.key is None:
        raise _CliFailure(
            EXIT_MINUTIAE,
            f"insufficient minutiae: found {len(result.minutiae)}, "
            f"need {MIN_MINUTIAE}")
    if is_weak_key(result.key):
        print(f"warning: derived key {result.key.hex} is a weak/semi-weak DES key",
              file=sys.stderr)
    print(result.key.hex)
    return EXIT_OK


def _cmd_inspect(args) -> int:
    image = _load_image(args.input)
    result = run_pipeline(image, _build_config(args))
    height, width = image.shape
    print(f"image: {width}x{height}")
    print(f"raw endings: {result.raw_minutiae.count(MinutiaKind.RIDGE_ENDING)}")
    print(f"raw bifurcations: {result.raw_minutiae.count(MinutiaKind.BIFURCATION)}")
    print(f"endings: {result.minutiae.count(MinutiaKind.RIDGE_ENDING)}")
    print(f"bifurcations: {result.minutiae.count(MinutiaKind.BIFURCATION)}")
    print(f"bits: {len(result.bits)}")
    if result.key is None:
        print(f"key: unavailable (minutiae: {len(result.minutiae)}, "
              f"need {MIN_MINUTIAE})")
    else:
        print(f"iterations: {result.iterations}")
        print(f"key: {result.key.hex}")
    return EXIT_OK


def _cmd_encrypt(args) -> int:
    plaintext = _read_bytes(args.in_path)
    ciphertext = encrypt_text(plaintext, args.key)
    _write_bytes(args.out_path, ciphertext.hex().upper().encode("ascii"))
    return EXIT_OK


def _cmd_decrypt(args) -> int:
    text = _read_bytes(args.in_path).decode("ascii", "replace").strip()
    try:
        ciphertext = bytes.fromhex(text)
    except ValueError:
        raise _CliFailure(EXIT_CIPHERTEXT,
                          f"{args.in_path}: not a hex ciphertext") from None
    try:
        plaintext = decrypt_text(ciphertext, args.key)
    except MalformedCiphertext as exc:
        raise _CliFailure(EXIT_CIPHERTEXT, str(exc)) from exc
    except BadPadding as exc:
        raise _CliFailure(EXIT_PADDING, str(exc)) from exc
    _write_bytes(args.out_path, plaintext)
    return EXIT_OK


def _add_pipeline_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, metavar="F",
                        help="grayscale fingerprint image (PGM, maxval 255)")
    parser.add_argument("--config", metavar="FILE",
                        help="key = value file with any of: " + ", ".join(_CONFIG_FLAGS))
    parser.add_argument("--block-size", dest="block_size", type=int, metavar="PX",
                        help="binarization tile size (default 16)")
    parser.add_argument("--flatness", type=int, metavar="LEVELS",
                        help="intensity range below which a tile is background (default 8)")
    parser.add_argument("--min-dist", dest="false_minutiae_dist", type=float,
                        metavar="PX",
                        help="minutiae pairs closer than this are dropped (default 6)")
    parser.add_argument("--border", dest="border_trim", type=int, metavar="PX",
                        help="minutiae this close to the edge are dropped (default 10)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biokey",
        description="Derive a 64-bit DES key from a fingerprint image and "
                    "encrypt or decrypt text with it.",
        epilog=__doc__[__doc__.index("Exit codes"):],
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"biokey {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    keygen = sub.add_parser("keygen", help="derive and print the 16-hex-digit key")
    _add_pipeline_flags(keygen)
    keygen.add_argument("--dump", metavar="DIR",
                        help="write equalized.pgm, binary.pgm, thinned.pgm, minutiae.txt")
    keygen.set_defaults(handler=_cmd_keygen)

    inspect = sub.add_parser("inspect", help="report per-stage counts and the key")
    _add_pipeline_flags(inspect)
    inspect.set_defaults(handler=_cmd_inspect)

    encrypt = sub.add_parser("encrypt", help="encrypt a file to uppercase hex")
    encrypt.add_argument("--key", required=True, type=_hex_key, metavar="HEX16",
                         help="64-bit key as exactly 16 hex digits")
    encrypt.add_argument("--in", dest="in_path", required=True, metavar="F")
    encrypt.add_argument("--out", dest="out_path", required=True, metavar="F")
    encrypt.set_defaults(handler=_cmd_encrypt)

    decrypt = sub.add_parser("decrypt", help="decrypt a hex ciphertext file")
    decrypt.add_argument("--key", required=True, type=_hex_key, metavar="HEX16",
                         help="64-bit key as exactly 16 hex digits")
    decrypt.add_argument("--in", dest="in_path", required=True, metavar="F")
    decrypt.add_argument("--out", dest="out_path", required=True, metavar="F")
    decrypt.set_defaults(handler=_cmd_decrypt)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _CliFailure as failure:
        print(f"error: {failure.message}", file=sys.stderr)
        return failure.code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
