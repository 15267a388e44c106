"""Command-line front end.

    aesmix encrypt --key 000102030405060708090a0b0c0d0e0f --in plain.bin --out c.bin
    aesmix decrypt --key @arragsliman_miti --in c.bin --out -
    aesmix kat
    aesmix selftest --blocks 500
    aesmix bench --blocks 100000 --format table
    aesmix dump --table 02

Exit status: 0 success, 1 data or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import binascii
import sys
from typing import BinaryIO

from aesmix import bench, verify
from aesmix.cipher import Direction, Padding, process_blocks, stream_process
from aesmix.errors import AesMixError, CorrectnessError, InputError, PaddingError
from aesmix.gf256 import MUL_CONSTANTS, format_table, generate_table
from aesmix.keyschedule import expand_key
from aesmix.mixcolumns import DEFAULT_ARCH, Arch, all_backends, get_backend
from aesmix.transforms import build_sbox

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def parse_key(text: str) -> bytes:
    """``@`` followed by exactly 16 ASCII characters, or 32 hex digits."""
    if text.startswith("@"):
        try:
            key = text[1:].encode("ascii")
        except UnicodeEncodeError:
            raise UsageError("ASCII key contains non-ASCII characters") from None
        if len(key) != 16:
            raise UsageError(f"ASCII key must be exactly 16 characters, got {len(key)}")
        return key
    if len(text) != 32:
        raise UsageError(f"hex key must be 32 hex digits, got {len(text)} characters")
    return parse_hex(text)


def parse_hex(text: str) -> bytes:
    try:
        return bytes.fromhex("".join(text.split()))
    except ValueError:
        raise UsageError(f"malformed hex: {text[:40]!r}") from None


def _open_in(path: str) -> BinaryIO:
    return sys.stdin.buffer if path == "-" else open(path, "rb")


def _open_out(path: str) -> BinaryIO:
    return sys.stdout.buffer if path == "-" else open(path, "wb")


def _cmd_crypt(args, direction: Direction) -> int:
    key = parse_key(args.key)
    backend = get_backend(args.arch)
    padding = Padding(args.padding)
    ks = expand_key(key)
    if args.hex:
        text = sys.stdin.read() if args.inp == "-" else args.inp
        data = parse_hex(text)
        out = process_blocks(data, ks, direction, backend, padding)
        dst = _open_out(args.out)
        try:
            dst.write(out.hex().encode() + b"\n")
        finally:
            if dst is not sys.stdout.buffer:
                dst.close()
        return EXIT_OK
    src = _open_in(args.inp)
    dst = _open_out(args.out)
    try:
        stream_process(src, dst, ks, direction, backend, padding)
    finally:
        if src is not sys.stdin.buffer:
            src.close()
        if dst is not sys.stdout.buffer:
            dst.close()
        else:
            dst.flush()
    return EXIT_OK


def _cmd_kat(args) -> int:
    results = verify.run_kat(all_backends())
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}  {r.vector:<22} {r.backend:<8} "
              f"encrypt={'ok' if r.encrypt_ok else 'BAD'} decrypt={'ok' if r.decrypt_ok else 'BAD'}")
    rep = verify.published_rendering_report()
    print(f"note  {rep['vector']}: computed {rep['computed_hex']} "
          f"renders as {rep['computed_rendering']!r}; published {rep['published_rendering']!r}; "
          f"{'agrees' if rep['agrees'] else 'does not agree'}")
    failed = [r for r in results if not r.ok]
    if failed:
        first = failed[0]
        print(f"kat failed: {first.vector} on {first.backend}", file=sys.stderr)
        return EXIT_FAIL
    print(f"kat: {len(results)} checks passed")
    return EXIT_OK


def _cmd_selftest(args) -> int:
    checks = verify.run_selftest(all_backends(), roundtrips=args.blocks, seed=args.seed)
    for c in checks:
        print(f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f"  {c.detail}" if c.detail else ""))
    failed = [c for c in checks if not c.ok]
    if failed:
        print(f"selftest failed: {failed[0].name}: {failed[0].detail}", file=sys.stderr)
        return EXIT_FAIL
    print(f"selftest: {len(checks)} checks passed")
    return EXIT_OK


def _cmd_bench(args) -> int:
    try:
        cfg = bench.BenchConfig(
            backends=tuple(args.arch or Arch),
            block_count=args.blocks,
            warmup_blocks=args.warmup,
            repetitions=args.repetitions,
            seed=args.seed,
        )
    except InputError as e:
        raise UsageError(str(e)) from None
    try:
        report = bench.run_bench(cfg)
    except CorrectnessError as e:
        print(f"bench refused: {e}", file=sys.stderr)
        return EXIT_FAIL
    dst = _open_out(args.out)
    try:
        dst.write(bench.emit_report(report, args.format))
    finally:
        if dst is not sys.stdout.buffer:
            dst.close()
    return EXIT_OK


def _cmd_dump(args) -> int:
    if args.table is not None:
        c = int(args.table, 16)
        if c not in MUL_CONSTANTS:
            raise UsageError(f"no table for 0x{c:02X}")
        entries = generate_table(c).entries
    else:
        entries = build_sbox().table(args.inverse_sbox).tobytes()
    print(format_table(entries))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="aesmix",
        description="AES-128 with selectable MixColumns multiplier architecture.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("encrypt", "decrypt"):
        sp = sub.add_parser(name, help=f"{name} data (ECB)")
        sp.add_argument("--arch", choices=[a.value for a in Arch], default=DEFAULT_ARCH.value)
        sp.add_argument("--key", required=True, help="32 hex digits, or @ followed by 16 ASCII chars")
        sp.add_argument("--in", dest="inp", default="-",
                        help="input path or - for stdin; with --hex, the hex data itself")
        sp.add_argument("--out", default="-", help="output path or - for stdout")
        sp.add_argument("--hex", action="store_true", help="hex input and hex output")
        sp.add_argument("--padding", choices=[m.value for m in Padding], default="pkcs7")

    sub.add_parser("kat", help="run the embedded known-answer vectors on every backend")

    sp = sub.add_parser("selftest", help="exhaustive multiplier check plus random roundtrips")
    sp.add_argument("--blocks", type=int, default=200, help="random roundtrips")
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("bench", help="throughput and footprint per backend")
    sp.add_argument("--arch", action="append", choices=[a.value for a in Arch],
                    help="backend to include (repeatable; default all)")
    sp.add_argument("--blocks", type=int, default=10_000)
    sp.add_argument("--warmup", type=int, default=256)
    sp.add_argument("--repetitions", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=["csv", "table", "json"], default="csv")
    sp.add_argument("--out", default="-")

    sp = sub.add_parser("dump", help="print a multiplication table or the S-box as 16x16 hex")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--table", metavar="HEX", help="constant: 01 02 03 09 0b 0d 0e")
    g.add_argument("--sbox", action="store_true")
    g.add_argument("--inverse-sbox", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "encrypt": lambda a: _cmd_crypt(a, Direction.ENCRYPT),
        "decrypt": lambda a: _cmd_crypt(a, Direction.DECRYPT),
        "kat": _cmd_kat,
        "selftest": _cmd_selftest,
        "bench": _cmd_bench,
        "dump": _cmd_dump,
    }
    try:
        return handlers[args.command](args)
    except (UsageError, binascii.Error) as e:
        print(f"aesmix: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        if isinstance(e, (PaddingError, InputError)):
            print(f"aesmix: data error: {e}", file=sys.stderr)
            return EXIT_FAIL
        print(f"aesmix: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (AesMixError, OSError) as e:
        print(f"aesmix: error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
