"""Command-line front end: encode/decode containers, answer queries,
report bit budgets, and run the fuzz suites.

Exit codes: 0 success, 1 usage, 2 parse, 3 precondition, 4 corruption,
5 fuzz failure.
"""

import argparse
import sys

from .arrays import parse_array_text
from .colored import colored_size_bound, decode_colored, encode_colored
from .container import (SCHEME_COLORED, SCHEME_GENERAL, SCHEME_JOINT,
                        SCHEME_IDS, deserialize, serialize)
from .errors import CorruptionError, ParseError, PreconditionError, RangeError
from .fuzz import run_fuzz
from .general import LOG2_13, decode_general, encode_general
from .joint import decode_joint, encode_joint
from .queries import TREE_QUERIES
from .trees import build_max_heap, build_min_heap, colorize, tree_to_text

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_CORRUPTION = 4
EXIT_FUZZ = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print("error: %s" % message, file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser():
    parser = _Parser(prog="nlvcodec",
                     description="Near-entropy-optimal encodings for "
                                 "next/previous larger/smaller value queries.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode an integer array file")
    p.add_argument("--scheme", required=True,
                   choices=["joint", "colored", "general"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)

    p = sub.add_parser("decode", help="validate a container, optionally dump trees")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--dump-trees", action="store_true")

    p = sub.add_parser("query", help="answer a query from a container alone")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--kind", required=True, choices=["psv", "plv", "nsv", "nlv"])
    p.add_argument("--index", required=True, type=int)

    p = sub.add_parser("stats", help="report payload bits vs. the size bound")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("fuzz", help="randomized/exhaustive self checks")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=50)
    p.add_argument("--alphabet", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")

    return parser


def _read_array(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_array_text(fh.read())


def _bound_text(scheme, n):
    if scheme == SCHEME_JOINT:
        return 3 * n - 1, "3n-1"
    if scheme == SCHEME_COLORED:
        return colored_size_bound(n), "(2+log2 3)n"
    return LOG2_13 * n, "log2(13) n"


def _stats_line(scheme, n, bits):
    bound, label = _bound_text(scheme, n)
    return ("n=%d scheme=%s payload=%d bits bits/n=%.4f bound=%.2f (%s)"
            % (n, SCHEME_IDS[scheme], bits, bits / n, bound, label))


def cmd_encode(args):
    a = _read_array(args.infile)
    if args.scheme == "general":
        enc = encode_general(a)
        scheme = SCHEME_GENERAL
    else:
        bad = a.has_consecutive_equal()
        if bad is not None:
            print("error: scheme %s requires no consecutive equal elements; "
                  "A[%d] == A[%d]" % (args.scheme, bad, bad + 1), file=sys.stderr)
            return EXIT_PRECONDITION
        min_t = build_min_heap(a)
        max_t = build_max_heap(a)
        if args.scheme == "joint":
            enc = encode_joint(min_t, max_t)
            scheme = SCHEME_JOINT
        else:
            enc = encode_colored(colorize(min_t, a), colorize(max_t, a))
            scheme = SCHEME_COLORED
    with open(args.outfile, "wb") as fh:
        fh.write(serialize(enc))
    print(_stats_line(scheme, a.n, enc.payload_bits()))
    return EXIT_OK


def _load_container(path):
    with open(path, "rb") as fh:
        return deserialize(fh.read())


def cmd_decode(args):
    enc = _load_container(args.infile)
    scheme = {"JointEncoding": SCHEME_JOINT, "ColoredEncoding": SCHEME_COLORED,
              "GeneralEncoding": SCHEME_GENERAL}[type(enc).__name__]
    print("scheme=%s n=%d payload=%d bits"
          % (SCHEME_IDS[scheme], enc.n, enc.payload_bits()))
    if scheme == SCHEME_JOINT:
        min_t, max_t = decode_joint(enc)
        if args.dump_trees:
            print("min: %s" % tree_to_text(min_t))
            print("max: %s" % tree_to_text(max_t))
    elif scheme == SCHEME_COLORED:
        cmin, cmax = decode_colored(enc)
        if args.dump_trees:
            print("min: %s" % tree_to_text(cmin.tree, cmin.is_red))
            print("max: %s" % tree_to_text(cmax.tree, cmax.is_red))
    else:
        qs = decode_general(enc)
        if args.dump_trees:
            print("c: %s" % "".join(map(str, qs.runs.c_bits)))
            print("min: %s" % tree_to_text(qs.cmin.tree, qs.cmin.is_red))
            print("max: %s" % tree_to_text(qs.cmax.tree, qs.cmax.is_red))
    return EXIT_OK


def cmd_query(args):
    enc = _load_container(args.infile)
    kind, i = args.kind, args.index
    name = type(enc).__name__
    if name == "JointEncoding":
        if kind not in ("psv", "plv"):
            print("error: scheme 1 answers psv/plv only", file=sys.stderr)
            return EXIT_USAGE
        min_t, max_t = decode_joint(enc)
        tree = min_t if kind == "psv" else max_t
        if not 1 <= i <= enc.n:
            print("error: index %d out of range 1..%d" % (i, enc.n),
                  file=sys.stderr)
            return EXIT_USAGE
        print(tree.parent[i])
        return EXIT_OK
    if name == "ColoredEncoding":
        cmin, cmax = decode_colored(enc)
        tree = cmin if kind in ("psv", "nsv") else cmax
        print(TREE_QUERIES[kind](tree, i))
        return EXIT_OK
    qs = decode_general(enc)
    print(qs.query(kind, i))
    return EXIT_OK


def cmd_stats(args):
    enc = _load_container(args.infile)
    scheme = {"JointEncoding": SCHEME_JOINT, "ColoredEncoding": SCHEME_COLORED,
              "GeneralEncoding": SCHEME_GENERAL}[type(enc).__name__]
    print(_stats_line(scheme, enc.n, enc.payload_bits()))
    return EXIT_OK


def cmd_fuzz(args):
    report = run_fuzz(args.count, args.max_n, args.alphabet, args.seed,
                      exhaustive=args.exhaustive, log=print)
    return EXIT_OK if report.ok else EXIT_FUZZ


def main(argv=None):
    args = _build_parser().parse_args(argv)
    handlers = {"encode": cmd_encode, "decode": cmd_decode,
                "query": cmd_query, "stats": cmd_stats, "fuzz": cmd_fuzz}
    try:
        return handlers[args.command](args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print("precondition error: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION
    except CorruptionError as exc:
        print("corruption error: %s" % exc, file=sys.stderr)
        return EXIT_CORRUPTION
    except RangeError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
