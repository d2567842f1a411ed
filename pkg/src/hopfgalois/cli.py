"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 unknown name / uncovered order,
4 internal consistency failure.  Output is deterministic and byte-identical
across --jobs settings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, catalog
from .cache import ENV_CACHE_PATH, ResultCache
from .groups import GroupError
from .holomorph import ConsistencyError, count_R, direct_R, regular_subgroups_iso_to
from .obstruction import census, char_obstruction, empty_pairs_for_order
from .partitions import (
    Partition,
    alpha,
    canonical_tuples,
    format_ratio,
    nc_np_table,
)
from .subgroups import index_two_count, lattice_summary, z2_u2

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CATALOG = 3
EXIT_CONSISTENCY = 4


def _parse_partition(text: str) -> Partition:
    try:
        parts = tuple(int(v) for v in text.split(","))
        return Partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfgalois",
        description="Exact Hopf-Galois structure counts and emptiness certificates "
                    "for small Galois groups.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--cache", metavar="PATH",
                        default=os.environ.get(ENV_CACHE_PATH),
                        help="enable the on-disk result cache at PATH "
                             f"(default: ${ENV_CACHE_PATH})")
    parser.add_argument("--verify-cache", action="store_true",
                        help="recompute a 10%% sample of cache hits and fail on mismatch")
    parser.add_argument("--jobs", type=int, default=1, metavar="K",
                        help="worker parallelism; never changes output bytes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="full |R(G,[M])| table for one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--witnesses", action="store_true",
                   help="also list one obstruction witness per certified-empty cell")

    p = sub.add_parser("obstruct", help="characteristic-subgroup emptiness check")
    p.add_argument("--g", required=True)
    p.add_argument("--m", required=True)

    p = sub.add_parser("hgs", help="|R(G,[M])| via the holomorph count translation")
    p.add_argument("--g", required=True)
    p.add_argument("--m", required=True)

    p = sub.add_parser("direct-r", help="direct enumeration of R(G) (order <= 8)")
    p.add_argument("--g", required=True)
    p.add_argument("--witnesses", action="store_true")

    p = sub.add_parser("i2", help="number of index-2 subgroups")
    p.add_argument("--g", required=True)

    p = sub.add_parser("z2u2", help="count groups of an order with 0 / 1 index-2 subgroups")
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("lattice", help="per-order subgroup/normal/characteristic counts")
    p.add_argument("--g", required=True)

    p = sub.add_parser("alpha", help="subgroups of one abelian p-group type in another")
    p.add_argument("--lambda", dest="lam", type=_parse_partition, required=True)
    p.add_argument("--mu", type=_parse_partition, required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("canonical", help="canonical tuples of a partition")
    p.add_argument("--lambda", dest="lam", type=_parse_partition, required=True)
    p.add_argument("--r", type=int, default=None)

    p = sub.add_parser("ncnp", help="counts of partitions with repeated characteristic orders")
    p.add_argument("--max", dest="max_n", type=int, required=True)

    p = sub.add_parser("catalog", help="catalog inspection")
    p.add_argument("action", choices=("list",))
    p.add_argument("--order", type=int, default=None)

    return parser


def _run(args, out) -> int:
    cache = ResultCache(args.cache, __version__) if args.cache else None

    def cached(operation: str, arg_string: str, compute):
        if cache is None:
            return compute()
        key = cache.make_key(operation, arg_string)
        hit = cache.get(key)
        if hit is not None:
            return hit
        value = compute()
        cache.put(key, value)
        return value

    if args.command == "census":
        doc = cached("census", f"order={args.order}",
                     lambda: json.loads(census(args.order, jobs=args.jobs).to_json()))
        table = _census_from_doc(doc)
        if args.format == "csv":
            out.write(table.to_csv())
        else:
            out.write(table.to_json())
        if args.witnesses:
            groups = {g.name: g for g in catalog.groups_of_order(args.order)}
            for i, gname in enumerate(table.g_names):
                for j, mname in enumerate(table.m_names):
                    if table.provenance[i][j] == "obstruction-zero":
                        rep = char_obstruction(groups[gname], groups[mname])
                        out.write(f"# ({gname},{mname}) {rep.summary()}\n")
        if cache is not None and args.verify_cache:
            return _verify_cache(cache, out, args)
        return EXIT_OK

    if args.command == "obstruct":
        rep = char_obstruction(catalog.lookup(args.g), catalog.lookup(args.m))
        out.write(rep.summary() + "\n")
        return EXIT_OK

    if args.command == "hgs":
        value = cached("hgs", f"g={args.g}:m={args.m}",
                       lambda: count_R(args.g, args.m))
        out.write(f"{value}\n")
        if cache is not None and args.verify_cache:
            return _verify_cache(cache, out, args)
        return EXIT_OK

    if args.command == "direct-r":
        records = direct_R(catalog.lookup(args.g))
        by_class: dict[str, int] = {}
        for r in records:
            by_class[r.iso_class] = by_class.get(r.iso_class, 0) + 1
        for name in sorted(by_class):
            out.write(f"{name},{by_class[name]}\n")
        out.write(f"total,{len(records)}\n")
        if args.witnesses:
            for r in records:
                out.write(r.to_text())
        return EXIT_OK

    if args.command == "i2":
        out.write(f"{index_two_count(catalog.lookup(args.g))}\n")
        return EXIT_OK

    if args.command == "z2u2":
        z2, u2 = z2_u2(catalog.groups_of_order(args.order))
        out.write(f"z2={z2} u2={u2}\n")
        return EXIT_OK

    if args.command == "lattice":
        out.write(lattice_summary(catalog.lookup(args.g)).to_text())
        return EXIT_OK

    if args.command == "alpha":
        out.write(f"{alpha(args.lam, args.mu, args.p)}\n")
        return EXIT_OK

    if args.command == "canonical":
        rs = range(args.lam.n + 1) if args.r is None else [args.r]
        for r in rs:
            for t in canonical_tuples(args.lam, r):
                out.write(f"r={r}: ({','.join(map(str, t.entries))})\n")
        return EXIT_OK

    if args.command == "ncnp":
        out.write("n,nc,np,ratio\n")
        for (n, nc, np_, q) in nc_np_table(args.max_n):
            out.write(f"{n},{nc},{np_},{format_ratio(q)}\n")
        return EXIT_OK

    if args.command == "catalog":
        entries = (catalog.entries_of_order(args.order) if args.order is not None
                   else catalog.all_entries())
        for e in entries:
            out.write(f"{e.name},{e.order},{e.recipe}\n")
        return EXIT_OK

    raise AssertionError("unreachable")


def _census_from_doc(doc):
    from .obstruction import CensusTable
    return CensusTable(
        doc["order"], tuple(doc["g_names"]), tuple(doc["m_names"]),
        tuple(tuple(r) for r in doc["cells"]),
        tuple(tuple(r) for r in doc["provenance"]))


def _verify_cache(cache: ResultCache, out, args) -> int:
    def recompute(key: str):
        op, _, rest = key.partition(":")
        arg_string = rest.rsplit(":v", 1)[0]
        kw = dict(part.split("=", 1) for part in arg_string.split(":"))
        if op == "census":
            return json.loads(census(int(kw["order"]), jobs=args.jobs).to_json())
        if op == "hgs":
            return count_R(kw["g"], kw["m"])
        raise ConsistencyError(f"unknown cache key {key!r}")

    mismatches = cache.verify_sample(recompute)
    if mismatches:
        print(f"cache verification failed for: {mismatches}", file=sys.stderr)
        return EXIT_CONSISTENCY
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args, sys.stdout)
    except catalog.CatalogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CATALOG
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
