"""Command-line front end.

Settings are resolved in increasing priority: built-in defaults, a
``key=value`` config file (``--config``), ``HOOKVAN_*`` environment
variables, then command-line flags.  Exit codes: 0 success, 1 domain error,
2 usage error, 3 a sweep or example check failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, fields
from typing import Any, Sequence

from . import verify
from .abacus import core_and_quotient, core_tower
from .blocks import block_data_alt, block_data_sym
from .characters import CharacterSession, degree
from .partitions import format_partition, parse_partition
from .sym_groups import nu_p, parse_cycle_type
from .vanishing import (
    compare_profiles,
    determine_alt_data,
    estimate_weights_alt,
    profile_alt,
    profile_sym,
    recover_weights_sym,
    van_pow,
)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_SWEEP = 0, 1, 2, 3


@dataclass
class Config:
    n_max: int | None = None
    brute_force_bound: int = verify.BRUTE_FORCE_BOUND
    cache_cap: int = 2_000_000
    format: str = "text"
    workers: int = 1
    budget: float | None = None
    seed: int = 0

    def validate(self) -> "Config":
        if self.format not in ("text", "json", "csv"):
            raise ValueError(f"format must be text, json or csv, not {self.format!r}")
        for name in ("n_max", "brute_force_bound", "cache_cap", "workers", "budget"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"{name} must be positive, got {v}")
        return self

    def update(self, values: dict[str, Any], source: str) -> None:
        known = {f.name: f for f in fields(self)}
        for key, raw in values.items():
            key = key.strip().lower().replace("-", "_")
            if key not in known:
                raise ValueError(f"unknown setting {key!r} in {source}")
            setattr(self, key, _coerce(key, raw))


def _coerce(key: str, raw):
    if raw is None or not isinstance(raw, str):
        return raw
    raw = raw.strip()
    if key == "format":
        return raw
    if raw.lower() in ("", "none"):
        return None
    return float(raw) if key == "budget" else int(raw)


def read_config_file(path: str) -> dict[str, str]:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            k, v = line.split("=", 1)
            out[k.strip()] = v.strip()
    return out


def resolve_config(args: argparse.Namespace, environ=os.environ) -> Config:
    cfg = Config()
    if getattr(args, "config", None):
        cfg.update(read_config_file(args.config), args.config)
    env = {k[len("HOOKVAN_"):]: v for k, v in environ.items()
           if k.startswith("HOOKVAN_") and k != "HOOKVAN_DISABLE_NUMBA"}
    cfg.update(env, "environment")
    cfg.update({k: getattr(args, k) for k in ("n_max", "cache_cap", "format", "workers", "budget", "seed")
                if getattr(args, k, None) is not None}, "command line")
    return cfg.validate()


# -- commands ------------------------------------------------------------------
# Each returns (payload, text).  JSON numbers that can grow are decimal strings.

def _p(s: str):
    return parse_partition(s)


def cmd_degree(a, cfg, session):
    lam = _p(a.partition)
    d = degree(lam)
    return {"partition": format_partition(lam), "degree": str(d)}, str(d)


def cmd_value(a, cfg, session):
    lam, t = _p(a.partition), parse_cycle_type(a.cycle_type)
    v = session.value(lam, t)
    return {"partition": format_partition(lam), "cycle_type": format_partition(t), "value": str(v)}, str(v)


def cmd_core(a, cfg, session):
    cq = core_and_quotient(_p(a.partition), a.e)
    return {"core": format_partition(cq.core), "weight": cq.weight}, format_partition(cq.core)


def cmd_quotient(a, cfg, session):
    cq = core_and_quotient(_p(a.partition), a.e)
    quot = [format_partition(q) for q in cq.quotient]
    return {"core": format_partition(cq.core), "quotient": quot, "weight": cq.weight}, " | ".join(quot)


def cmd_tower(a, cfg, session):
    t = core_tower(_p(a.partition), a.e)
    d = json.loads(t.to_json())
    text = "\n".join(f"T_{k}: " + " | ".join(row) for k, row in enumerate(d["layers"]))
    return d, text or "T_0: -"


def cmd_weights(a, cfg, session):
    lam = _p(a.partition)
    if a.e < 2:
        raise ValueError("e must be at least 2")
    out = {}
    q = a.e
    while q <= max(lam.n, 1):
        out[str(q)] = core_and_quotient(lam, q).weight
        q *= a.e
    return {"partition": format_partition(lam), "weights": out}, "\n".join(f"w_{q} = {w}" for q, w in out.items())


def cmd_block(a, cfg, session):
    lam = _p(a.partition)
    bd = block_data_alt(lam, a.p) if a.alt else block_data_sym(lam, a.p)
    d = bd.to_dict()
    return d, "\n".join(f"{k}: {v}" for k, v in d.items())


def _profile(lam, p, alt, session):
    return profile_alt(lam, p, session) if alt else profile_sym(lam, p, session)


def cmd_profile(a, cfg, session):
    prof = _profile(_p(a.partition), a.p, a.alt, session)
    d = prof.to_dict()
    return d, "\n".join(d["zeros"]) if d["zeros"] else "(no zeros)"


def cmd_recover_weights(a, cfg, session):
    prof = profile_sym(_p(a.partition), a.p, session)
    ws = {str(a.p**i): w for i, w in recover_weights_sym(prof).items()}
    return {"weights": ws}, "\n".join(f"w_{q} = {w}" for q, w in ws.items())


def cmd_alt_estimate(a, cfg, session):
    prof = profile_alt(_p(a.partition), 2, session)
    est = estimate_weights_alt(prof, improved=not a.basic)
    rep = determine_alt_data(est)
    d = est.to_dict() | rep.to_dict()
    text = [f"w_hat: {d['w_hat']}", f"nu_hat = {est.nu_hat}, d_hat = {est.d_hat}, h_hat = {est.h_hat}",
            f"degree 2-part in {list(rep.degree_2part)}", f"defect in {list(rep.defect)}",
            f"height in {list(rep.height)}"]
    return d, "\n".join(text)


def cmd_compare(a, cfg, session):
    lam, mu = _p(a.a), _p(a.b)
    pa, pb = _profile(lam, a.p, a.alt, session), _profile(mu, a.p, a.alt, session)
    cmp = compare_profiles(pa, pb)
    if a.alt:
        nu_a, nu_b = block_data_alt(lam, a.p).nu_p_degree, block_data_alt(mu, a.p).nu_p_degree
    else:
        nu_a, nu_b = nu_p(degree(lam), a.p), nu_p(degree(mu), a.p)
    d = {"relation": cmp.relation, "mandated": cmp.mandated, "nu_a": nu_a, "nu_b": nu_b,
         "holds": cmp.holds(nu_a, nu_b)}
    return d, f"{cmp.relation}: {cmp.mandated} (nu = {nu_a}, {nu_b}; {'holds' if d['holds'] else 'VIOLATED'})"


def cmd_vanpow(a, cfg, session):
    zs = sorted((format_partition(t) for t in van_pow(_p(a.partition), "A" if a.alt else "S", session)),
                key=lambda s: [-int(x) for x in s.split(",")])
    return {"zeros": zs}, "\n".join(zs) if zs else "(no zeros)"


def _reports_payload(reports):
    return {"ok": all(r.ok for r in reports), "reports": [r.to_dict() for r in reports]}


def cmd_verify(a, cfg, session):
    primes = [int(x) for x in a.primes.split(",")] if a.primes else None
    if a.theorem == "all":
        reports = []
        for name, sw in verify.SWEEPS.items():
            n_max = sw.n_max if cfg.n_max is None else min(cfg.n_max, sw.n_max)
            reports.append(verify.run_sweep(name, n_max, primes, cfg.workers, cfg.budget, cfg.seed))
        reports.append(verify.reproduce_examples())
    elif a.theorem == "examples":
        reports = [verify.reproduce_examples()]
    else:
        reports = [verify.run_sweep(a.theorem, cfg.n_max, primes, cfg.workers, cfg.budget, cfg.seed)]
    return _reports_payload(reports), "\n".join(r.summary() for r in reports)


def cmd_examples(a, cfg, session):
    r = verify.reproduce_examples()
    return _reports_payload([r]), "\n".join(r.notes + [r.summary()])


COMMANDS = {
    "degree": cmd_degree,
    "value": cmd_value,
    "core": cmd_core,
    "quotient": cmd_quotient,
    "tower": cmd_tower,
    "weights": cmd_weights,
    "block": cmd_block,
    "profile": cmd_profile,
    "recover-weights": cmd_recover_weights,
    "alt-estimate": cmd_alt_estimate,
    "compare": cmd_compare,
    "vanpow": cmd_vanpow,
    "verify": cmd_verify,
    "examples": cmd_examples,
}


def _positive(kind):
    def conv(s):
        v = kind(s)
        if v <= 0:
            raise argparse.ArgumentTypeError(f"must be positive: {s}")
        return v
    return conv


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("text", "json", "csv"))
    common.add_argument("--n-max", type=_positive(int), dest="n_max")
    common.add_argument("--workers", type=_positive(int))
    common.add_argument("--cache-cap", type=_positive(int), dest="cache_cap")
    common.add_argument("--budget", type=_positive(float), help="seconds per sweep")
    common.add_argument("--seed", type=int)
    common.add_argument("--config", help="key=value settings file")

    parser = argparse.ArgumentParser(prog="hookvan", parents=[common],
                                     description="Vanishing of symmetric and alternating group characters on Sylow subgroups.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_, *args):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for arg, kw in args:
            sp.add_argument(arg, **kw)
        return sp

    lam = ("partition", {"help": "e.g. 6,3,3,2 or 2^3,1 or - for empty"})
    e_arg = ("e", {"type": int})
    p_arg = ("p", {"type": int})
    alt = ("--alt", {"action": "store_true", "help": "work in A_n"})
    add("degree", "chi^lam(1) by the hook length formula", lam)
    add("value", "chi^lam on a cycle type", lam, ("cycle_type", {}))
    add("core", "e-core", lam, e_arg)
    add("quotient", "e-quotient", lam, e_arg)
    add("tower", "e-core tower", lam, e_arg)
    add("weights", "e^i-weights for every e^i <= n", lam, e_arg)
    add("block", "p-block data", lam, p_arg, alt)
    add("profile", "vanishing p-power cycle types", lam, p_arg, alt)
    add("recover-weights", "p-power weights read off the S_n profile", lam, p_arg)
    add("alt-estimate", "A_n weight estimates and two-option data at p = 2", lam,
        ("--basic", {"action": "store_true", "help": "skip the triangular-number correction"}))
    add("compare", "compare two profiles and the inequality they force",
        ("a", {}), ("b", {}), p_arg, alt)
    add("vanpow", "vanishing prime-power-order cycle types", lam, alt)
    add("verify", "run a sweep, 'all' sweeps, or 'examples'",
        ("theorem", {"choices": [*verify.SWEEPS, "all", "examples"], "metavar": "theorem"}),
        ("--primes", {"help": "comma-separated primes overriding the default set"}))
    add("examples", "replay the named examples")
    return parser


def _render(payload, text: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, default=str)
    if fmt == "csv":
        return _to_csv(payload)
    return text


def _to_csv(payload) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "reports" in payload:
        w.writerow(["theorem", "n_min", "n_max", "primes", "checked", "failures", "partial", "wall_time"])
        for r in payload["reports"]:
            w.writerow([r["theorem"], *r["n_range"], " ".join(map(str, r["primes"])), r["checked"],
                        len(r["failures"]), r["partial"], f"{r['wall_time']:.3f}"])
    elif "zeros" in payload and isinstance(payload["zeros"], list):
        w.writerow(["zero_type"])
        for z in payload["zeros"]:
            w.writerow([z])
    else:
        flat = {k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in payload.items()}
        w.writerow(flat)
        w.writerow(flat.values())
    return buf.getvalue().rstrip("\n")


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None, environ=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = resolve_config(args, os.environ if environ is None else environ)
    except (ValueError, OSError) as exc:
        print(f"hookvan: configuration error: {exc}", file=stderr)
        return EXIT_USAGE
    session = CharacterSession(cache_cap=cfg.cache_cap)
    try:
        payload, text = COMMANDS[args.command](args, cfg, session)
    except (ValueError, KeyError) as exc:
        print(f"hookvan: error: {exc}", file=stderr)
        return EXIT_DOMAIN
    print(_render(payload, text, cfg.format), file=stdout)
    if "reports" in payload and not payload["ok"]:
        return EXIT_SWEEP
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
